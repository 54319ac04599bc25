#pragma once

// Wigner D-functions (explicit factorial sum) and the Gauss hypergeometric
// series 2F1. Both are templated on the real type so the residual engine can
// sample them in extended precision.

#include "dsem/error.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

namespace dsem {

/// Factorial sums lose accuracy past this in double precision.
inline constexpr int kMaxWignerJ = 30;

template <typename T>
struct WignerArgs {
  int j = 0;
  int mprime = 0;
  int sigma = 0;
  T theta = 0;
  T phi = 0;
};

namespace detail {

template <typename T>
T factorial(int n) {
  T f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<T>(k);
  return f;
}

inline void check_wigner_indices(int j, int mp, int m) {
  if (j < 0 || j > kMaxWignerJ)
    throw Error(ErrorKind::InvalidQuantumNumbers, "j=" + std::to_string(j) + " outside [0, 30]");
  if (std::abs(mp) > j || std::abs(m) > j)
    throw Error(ErrorKind::InvalidQuantumNumbers,
                "|m'|, |m| must not exceed j (j=" + std::to_string(j) + ", m'=" +
                    std::to_string(mp) + ", m=" + std::to_string(m) + ")");
}

// Term k of the Wigner sum is
//   c_k cos(theta/2)^p_k sin(theta/2)^q_k
// with p_k = 2j - 2k + m - m', q_k = 2k - m + m'.
template <typename T, typename Visit>
void for_each_wigner_term(int j, int mp, int m, Visit&& visit) {
  const T norm = std::sqrt(factorial<T>(j + mp) * factorial<T>(j - mp) * factorial<T>(j + m) *
                           factorial<T>(j - m));
  for (int k = 0; k <= 2 * j; ++k) {
    if (j + m - k < 0 || j - k - mp < 0 || k - m + mp < 0) continue;
    const T sign = ((k - m + mp) % 2 == 0) ? T(1) : T(-1);
    const T c = sign * norm /
                (factorial<T>(j + m - k) * factorial<T>(k) * factorial<T>(j - k - mp) *
                 factorial<T>(k - m + mp));
    visit(c, 2 * j - 2 * k + m - mp, 2 * k - m + mp);
  }
}

template <typename T>
T ipow(T x, int n) {
  T r = 1;
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

}  // namespace detail

/// Small Wigner function d^j_{m'm}(theta).
template <typename T>
T wigner_small_d(int j, int mp, int m, T theta) {
  detail::check_wigner_indices(j, mp, m);
  const T c = std::cos(theta / 2);
  const T s = std::sin(theta / 2);
  T sum = 0;
  detail::for_each_wigner_term<T>(j, mp, m, [&](T coef, int p, int q) {
    sum += coef * detail::ipow(c, p) * detail::ipow(s, q);
  });
  return sum;
}

/// d/dtheta of d^j_{m'm}(theta), differentiated term by term.
template <typename T>
T wigner_small_d_derivative(int j, int mp, int m, T theta) {
  detail::check_wigner_indices(j, mp, m);
  const T c = std::cos(theta / 2);
  const T s = std::sin(theta / 2);
  T sum = 0;
  detail::for_each_wigner_term<T>(j, mp, m, [&](T coef, int p, int q) {
    T d = 0;
    if (p > 0) d -= T(p) / 2 * detail::ipow(c, p - 1) * detail::ipow(s, q + 1);
    if (q > 0) d += T(q) / 2 * detail::ipow(c, p + 1) * detail::ipow(s, q - 1);
    sum += coef * d;
  });
  return sum;
}

/// D^j_{m',sigma}(phi, theta, 0) = exp(-i m' phi) d^j_{m' sigma}(theta).
template <typename T>
std::complex<T> wigner_D(const WignerArgs<T>& a) {
  const T d = wigner_small_d(a.j, a.mprime, a.sigma, a.theta);
  return std::polar(d, -static_cast<T>(a.mprime) * a.phi);
}

/// Residuals |lhs - rhs| of the six first-order recurrences linking
/// D_sigma = D^j_{-m,sigma} for sigma = -2..2:
///   d/dθ D_{-1}            = (a D_{-2} - ν D_0)/2
///   (m - cosθ)/sinθ D_{-1} = (a D_{-2} + ν D_0)/2
///   d/dθ D_0               = ν (D_{-1} - D_{+1})/2
///   m/sinθ D_0             = ν (D_{-1} + D_{+1})/2
///   d/dθ D_{+1}            = (ν D_0 - a D_{+2})/2
///   (m + cosθ)/sinθ D_{+1} = (ν D_0 + a D_{+2})/2
/// with ν = sqrt(j(j+1)), a = sqrt((j-1)(j+2)). The common phase exp(i m φ)
/// cancels, so the check runs on the real small-d functions.
template <typename T>
std::array<T, 6> wigner_recurrence_residuals(int j, int m, T theta) {
  if (j < 1 || std::abs(m) > j)
    throw Error(ErrorKind::InvalidQuantumNumbers, "recurrences need j >= 1 and |m| <= j");
  if (!(theta > 0) || !(theta < std::numbers::pi_v<T>))
    throw Error(ErrorKind::AngleOutOfDomain, "theta must lie strictly inside (0, pi)");

  auto D = [&](int sigma) {
    return std::abs(sigma) > j ? T(0) : wigner_small_d(j, -m, sigma, theta);
  };
  auto dD = [&](int sigma) {
    return std::abs(sigma) > j ? T(0) : wigner_small_d_derivative(j, -m, sigma, theta);
  };
  const T nu = std::sqrt(static_cast<T>(j * (j + 1)));
  const T a = std::sqrt(static_cast<T>((j - 1) * (j + 2)));
  const T c = std::cos(theta);
  const T s = std::sin(theta);
  const T mm = static_cast<T>(m);

  return {
      std::abs(dD(-1) - (a * D(-2) - nu * D(0)) / 2),
      std::abs((mm - c) / s * D(-1) - (a * D(-2) + nu * D(0)) / 2),
      std::abs(dD(0) - nu * (D(-1) - D(1)) / 2),
      std::abs(mm / s * D(0) - nu * (D(-1) + D(1)) / 2),
      std::abs(dD(1) - (nu * D(0) - a * D(2)) / 2),
      std::abs((mm + c) / s * D(1) - (nu * D(0) + a * D(2)) / 2),
  };
}

// ---------------------------------------------------------------------------
// Gauss hypergeometric series

template <typename T>
struct HypParams {
  std::complex<T> alpha;
  std::complex<T> beta;
  std::complex<T> gamma;
  std::complex<T> z;
};

namespace detail {

template <typename T>
bool is_nonpositive_integer(const std::complex<T>& x, int& n) {
  if (x.imag() != 0 || x.real() > 0 || x.real() != std::floor(x.real())) return false;
  n = static_cast<int>(-x.real());
  return true;
}

inline constexpr int kMaxSeriesTerms = 100000;

// Accumulator for terminating series. Polynomials in |z| up to 2 cancel by
// several orders of magnitude, so the summands are carried in a wider type.
template <typename T>
struct wide {
  using type = long double;
};
#if defined(__SIZEOF_FLOAT128__) && !defined(__clang__)
template <>
struct wide<long double> {
  using type = __float128;
};
#endif
template <typename T>
using wide_t = typename wide<T>::type;

template <typename W, typename T>
std::complex<W> widen(const std::complex<T>& x) {
  return {W(x.real()), W(x.imag())};
}

template <typename T>
std::complex<T> terminating_sum(const HypParams<T>& p, int n) {
  using W = wide_t<T>;
  using CW = std::complex<W>;
  const CW a = widen<W>(p.alpha), b = widen<W>(p.beta), c = widen<W>(p.gamma), z = widen<W>(p.z);
  CW term(1), sum(1);
  for (int k = 0; k < n; ++k) {
    const CW ck = c + CW(W(k));
    if (ck == CW(0))
      throw Error(ErrorKind::GammaPole, "gamma + " + std::to_string(k) + " = 0 before termination");
    term = term * (a + CW(W(k))) * (b + CW(W(k))) / (ck * CW(W(k + 1))) * z;
    sum = sum + term;
  }
  return {T(sum.real()), T(sum.imag())};
}

}  // namespace detail

/// 2F1(alpha, beta; gamma; z). Terminating parameters (alpha or beta equal to
/// -n) give the exact (n+1)-term polynomial, summed in fixed left-to-right
/// order in a wider type; otherwise the series is summed to convergence for
/// |z| < 1.
template <typename T>
std::complex<T> hypergeometric_F(const HypParams<T>& p) {
  using C = std::complex<T>;
  int n = 0;
  const bool terminating =
      detail::is_nonpositive_integer(p.alpha, n) || detail::is_nonpositive_integer(p.beta, n);
  if (terminating) return detail::terminating_sum(p, n);
  if (!(std::abs(p.z) < 1))
    throw Error(ErrorKind::Divergence, "non-terminating 2F1 series needs |z| < 1");

  C term(1);
  C sum(1);
  for (int k = 0; k < detail::kMaxSeriesTerms; ++k) {
    const C denom = (p.gamma + T(k)) * T(k + 1);
    if (p.gamma + T(k) == C(0))
      throw Error(ErrorKind::GammaPole, "gamma + " + std::to_string(k) + " = 0");
    term *= (p.alpha + T(k)) * (p.beta + T(k)) / denom * p.z;
    sum += term;
    if (std::abs(term) <= std::numeric_limits<T>::epsilon() * std::abs(sum)) return sum;
  }
  throw Error(ErrorKind::Divergence, "2F1 series did not converge");
}

/// d/dz 2F1 = (alpha beta / gamma) 2F1(alpha+1, beta+1; gamma+1; z).
template <typename T>
std::complex<T> hypergeometric_dF(const HypParams<T>& p) {
  using C = std::complex<T>;
  const C ab = p.alpha * p.beta;
  if (ab == C(0)) return C(0);
  if (p.gamma == C(0)) throw Error(ErrorKind::GammaPole, "gamma = 0");
  return ab / p.gamma *
         hypergeometric_F(HypParams<T>{p.alpha + T(1), p.beta + T(1), p.gamma + T(1), p.z});
}

}  // namespace dsem
