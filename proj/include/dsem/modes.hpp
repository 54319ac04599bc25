#pragma once

// Exact electromagnetic modes on the non-static de Sitter patch.
//
// For quantum numbers (j, m, n) the conformal-time radial problem
//   R'' + (ω^2 - j(j+1)/sin^2 r) R = 0,   ω = n + 1 + j,
// is solved by R = z^{j+1} (1-z)^{-ω/2} 2F1(-n, j+1; 2j+2; z), z = 1 - e^{-2ir}.
// Everything else (F2, F, G, the MO vector, the DKP components and the
// electromagnetic potentials) is an explicit closed form over R and R'.
//
// Coupling constant convention: b_nu = sqrt(j(j+1)/2) is the only radial
// coupling used here; the Wigner-recurrence ν = sqrt(j(j+1)) stays inside
// special_functions.

#include "dsem/error.hpp"
#include "dsem/geometry.hpp"
#include "dsem/special_functions.hpp"

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace dsem {

template <typename T>
using Vector4 = Eigen::Matrix<std::complex<T>, 4, 1>;
template <typename T>
using Vector10 = Eigen::Matrix<std::complex<T>, 10, 1>;

/// Magnetic: P = (-1)^{j+1}; Electric: P = (-1)^j.
enum class Parity { Magnetic, Electric };

const char* to_string(Parity p);
Parity parse_parity(const std::string& s);

class ModeIndex {
 public:
  /// Throws InvalidQuantumNumbers unless j >= 1, |m| <= j, n >= 0.
  static ModeIndex make(int j, int m, int n, Parity parity);

  int j() const { return j_; }
  int m() const { return m_; }
  int n() const { return n_; }
  Parity parity() const { return parity_; }
  int omega() const { return n_ + 1 + j_; }
  double b_nu() const { return std::sqrt(0.5 * j_ * (j_ + 1)); }
  /// Eigenvalue of spatial inversion, +1 or -1.
  int parity_sign() const;

  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;

 private:
  ModeIndex(int j, int m, int n, Parity p) : j_(j), m_(m), n_(n), parity_(p) {}
  int j_;
  int m_;
  int n_;
  Parity parity_;
};

/// ω = n + 1 + j. Throws InvalidQuantumNumbers for j < 1 or n < 0.
int spectrum(int j, int n);

class RadialSolution {
 public:
  explicit RadialSolution(const ModeIndex& mode);

  const ModeIndex& mode() const { return mode_; }
  int a() const { return mode_.j() + 1; }
  double b() const { return -0.5 * mode_.omega(); }
  /// Polynomial coefficients c_k of f(z) = sum c_k z^k, k = 0..n; c_0 = 1.
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

  template <typename T>
  static std::complex<T> z_of_r(T r) {
    return std::complex<T>(1) - std::polar(T(1), -2 * r);
  }

  template <typename T>
  std::complex<T> f(const std::complex<T>& z) const {
    return hypergeometric_F(params<T>(z));
  }

  template <typename T>
  std::complex<T> df(const std::complex<T>& z) const {
    return hypergeometric_dF(params<T>(z));
  }

  /// R(r) for r in (0, pi).
  template <typename T>
  std::complex<T> value(T r) const {
    check_r(r);
    const auto z = z_of_r(r);
    // (1-z)^b = e^{-2irb} = e^{iωr}: 1-z sits on the unit circle, no branch cut.
    return ipow(z, a()) * std::polar(T(1), T(mode_.omega()) * r) * f(z);
  }

  /// dR/dr via dz/dr = 2i(1-z).
  template <typename T>
  std::complex<T> derivative(T r) const {
    check_r(r);
    using C = std::complex<T>;
    const C i(0, 1);
    const C z = z_of_r(r);
    const C one_minus_z = C(1) - z;
    const C dz = T(2) * i * one_minus_z;
    const C za1 = ipow(z, a() - 1);
    const C phase = std::polar(T(1), T(mode_.omega()) * r);
    const C fz = f(z);
    return phase * (T(a()) * za1 * dz * fz + za1 * z * i * T(mode_.omega()) * fz +
                    za1 * z * df(z) * dz);
  }

 private:
  template <typename T>
  HypParams<T> params(const std::complex<T>& z) const {
    return {std::complex<T>(-mode_.n()), std::complex<T>(mode_.j() + 1),
            std::complex<T>(2 * mode_.j() + 2), z};
  }

  template <typename T>
  static std::complex<T> ipow(std::complex<T> z, int k) {
    std::complex<T> r(1);
    for (int i = 0; i < k; ++i) r *= z;
    return r;
  }

  template <typename T>
  static void check_r(T r) {
    if (!(r > 0 && r < std::numbers::pi_v<T>))
      throw Error(ErrorKind::SingularPoint, "radial profile needs r in (0, pi)");
  }

  ModeIndex mode_;
  std::vector<std::complex<double>> coeffs_;
};

inline RadialSolution radial_profile(const ModeIndex& mode) { return RadialSolution(mode); }

/// (G, F, F2) as functions of conformal time τ and r:
///   G  = e^{-iωτ} R
///   F2 = -(1/iω) e^{-iωτ} (b_nu / sin r) R
///   F  =  (1/iω) e^{-iωτ} R'
/// with F1 = (F + G)/2, F3 = (F - G)/2.
class ScalarTriple {
 public:
  explicit ScalarTriple(const ModeIndex& mode) : radial_(mode) {}

  const ModeIndex& mode() const { return radial_.mode(); }
  const RadialSolution& radial() const { return radial_; }

  template <typename T>
  std::complex<T> time_factor(T tau) const {
    return std::polar(T(1), -T(mode().omega()) * tau);
  }

  template <typename T>
  std::complex<T> G(T tau, T r) const {
    return time_factor(tau) * radial_.value(r);
  }

  template <typename T>
  std::complex<T> F2(T tau, T r) const {
    const std::complex<T> i_omega(0, T(mode().omega()));
    return -time_factor(tau) * (T(mode().b_nu()) / std::sin(r)) * radial_.value(r) / i_omega;
  }

  template <typename T>
  std::complex<T> F(T tau, T r) const {
    const std::complex<T> i_omega(0, T(mode().omega()));
    return time_factor(tau) * radial_.derivative(r) / i_omega;
  }

 private:
  RadialSolution radial_;
};

inline ScalarTriple scalar_triple(const ModeIndex& mode) { return ScalarTriple(mode); }

template <typename T>
struct MOField {
  Vector4<T> psi;                      // cyclic basis; psi[0] == 0
  std::array<std::complex<T>, 3> phi;  // (φ1, φ2, φ3)
};

/// (φ1, φ2, φ3) at (t, r) from the scalar profiles.
template <typename T>
std::array<std::complex<T>, 3> mo_profiles(const ScalarTriple& triple, T t, T r) {
  const T tau = conformal_time(t);
  const T ch = std::cosh(t);
  const T scale = T(1) / (ch * ch * std::sin(r));
  const auto F = triple.F(tau, r);
  const auto G = triple.G(tau, r);
  return {(F + G) * scale / T(2), triple.F2(tau, r) * scale, (F - G) * scale / T(2)};
}

/// D_σ = D^j_{-m,σ}(φ, θ, 0) for σ = -1, 0, +1.
template <typename T>
std::array<std::complex<T>, 3> angular_basis(const ModeIndex& mode, T theta, T phi) {
  std::array<std::complex<T>, 3> d;
  for (int s = -1; s <= 1; ++s)
    d[s + 1] = wigner_D(WignerArgs<T>{mode.j(), -mode.m(), s, theta, phi});
  return d;
}

template <typename T>
MOField<T> mo_field(const ScalarTriple& triple, const BasicSpacetimePoint<T>& p) {
  require_interior(p);
  const auto phi = mo_profiles(triple, p.t, p.r);
  const auto D = angular_basis(triple.mode(), p.theta, p.phi);
  MOField<T> out;
  out.phi = phi;
  out.psi << std::complex<T>(0), phi[0] * D[0], phi[1] * D[1], phi[2] * D[2];
  return out;
}

template <typename T>
MOField<T> mo_field(const ModeIndex& mode, const BasicSpacetimePoint<T>& p) {
  return mo_field(ScalarTriple(mode), p);
}

// ---------------------------------------------------------------------------
// DKP components

/// Field-strength components f5..f10 (1-based slots of the returned vector;
/// f1..f4 left zero) from (φ1, φ2, φ3), per parity class.
template <typename T>
Vector10<T> dkp_from_mo(Parity parity, const std::array<std::complex<T>, 3>& phi) {
  using C = std::complex<T>;
  const C i(0, 1);
  Vector10<T> f = Vector10<T>::Zero();
  if (parity == Parity::Magnetic) {
    f[8] = i * phi[1];                    // f9
    f[4] = (phi[0] - phi[2]) / T(2);      // f5
    f[7] = i * (phi[0] + phi[2]) / T(2);  // f8
    f[5] = C(0);                          // f6
    f[6] = -f[4];                         // f7
    f[9] = f[7];                          // f10
  } else {
    f[5] = phi[1];                        // f6
    f[4] = (phi[0] + phi[2]) / T(2);      // f5
    f[7] = i * (phi[0] - phi[2]) / T(2);  // f8
    f[8] = C(0);                          // f9
    f[6] = f[4];                          // f7
    f[9] = -f[7];                         // f10
  }
  return f;
}

/// Inverse map: (φ1, φ2, φ3) from the DKP field-strength components.
template <typename T>
std::array<std::complex<T>, 3> mo_from_dkp(Parity parity, const Vector10<T>& f) {
  const std::complex<T> i(0, 1);
  if (parity == Parity::Magnetic)
    return {f[4] - i * f[7], -i * f[8], -f[4] - i * f[7]};
  return {f[4] - i * f[7], f[5], f[4] + i * f[7]};
}

enum class Gauge { Landau, Lorentz, Gradient };

const char* to_string(Gauge g);

/// Electric-parity 4-potential profiles (g1, g2, g3)(τ, r), f_i = g_i / cosh t.
///
/// Each set is a particular solution driven by (F, F2) plus an optional
/// homogeneous part generated by a conformal Klein-Fock-Gordon scalar
///   g1 = A e^{-iω_h τ} R_h(r) / (cosh t sin r),
/// with g2, g3 obtained by closed-form τ-integration. All integration
/// constants are zero.
class PotentialSet {
 public:
  Gauge gauge() const { return gauge_; }
  const ModeIndex& mode() const { return mode_; }
  std::complex<double> amplitude() const { return amplitude_; }
  int homogeneous_omega() const { return homogeneous_.mode().omega(); }
  /// Gradient sets carry no field strength.
  bool pure_gauge() const { return gauge_ == Gauge::Gradient; }

  template <typename T>
  std::array<std::complex<T>, 3> at(T tau, T r) const {
    using C = std::complex<T>;
    const C i(0, 1);
    const T sr = std::sin(r);
    const T b = T(mode_.b_nu());
    std::array<C, 3> g{C(0), C(0), C(0)};
    if (!pure_gauge()) {
      const T w = T(source_.mode().omega());
      g[1] = i * source_.F(tau, r) / (T(2) * w * sr);
      g[2] = i * source_.F2(tau, r) / (w * sr);
    }
    if (amplitude_ != std::complex<double>(0.0)) {
      const C A(T(amplitude_.real()), T(amplitude_.imag()));
      const int wh = homogeneous_.mode().omega();
      const C R = homogeneous_.value(r);
      const C dR = homogeneous_.derivative(r);
      const C h = A * std::polar(T(1), -T(wh) * tau) * std::cos(tau);
      const C H = A * integrated_time_factor(wh, tau);
      g[0] += h * R / sr;
      g[1] += -b * R / (sr * sr) * H;
      g[2] += (dR / sr - R * std::cos(r) / (sr * sr)) * H;
    }
    return g;
  }

  friend PotentialSet electric_potentials_landau(const ModeIndex& mode);
  friend PotentialSet electric_potentials_lorentz(const ModeIndex& mode,
                                                  std::complex<double> amplitude);
  friend PotentialSet gradient_solution(const ModeIndex& mode, int omega_g);

 private:
  PotentialSet(Gauge gauge, const ModeIndex& mode, std::complex<double> amplitude,
               const ModeIndex& homogeneous)
      : gauge_(gauge), mode_(mode), amplitude_(amplitude), source_(mode),
        homogeneous_(homogeneous) {}

  // ∫ e^{-iωτ} cos τ dτ = (i/2) [e^{-i(ω-1)τ}/(ω-1) + e^{-i(ω+1)τ}/(ω+1)], ω >= 2
  template <typename T>
  static std::complex<T> integrated_time_factor(int omega, T tau) {
    const std::complex<T> i(0, 1);
    const T lo = T(omega - 1);
    const T hi = T(omega + 1);
    return i / T(2) * (std::polar(T(1), -lo * tau) / lo + std::polar(T(1), -hi * tau) / hi);
  }

  Gauge gauge_;
  ModeIndex mode_;
  std::complex<double> amplitude_;
  ScalarTriple source_;
  RadialSolution homogeneous_;
};

/// g1 = 0; ∂τ g2 = (F/2)/sin r, ∂τ g3 = F2/sin r. Electric parity only.
PotentialSet electric_potentials_landau(const ModeIndex& mode);

/// Lorentz gauge: g1 = A e^{-iωτ} R(r)/(cosh t sin r) with the mode's own R,
///   ∂τ g2 = -(b_nu/sin r) g1 + (F/2)/sin r,  ∂τ g3 = ∂r g1 + F2/sin r.
/// amplitude = 0 reproduces the Landau set.
PotentialSet electric_potentials_lorentz(const ModeIndex& mode, std::complex<double> amplitude);

/// Pure-gauge (gradient) solution with KFG frequency omega_g >= j+1:
///   ∂τ g2 = -(b_nu/sin r) g1,  ∂τ g3 = ∂r g1, all field strengths zero.
PotentialSet gradient_solution(const ModeIndex& mode, int omega_g);

template <typename T>
struct DKPField {
  Vector10<T> f;                     // f[0] = f1 ... f[9] = f10
  std::array<std::complex<T>, 3> g;  // potentials, f_i = g_i / cosh t (electric parity)
};

/// Magnetic parity: field strengths from the MO profiles, f1 = f3 = 0,
/// f2 = cosh t sin r φ2 / (2 b_nu), f4 = -f2.
template <typename T>
DKPField<T> dkp_field(const ScalarTriple& triple, const BasicSpacetimePoint<T>& p,
                      const PotentialSet* potentials = nullptr) {
  require_interior(p);
  const ModeIndex& mode = triple.mode();
  DKPField<T> out;
  const T ch = std::cosh(p.t);
  if (mode.parity() == Parity::Magnetic) {
    const auto phi = mo_profiles(triple, p.t, p.r);
    out.f = dkp_from_mo(Parity::Magnetic, phi);
    out.f[1] = ch * std::sin(p.r) * phi[1] / T(2 * mode.b_nu());
    out.f[3] = -out.f[1];
    out.g = {std::complex<T>(0), out.f[1] * ch, std::complex<T>(0)};
    return out;
  }
  if (potentials == nullptr)
    throw Error(ErrorKind::WrongParity, "electric-parity DKP field needs a potential set");
  if (potentials->pure_gauge())
    out.f = Vector10<T>::Zero();
  else
    out.f = dkp_from_mo(Parity::Electric, mo_profiles(triple, p.t, p.r));
  out.g = potentials->at(conformal_time(p.t), p.r);
  out.f[0] = out.g[0] / ch;
  out.f[1] = out.g[1] / ch;
  out.f[2] = out.g[2] / ch;
  out.f[3] = out.f[1];
  return out;
}

/// Convenience overload; electric modes default to Landau-gauge potentials.
template <typename T>
DKPField<T> dkp_field(const ModeIndex& mode, const BasicSpacetimePoint<T>& p) {
  const ScalarTriple triple(mode);
  if (mode.parity() == Parity::Magnetic) return dkp_field(triple, p);
  const PotentialSet landau = electric_potentials_landau(mode);
  return dkp_field(triple, p, &landau);
}

}  // namespace dsem
