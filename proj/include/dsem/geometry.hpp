#pragma once

// Non-static de Sitter patch
//   dS^2 = dt^2 - cosh^2 t [dr^2 + sin^2 r (dθ^2 + sin^2 θ dφ^2)]
// with curvature radius fixed to 1, its diagonal tetrad, Ricci rotation
// coefficients and the spin-connection contractions (1/2) j^{ab} γ_{abk}.

#include "dsem/algebra.hpp"
#include "dsem/error.hpp"

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <numbers>

namespace dsem {

template <typename T>
struct BasicSpacetimePoint {
  T t = 0;
  T r = 0;
  T theta = 0;
  T phi = 0;
};

using SpacetimePoint = BasicSpacetimePoint<double>;

/// Throws SingularPoint unless r and theta lie strictly inside (0, pi).
template <typename T>
void require_interior(const BasicSpacetimePoint<T>& p) {
  constexpr T pi = std::numbers::pi_v<T>;
  if (!(p.r > 0 && p.r < pi)) throw Error(ErrorKind::SingularPoint, "r must lie in (0, pi)");
  if (!(p.theta > 0 && p.theta < pi))
    throw Error(ErrorKind::SingularPoint, "theta must lie in (0, pi)");
}

/// Non-zero rotation coefficients; every other γ_[ab]c vanishes.
struct RotationCoefficients {
  double g01_1 = 0;  // tanh t
  double g02_2 = 0;  // tanh t
  double g03_3 = 0;  // tanh t
  double g31_1 = 0;  // cot r / cosh t
  double g32_2 = 0;  // cot r / cosh t
  double g12_2 = 0;  // cot θ / (cosh t sin r)

  /// γ_{abc}, antisymmetric in (a, b).
  double operator()(int a, int b, int c) const;
};

struct FrameData {
  /// Row a holds e_(a)^α, α = (t, r, θ, φ).
  Eigen::Matrix4d tetrad;
  RotationCoefficients rotation;
  /// (1/2) j^{ab} γ_{abk} for k = 1, 2, 3.
  std::array<Eigen::Matrix4cd, 3> spin_contractions;
};

FrameData frame_at(const SpacetimePoint& p, Basis basis = Basis::Cyclic);

/// Covariant metric g_{αβ} at p.
Eigen::Matrix4d metric_at(const SpacetimePoint& p);

/// The three contractions in closed form, built directly from S^k:
///   k=1: i S1 tanh t + S2 cot r / cosh t
///   k=2: -S1 cot r / cosh t + i S2 tanh t + S3 cot θ / (cosh t sin r)
///   k=3: i S3 tanh t
std::array<Eigen::Matrix4cd, 3> spin_contractions_closed_form(const SpacetimePoint& p,
                                                              Basis basis = Basis::Cyclic);

/// τ = arctan(sinh t), mapping the real line onto (-π/2, π/2).
template <typename T>
T conformal_time(T t) {
  return std::atan(std::sinh(t));
}

template <typename T>
T inverse_conformal_time(T tau) {
  if (!(std::abs(tau) < std::numbers::pi_v<T> / 2))
    throw Error(ErrorKind::OutOfRange, "conformal time must satisfy |tau| < pi/2");
  return std::asinh(std::tan(tau));
}

}  // namespace dsem
