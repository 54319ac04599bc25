#pragma once

// Residual engine: finite-difference partials over black-box samplers and the
// residual suites for every reduced equation system satisfied by the modes.
//
// The reduced (t, r) suites sample fields in long double and use five-point
// stencils, so at the default step h = 1e-4 the truncation and rounding floors
// both sit well below 1e-10. The full 4D Maxwell check stays in double with
// plain three-point central differences; its residual scales as O(h^2).

#include "dsem/geometry.hpp"
#include "dsem/modes.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace dsem {

struct GridSpec {
  std::array<double, 2> t_range{-2.0, 2.0};
  std::array<double, 2> r_range{0.05, std::numbers::pi - 0.05};
  std::array<double, 2> theta_range{0.1, std::numbers::pi - 0.1};
  std::array<double, 2> phi_range{0.0, 2.0 * std::numbers::pi};
  int n_t = 40;
  int n_r = 40;
  int n_theta = 1;
  int n_phi = 1;
  double fd_step = 1e-4;

  /// SingularPoint for non-interior r/θ ranges; InvalidGrid for bad counts,
  /// reversed ranges or a step that does not fit inside the margins.
  void validate() const;

  std::vector<double> t_values() const;
  std::vector<double> r_values() const;
  std::vector<double> theta_values() const;
  std::vector<double> phi_values() const;
};

struct ResidualReport {
  std::string equation_id;
  double max_abs = 0;
  double rms = 0;
  SpacetimePoint worst_point;  // (t, r) suites leave θ, φ at 0
  int n_points = 0;
  double tolerance = 0;
  bool pass = false;
};

enum class Coord { T, R, Theta, Phi, Tau };
enum class Stencil { Central2, Central4 };

/// Central finite difference of `order` 1 or 2 along one coordinate.
/// Central2 is O(h^2), Central4 is O(h^4). Tau steps in conformal time.
template <typename T, typename Sampler>
auto fd_partial(Sampler&& sampler, Coord coord, const BasicSpacetimePoint<T>& p, T h, int order,
                Stencil stencil = Stencil::Central2) {
  using Result = std::decay_t<std::invoke_result_t<Sampler&, const BasicSpacetimePoint<T>&>>;
  if (order != 1 && order != 2) throw std::invalid_argument("fd_partial: order must be 1 or 2");
  constexpr T pi = std::numbers::pi_v<T>;
  const int reach = stencil == Stencil::Central2 ? 1 : 2;
  const T span = T(reach) * h;

  auto outside = [&](T x, T lo, T hi) { return !(x - span > lo && x + span < hi); };
  if (coord == Coord::R && outside(p.r, T(0), pi))
    throw Error(ErrorKind::StepExitsDomain, "r +- h leaves (0, pi)");
  if (coord == Coord::Theta && outside(p.theta, T(0), pi))
    throw Error(ErrorKind::StepExitsDomain, "theta +- h leaves (0, pi)");
  const T tau0 = conformal_time(p.t);
  if (coord == Coord::Tau && outside(tau0, -pi / 2, pi / 2))
    throw Error(ErrorKind::StepExitsDomain, "tau +- h leaves (-pi/2, pi/2)");

  auto at = [&](int k) -> Result {
    BasicSpacetimePoint<T> q = p;
    const T d = T(k) * h;
    switch (coord) {
      case Coord::T: q.t += d; break;
      case Coord::R: q.r += d; break;
      case Coord::Theta: q.theta += d; break;
      case Coord::Phi: q.phi += d; break;
      case Coord::Tau: q.t = inverse_conformal_time(tau0 + d); break;
    }
    return sampler(q);
  };

  if (order == 1) {
    if (stencil == Stencil::Central2) return Result((at(1) - at(-1)) / (T(2) * h));
    return Result((at(-2) - at(2) + T(8) * (at(1) - at(-1))) / (T(12) * h));
  }
  if (stencil == Stencil::Central2) return Result((at(1) + at(-1) - T(2) * at(0)) / (h * h));
  return Result((T(16) * (at(1) + at(-1)) - (at(2) + at(-2)) - T(30) * at(0)) / (T(12) * h * h));
}

/// Profiles that a negative control may scale by (1 + relative).
enum class Profile { G, F, F2, G1, G2, G3 };

const char* to_string(Profile p);

struct Perturbation {
  Profile profile = Profile::G;
  double relative = 0;
};

struct SuiteOptions {
  std::optional<Perturbation> perturbation;
  std::optional<double> tolerance;  // overrides the suite default
};

using ProfileFn = std::function<std::complex<long double>(long double t, long double r)>;
using FieldFn4 = std::function<Vector4<double>(const SpacetimePoint&)>;

inline constexpr double kDefaultReducedTolerance = 1e-8;
inline constexpr double kDefaultMaxwellTolerance = 1e-6;
inline constexpr double kDefaultKfgTolerance = 1e-7;
inline constexpr double kDefaultGradientTolerance = 1e-9;
inline constexpr double kDefaultRadialRelTolerance = 1e-9;

/// Coefficient of g2 in the reduced Lorentz condition, in units of b_nu.
inline constexpr double kLorentzG2Coefficient = 2.0;

/// The four first-order equations in F1, F2, F3 (the first is the one that
/// follows from the other three).
std::vector<ResidualReport> residual_mo_reduced(const ModeIndex& mode, const GridSpec& grid,
                                                const SuiteOptions& opts = {});

/// cosh t ∂t cosh t ∂t G - (∂r^2 - j(j+1)/sin^2 r) G.
ResidualReport residual_wave_G(const ModeIndex& mode, const GridSpec& grid,
                               const SuiteOptions& opts = {});
ResidualReport residual_wave_G(const ProfileFn& G, const ModeIndex& mode, const GridSpec& grid,
                               double tolerance = kDefaultReducedTolerance);

/// Magnetic parity: the four-equation DKP system. Electric parity: the three
/// field-strength equations plus the three potential equations; `potentials`
/// defaults to the Landau set.
std::vector<ResidualReport> residual_dkp(const ModeIndex& mode, const GridSpec& grid,
                                         const PotentialSet* potentials = nullptr,
                                         const SuiteOptions& opts = {});

/// -(2 b_nu / sin r) g2 + (cosh t ∂t + 2 sinh t) g1 - (∂r + 2/tan r) g3.
ResidualReport residual_lorentz(const PotentialSet& potentials, const GridSpec& grid,
                                const SuiteOptions& opts = {});

/// [∂t^2 + 3 tanh t ∂t - (∂r^2 + (2/tan r) ∂r - j(j+1)/sin^2 r)/cosh^2 t + 2] g1.
ResidualReport residual_conformal_kfg(const ProfileFn& g1, const ModeIndex& mode,
                                      const GridSpec& grid, double tolerance = kDefaultKfgTolerance);
ResidualReport residual_conformal_kfg(const PotentialSet& potentials, const GridSpec& grid,
                                      const SuiteOptions& opts = {});

/// The defining τ-equations of a potential set: Landau (g1 = 0 and two
/// integrations), Lorentz (two integrations with the g1 source) or gradient
/// (three equations, the third a consequence of the first two).
std::vector<ResidualReport> residual_potential_equations(const PotentialSet& potentials,
                                                         const GridSpec& grid,
                                                         const SuiteOptions& opts = {});

/// R'' + (ω^2 - j(j+1)/sin^2 r) R on n_points interior nodes r_k = πk/(n+1),
/// R'' from five-point differences. The tolerance is rel_tolerance * max|R|.
ResidualReport residual_radial(const ModeIndex& mode, int n_points = 200, double h = 1e-4,
                               double rel_tolerance = kDefaultRadialRelTolerance);

/// The full cyclic-basis matrix equation on the 4-component field,
///   -i ∂t + i tanh t Σ α^k S^k + (α^3 ∂r + (α^1 S^2 - α^2 S^1)/tan r)/cosh t
///        + (α^1 ∂θ + α^2 (∂φ + S^3 cos θ)/sin θ)/(cosh t sin r),
/// with every derivative a three-point central difference of step h.
ResidualReport residual_full_maxwell(const ModeIndex& mode, std::span<const SpacetimePoint> points,
                                     double h = 1e-4, double tolerance = kDefaultMaxwellTolerance);
ResidualReport residual_full_maxwell(const FieldFn4& psi, std::span<const SpacetimePoint> points,
                                     double h = 1e-4, double tolerance = kDefaultMaxwellTolerance);

/// Uniform random points inside the grid's (t, r, θ, φ) box.
std::vector<SpacetimePoint> random_interior_points(const GridSpec& grid, int count,
                                                   std::uint64_t seed);

}  // namespace dsem
