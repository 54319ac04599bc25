#include "dsem/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace dsem {

namespace {

using LD = long double;
using CL = std::complex<LD>;
constexpr LD kPi = std::numbers::pi_v<LD>;

std::vector<double> linspace(const std::array<double, 2>& range, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = range[0];
    return out;
  }
  const double step = (range[1] - range[0]) / (n - 1);
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = range[0] + k * step;
  out.back() = range[1];
  return out;
}

// Per-equation max/rms aggregation in grid order.
class Accumulator {
 public:
  void add(double value, const SpacetimePoint& p) {
    ++count_;
    sum_sq_ += value * value;
    // NaN must win so a broken sample can never pass
    if (count_ == 1 || value > max_ || std::isnan(value)) {
      max_ = value;
      worst_ = p;
    }
  }

  void add(double value, double t, double r) { add(value, SpacetimePoint{t, r, 0.0, 0.0}); }

  ResidualReport finish(std::string id, double tolerance) const {
    ResidualReport rep;
    rep.equation_id = std::move(id);
    rep.max_abs = max_;
    rep.rms = count_ > 0 ? std::sqrt(sum_sq_ / count_) : 0.0;
    rep.worst_point = worst_;
    rep.n_points = count_;
    rep.tolerance = tolerance;
    rep.pass = count_ > 0 && std::isfinite(max_) && max_ <= tolerance;
    return rep;
  }

 private:
  int count_ = 0;
  double max_ = 0;
  double sum_sq_ = 0;
  SpacetimePoint worst_;
};

double modulus(const CL& z) { return static_cast<double>(std::abs(z)); }

// Runs `eval(t, r)` -> std::array<CL, K> over the (t, r) grid.
template <std::size_t K, typename Eval>
std::vector<ResidualReport> scan(const GridSpec& grid, const std::array<std::string, K>& ids,
                                 double tolerance, Eval&& eval) {
  grid.validate();
  std::array<Accumulator, K> acc;
  for (double t : grid.t_values())
    for (double r : grid.r_values()) {
      const std::array<CL, K> res = eval(LD(t), LD(r));
      for (std::size_t k = 0; k < K; ++k) acc[k].add(modulus(res[k]), t, r);
    }
  std::vector<ResidualReport> out;
  for (std::size_t k = 0; k < K; ++k) out.push_back(acc[k].finish(ids[k], tolerance));
  return out;
}

template <typename Fn>
CL d_t(const Fn& f, LD t, LD r, LD h, int order = 1) {
  auto s = [&](const BasicSpacetimePoint<LD>& q) { return CL(f(q.t, q.r)); };
  return fd_partial<LD>(s, Coord::T, {t, r, kPi / 2, 0}, h, order, Stencil::Central4);
}

template <typename Fn>
CL d_tau(const Fn& f, LD t, LD r, LD h, int order = 1) {
  auto s = [&](const BasicSpacetimePoint<LD>& q) { return CL(f(q.t, q.r)); };
  return fd_partial<LD>(s, Coord::Tau, {t, r, kPi / 2, 0}, h, order, Stencil::Central4);
}

template <typename Fn>
CL d_r(const Fn& f, LD t, LD r, LD h, int order = 1) {
  auto s = [&](const BasicSpacetimePoint<LD>& q) { return CL(f(q.t, q.r)); };
  return fd_partial<LD>(s, Coord::R, {t, r, kPi / 2, 0}, h, order, Stencil::Central4);
}

// Long-double view of one mode's profiles, with an optional negative-control
// scaling applied to a single profile.
class Profiles {
 public:
  Profiles(const ModeIndex& mode, const PotentialSet* potentials,
           const std::optional<Perturbation>& perturbation)
      : triple_(mode), potentials_(potentials), perturbation_(perturbation) {}

  const ModeIndex& mode() const { return triple_.mode(); }

  CL G(LD t, LD r) const { return scale(Profile::G) * triple_.G(conformal_time(t), r); }
  CL F(LD t, LD r) const { return scale(Profile::F) * triple_.F(conformal_time(t), r); }
  CL F2(LD t, LD r) const { return scale(Profile::F2) * triple_.F2(conformal_time(t), r); }
  CL F1(LD t, LD r) const { return (F(t, r) + G(t, r)) / LD(2); }
  CL F3(LD t, LD r) const { return (F(t, r) - G(t, r)) / LD(2); }

  std::array<CL, 3> g(LD t, LD r) const {
    auto out = potentials_->at(conformal_time(t), r);
    out[0] *= scale(Profile::G1);
    out[1] *= scale(Profile::G2);
    out[2] *= scale(Profile::G3);
    return out;
  }

  /// f1..f10 (0-based) for the current parity.
  Vector10<LD> dkp(LD t, LD r) const {
    const LD ch = std::cosh(t);
    const LD s = LD(1) / (ch * ch * std::sin(r));
    const std::array<CL, 3> phi{F1(t, r) * s, F2(t, r) * s, F3(t, r) * s};
    if (mode().parity() == Parity::Magnetic) {
      Vector10<LD> f = dkp_from_mo(Parity::Magnetic, phi);
      f[1] = ch * std::sin(r) * phi[1] / LD(2 * mode().b_nu());
      f[3] = -f[1];
      return f;
    }
    Vector10<LD> f = potentials_->pure_gauge() ? Vector10<LD>(Vector10<LD>::Zero())
                                               : dkp_from_mo(Parity::Electric, phi);
    const auto gg = g(t, r);
    f[0] = gg[0] / ch;
    f[1] = gg[1] / ch;
    f[2] = gg[2] / ch;
    f[3] = f[1];
    return f;
  }

 private:
  LD scale(Profile p) const {
    return perturbation_ && perturbation_->profile == p ? LD(1) + LD(perturbation_->relative)
                                                        : LD(1);
  }

  ScalarTriple triple_;
  const PotentialSet* potentials_;
  std::optional<Perturbation> perturbation_;
};

double tolerance_or(const SuiteOptions& opts, double fallback) {
  return opts.tolerance.value_or(fallback);
}

}  // namespace

void GridSpec::validate() const {
  const double pi = std::numbers::pi;
  if (n_t < 1 || n_r < 1 || n_theta < 1 || n_phi < 1)
    throw Error(ErrorKind::InvalidGrid, "grid counts must be positive");
  for (const auto* range : {&t_range, &r_range, &theta_range, &phi_range})
    if (!((*range)[0] <= (*range)[1]) || !std::isfinite((*range)[0]) ||
        !std::isfinite((*range)[1]))
      throw Error(ErrorKind::InvalidGrid, "ranges must be finite and ordered");
  if (!(r_range[0] > 0 && r_range[1] < pi))
    throw Error(ErrorKind::SingularPoint, "r range must lie strictly inside (0, pi)");
  if (!(theta_range[0] > 0 && theta_range[1] < pi))
    throw Error(ErrorKind::SingularPoint, "theta range must lie strictly inside (0, pi)");
  const double margin = std::min({r_range[0], pi - r_range[1], theta_range[0], pi - theta_range[1]});
  if (!(fd_step > 0) || !(2 * fd_step < margin))
    throw Error(ErrorKind::InvalidGrid, "fd step must be positive and fit inside the margins");
}

std::vector<double> GridSpec::t_values() const { return linspace(t_range, n_t); }
std::vector<double> GridSpec::r_values() const { return linspace(r_range, n_r); }
std::vector<double> GridSpec::theta_values() const { return linspace(theta_range, n_theta); }
std::vector<double> GridSpec::phi_values() const { return linspace(phi_range, n_phi); }

const char* to_string(Profile p) {
  switch (p) {
    case Profile::G: return "G";
    case Profile::F: return "F";
    case Profile::F2: return "F2";
    case Profile::G1: return "g1";
    case Profile::G2: return "g2";
    case Profile::G3: return "g3";
  }
  return "?";
}

std::vector<ResidualReport> residual_mo_reduced(const ModeIndex& mode, const GridSpec& grid,
                                                const SuiteOptions& opts) {
  const Profiles P(mode, nullptr, opts.perturbation);
  const LD h = grid.fd_step;
  const LD b = mode.b_nu();
  auto F1 = [&](LD t, LD r) { return P.F1(t, r); };
  auto F2 = [&](LD t, LD r) { return P.F2(t, r); };
  auto F3 = [&](LD t, LD r) { return P.F3(t, r); };
  return scan<4>(grid, {"mo_reduced.1", "mo_reduced.2", "mo_reduced.3", "mo_reduced.4"},
                 tolerance_or(opts, kDefaultReducedTolerance), [&](LD t, LD r) {
                   const LD ch = std::cosh(t);
                   const LD sr = std::sin(r);
                   const LD cot = std::cos(r) / sr;
                   const CL f1 = F1(t, r), f2 = F2(t, r), f3 = F3(t, r);
                   return std::array<CL, 4>{
                       d_r(F2, t, r, h) + cot * f2 + b / sr * (f1 + f3),
                       -ch * d_t(F1, t, r, h) - d_r(F1, t, r, h) - b / sr * f2,
                       -ch * d_t(F2, t, r, h) + b / sr * (f1 - f3),
                       -ch * d_t(F3, t, r, h) + d_r(F3, t, r, h) + b / sr * f2,
                   };
                 });
}

ResidualReport residual_wave_G(const ProfileFn& G, const ModeIndex& mode, const GridSpec& grid,
                               double tolerance) {
  const LD h = grid.fd_step;
  const LD jj = LD(mode.j()) * (mode.j() + 1);
  return scan<1>(grid, {"wave_G"}, tolerance, [&](LD t, LD r) {
    const LD sr = std::sin(r);
    // cosh t ∂t (cosh t ∂t) = ∂τ^2
    return std::array<CL, 1>{d_tau(G, t, r, h, 2) - d_r(G, t, r, h, 2) + jj / (sr * sr) * G(t, r)};
  })[0];
}

ResidualReport residual_wave_G(const ModeIndex& mode, const GridSpec& grid,
                               const SuiteOptions& opts) {
  const Profiles P(mode, nullptr, opts.perturbation);
  return residual_wave_G([&](LD t, LD r) { return P.G(t, r); }, mode, grid,
                         tolerance_or(opts, kDefaultReducedTolerance));
}

std::vector<ResidualReport> residual_dkp(const ModeIndex& mode, const GridSpec& grid,
                                         const PotentialSet* potentials,
                                         const SuiteOptions& opts) {
  std::optional<PotentialSet> landau;
  if (mode.parity() == Parity::Electric && potentials == nullptr) {
    landau = electric_potentials_landau(mode);
    potentials = &*landau;
  }
  if (potentials && !(potentials->mode() == mode))
    throw Error(ErrorKind::WrongParity, "potential set belongs to a different mode");
  const Profiles P(mode, potentials, opts.perturbation);
  const LD h = grid.fd_step;
  const LD b = mode.b_nu();
  const double tol = tolerance_or(opts, kDefaultReducedTolerance);
  const CL i(0, 1);
  auto comp = [&](int k) { return [&P, k](LD t, LD r) { return P.dkp(t, r)[k - 1]; }; };

  if (mode.parity() == Parity::Magnetic) {
    const auto f2 = comp(2), f5 = comp(5), f8 = comp(8);
    return scan<4>(grid, {"dkp_magnetic.1", "dkp_magnetic.2", "dkp_magnetic.3", "dkp_magnetic.4"},
                   tol, [&](LD t, LD r) {
                     const LD ch = std::cosh(t), sh = std::sinh(t);
                     const LD sr = std::sin(r), cot = std::cos(r) / sr;
                     const Vector10<LD> f = P.dkp(t, r);
                     return std::array<CL, 4>{
                         -ch * d_t(f5, t, r, h) - LD(2) * sh * f[4] +
                             i * (d_r(f8, t, r, h) + cot * f[7]) + i * b / sr * f[8],
                         ch * (d_t(f2, t, r, h) - f[4]) + sh * f[1],
                         -ch * f[7] - i * (d_r(f2, t, r, h) + cot * f[1]),
                         -ch * f[8] + LD(2) * i * b / sr * f[1],
                     };
                   });
  }

  const auto f1 = comp(1), f2 = comp(2), f3 = comp(3), f5 = comp(5), f6 = comp(6), f8 = comp(8);
  return scan<6>(grid,
                 {"dkp_electric.1", "dkp_electric.2", "dkp_electric.3", "dkp_electric.4",
                  "dkp_electric.5", "dkp_electric.6"},
                 tol, [&](LD t, LD r) {
                   const LD ch = std::cosh(t), th = std::tanh(t);
                   const LD sr = std::sin(r), cot = std::cos(r) / sr;
                   const Vector10<LD> f = P.dkp(t, r);
                   return std::array<CL, 6>{
                       d_r(f6, t, r, h) + LD(2) * cot * f[5] + LD(2) * b / sr * f[4],
                       -ch * (d_t(f5, t, r, h) + LD(2) * th * f[4]) +
                           i * (d_r(f8, t, r, h) + cot * f[7]),
                       -ch * (d_t(f6, t, r, h) + LD(2) * th * f[5]) - LD(2) * i * b / sr * f[7],
                       ch * (d_t(f2, t, r, h) + th * f[1]) + b / sr * f[0] - ch * f[4],
                       -ch * (d_t(f3, t, r, h) + th * f[2]) + d_r(f1, t, r, h) + ch * f[5],
                       i * (d_r(f2, t, r, h) + cot * f[1]) + i * b / sr * f[2] + ch * f[7],
                   };
                 });
}

ResidualReport residual_lorentz(const PotentialSet& potentials, const GridSpec& grid,
                                const SuiteOptions& opts) {
  const Profiles P(potentials.mode(), &potentials, opts.perturbation);
  const LD h = grid.fd_step;
  const LD coeff = LD(kLorentzG2Coefficient) * LD(potentials.mode().b_nu());
  auto g1 = [&](LD t, LD r) { return P.g(t, r)[0]; };
  auto g3 = [&](LD t, LD r) { return P.g(t, r)[2]; };
  return scan<1>(grid, {"lorentz_condition"}, tolerance_or(opts, kDefaultReducedTolerance),
                 [&](LD t, LD r) {
                   const auto g = P.g(t, r);
                   const LD sr = std::sin(r);
                   return std::array<CL, 1>{-coeff / sr * g[1] + std::cosh(t) * d_t(g1, t, r, h) +
                                            LD(2) * std::sinh(t) * g[0] - d_r(g3, t, r, h) -
                                            LD(2) * std::cos(r) / sr * g[2]};
                 })[0];
}

ResidualReport residual_conformal_kfg(const ProfileFn& g1, const ModeIndex& mode,
                                      const GridSpec& grid, double tolerance) {
  const LD h = grid.fd_step;
  const LD jj = LD(mode.j()) * (mode.j() + 1);
  return scan<1>(grid, {"conformal_kfg"}, tolerance, [&](LD t, LD r) {
    const LD ch = std::cosh(t);
    const LD sr = std::sin(r);
    const CL g = g1(t, r);
    const CL spatial =
        d_r(g1, t, r, h, 2) + LD(2) * std::cos(r) / sr * d_r(g1, t, r, h) - jj / (sr * sr) * g;
    return std::array<CL, 1>{d_t(g1, t, r, h, 2) + LD(3) * std::tanh(t) * d_t(g1, t, r, h) -
                             spatial / (ch * ch) + LD(2) * g};
  })[0];
}

ResidualReport residual_conformal_kfg(const PotentialSet& potentials, const GridSpec& grid,
                                      const SuiteOptions& opts) {
  const Profiles P(potentials.mode(), &potentials, opts.perturbation);
  return residual_conformal_kfg([&](LD t, LD r) { return P.g(t, r)[0]; }, potentials.mode(), grid,
                                tolerance_or(opts, kDefaultKfgTolerance));
}

std::vector<ResidualReport> residual_potential_equations(const PotentialSet& potentials,
                                                         const GridSpec& grid,
                                                         const SuiteOptions& opts) {
  const Profiles P(potentials.mode(), &potentials, opts.perturbation);
  const LD h = grid.fd_step;
  const LD b = potentials.mode().b_nu();
  auto g1 = [&](LD t, LD r) { return P.g(t, r)[0]; };
  auto g2 = [&](LD t, LD r) { return P.g(t, r)[1]; };
  auto g3 = [&](LD t, LD r) { return P.g(t, r)[2]; };

  switch (potentials.gauge()) {
    case Gauge::Gradient:
      return scan<3>(grid, {"gradient.1", "gradient.2", "gradient.3"},
                     tolerance_or(opts, kDefaultGradientTolerance), [&](LD t, LD r) {
                       const auto g = P.g(t, r);
                       const LD ch = std::cosh(t), sr = std::sin(r);
                       return std::array<CL, 3>{
                           ch * d_t(g2, t, r, h) + b / sr * g[0],
                           -ch * d_t(g3, t, r, h) + d_r(g1, t, r, h),
                           d_r(g2, t, r, h) + std::cos(r) / sr * g[1] + b / sr * g[2],
                       };
                     });
    case Gauge::Landau:
      return scan<3>(grid, {"landau.g1", "landau.g2", "landau.g3"},
                     tolerance_or(opts, kDefaultReducedTolerance), [&](LD t, LD r) {
                       const auto g = P.g(t, r);
                       const LD ch = std::cosh(t), sr = std::sin(r);
                       return std::array<CL, 3>{
                           g[0],
                           ch * d_t(g2, t, r, h) - P.F(t, r) / (LD(2) * sr),
                           ch * d_t(g3, t, r, h) - P.F2(t, r) / sr,
                       };
                     });
    case Gauge::Lorentz:
      break;
  }
  return scan<2>(grid, {"lorentz_gauge.g2", "lorentz_gauge.g3"},
                 tolerance_or(opts, kDefaultReducedTolerance), [&](LD t, LD r) {
                   const auto g = P.g(t, r);
                   const LD ch = std::cosh(t), sr = std::sin(r);
                   return std::array<CL, 2>{
                       ch * d_t(g2, t, r, h) + b / sr * g[0] - P.F(t, r) / (LD(2) * sr),
                       ch * d_t(g3, t, r, h) - d_r(g1, t, r, h) - P.F2(t, r) / sr,
                   };
                 });
}

ResidualReport residual_radial(const ModeIndex& mode, int n_points, double h,
                               double rel_tolerance) {
  if (n_points < 1) throw Error(ErrorKind::InvalidGrid, "radial check needs at least one node");
  if (!(h > 0)) throw Error(ErrorKind::InvalidGrid, "fd step must be positive");
  const RadialSolution R(mode);
  const LD w2 = LD(mode.omega()) * mode.omega();
  const LD jj = LD(mode.j()) * (mode.j() + 1);
  auto sample = [&](const BasicSpacetimePoint<LD>& q) { return R.value(q.r); };

  Accumulator acc;
  double max_R = 0;
  for (int k = 1; k <= n_points; ++k) {
    const LD r = kPi * k / (n_points + 1);
    // keep the five-point stencil inside (0, π) near the poles
    const LD hk = std::min<LD>(h, std::min(r, kPi - r) / 4);
    const BasicSpacetimePoint<LD> p{0, r, kPi / 2, 0};
    const CL Rv = R.value(r);
    const CL d2 = fd_partial<LD>(sample, Coord::R, p, hk, 2, Stencil::Central4);
    acc.add(modulus(d2 + (w2 - jj / (std::sin(r) * std::sin(r))) * Rv), 0.0, double(r));
    max_R = std::max(max_R, modulus(Rv));
  }
  return acc.finish("radial_ode", rel_tolerance * max_R);
}

ResidualReport residual_full_maxwell(const FieldFn4& psi, std::span<const SpacetimePoint> points,
                                     double h, double tolerance) {
  using C = std::complex<double>;
  using M = Eigen::Matrix4cd;
  const C i(0, 1);
  const auto alphas = mo_alphas(Basis::Cyclic);
  const auto gens = so3c_generators(Basis::Cyclic);
  std::array<M, 3> a, S;
  for (int k = 0; k < 3; ++k) {
    a[k] = to_complex<double, 4>(alphas[k + 1]);
    S[k] = to_complex<double, 4>(gens.S[k]);
  }
  const M spin_t = a[0] * S[0] + a[1] * S[1] + a[2] * S[2];
  const M spin_r = a[0] * S[1] - a[1] * S[0];
  const M spin_theta = a[1] * S[2];

  Accumulator acc;
  for (const SpacetimePoint& p : points) {
    require_interior(p);
    auto d = [&](Coord c) { return fd_partial<double>(psi, c, p, h, 1, Stencil::Central2); };
    const double ch = std::cosh(p.t);
    const double sr = std::sin(p.r);
    const double st = std::sin(p.theta);
    const Vector4<double> v = psi(p);
    const Vector4<double> res =
        -i * d(Coord::T) + i * std::tanh(p.t) * (spin_t * v) +
        (a[2] * d(Coord::R) + spin_r * v / std::tan(p.r)) / ch +
        (a[0] * d(Coord::Theta) + a[1] * d(Coord::Phi) / st +
         spin_theta * v * (std::cos(p.theta) / st)) /
            (ch * sr);
    acc.add(res.cwiseAbs().maxCoeff(), p);
  }
  return acc.finish("full_maxwell", tolerance);
}

ResidualReport residual_full_maxwell(const ModeIndex& mode, std::span<const SpacetimePoint> points,
                                     double h, double tolerance) {
  const ScalarTriple triple(mode);
  return residual_full_maxwell(
      [&](const SpacetimePoint& p) { return mo_field(triple, p).psi; }, points, h, tolerance);
}

std::vector<SpacetimePoint> random_interior_points(const GridSpec& grid, int count,
                                                   std::uint64_t seed) {
  grid.validate();
  std::mt19937_64 rng(seed);
  auto draw = [&](const std::array<double, 2>& range) {
    return std::uniform_real_distribution<double>(range[0], range[1])(rng);
  };
  std::vector<SpacetimePoint> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) {
    SpacetimePoint p;
    p.t = draw(grid.t_range);
    p.r = draw(grid.r_range);
    p.theta = draw(grid.theta_range);
    p.phi = draw(grid.phi_range);
    out.push_back(p);
  }
  return out;
}

}  // namespace dsem
