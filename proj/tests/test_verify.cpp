#include "dsem/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace dsem;
using LD = long double;
using CL = std::complex<LD>;

namespace {

GridSpec small_grid() {
  GridSpec g;
  g.n_t = 9;
  g.n_r = 11;
  return g;
}

double worst(const std::vector<ResidualReport>& reps) {
  double w = 0;
  for (const auto& r : reps) w = std::max(w, r.max_abs);
  return w;
}

}  // namespace

TEST_CASE("fd_partial on known functions") {
  auto sine = [](const SpacetimePoint& p) { return std::sin(p.r); };
  const SpacetimePoint p{0, 1.0, 1.0, 0};
  CHECK(std::abs(fd_partial(sine, Coord::R, p, 1e-4, 1) - std::cos(1.0)) < 1e-8);
  CHECK(std::abs(fd_partial(sine, Coord::R, p, 1e-4, 2) + std::sin(1.0)) < 1e-6);
  CHECK(std::abs(fd_partial(sine, Coord::R, p, 1e-3, 1, Stencil::Central4) - std::cos(1.0)) < 1e-12);
  auto constant = [](const SpacetimePoint&) { return std::complex<double>(3.0, -2.0); };
  for (Coord c : {Coord::T, Coord::R, Coord::Theta, Coord::Phi, Coord::Tau}) {
    CHECK(std::abs(fd_partial(constant, c, p, 1e-4, 1)) <= 1e-12);
    CHECK(std::abs(fd_partial(constant, c, p, 1e-4, 2)) <= 1e-12);
  }
}

TEST_CASE("fd_partial in conformal time") {
  // t(τ) = asinh(tan τ), dt/dτ = cosh t
  auto time = [](const SpacetimePoint& p) { return p.t; };
  const SpacetimePoint p{0.7, 1.0, 1.0, 0};
  CHECK(fd_partial(time, Coord::Tau, p, 1e-5, 1) == doctest::Approx(std::cosh(0.7)).epsilon(1e-9));
}

TEST_CASE("fd_partial is O(h^2) for the central stencil") {
  auto f = [](const SpacetimePoint& p) { return std::exp(p.t) * std::sin(p.theta); };
  const SpacetimePoint p{0.3, 1.0, 1.1, 0};
  const double exact = std::exp(0.3) * std::cos(1.1);
  const double e1 = std::abs(fd_partial(f, Coord::Theta, p, 1e-2, 1) - exact);
  const double e2 = std::abs(fd_partial(f, Coord::Theta, p, 5e-3, 1) - exact);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("fd_partial refuses steps that leave the domain") {
  auto f = [](const SpacetimePoint& p) { return p.r; };
  auto kind = [&](Coord c, SpacetimePoint p, double h) {
    try {
      fd_partial(f, c, p, h, 1);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidGrid;
  };
  CHECK(kind(Coord::R, {0, 1e-5, 1, 0}, 1e-4) == ErrorKind::StepExitsDomain);
  CHECK(kind(Coord::Theta, {0, 1, std::numbers::pi - 1e-5, 0}, 1e-4) == ErrorKind::StepExitsDomain);
  CHECK(kind(Coord::Tau, {20, 1, 1, 0}, 1e-4) == ErrorKind::StepExitsDomain);
  CHECK_THROWS_AS(fd_partial(f, Coord::R, SpacetimePoint{0, 1, 1, 0}, 1e-4, 3), std::invalid_argument);
}

TEST_CASE("grid validation") {
  auto kind = [](GridSpec g) {
    try {
      g.validate();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::OutOfRange;
  };
  GridSpec g;
  CHECK(kind(g) == ErrorKind::OutOfRange);
  g.r_range = {0.0, 1.0};
  CHECK(kind(g) == ErrorKind::SingularPoint);
  g = {};
  g.theta_range = {0.5, std::numbers::pi};
  CHECK(kind(g) == ErrorKind::SingularPoint);
  g = {};
  g.n_r = 0;
  CHECK(kind(g) == ErrorKind::InvalidGrid);
  g = {};
  g.fd_step = 0.03;
  CHECK(kind(g) == ErrorKind::InvalidGrid);
  g = {};
  g.t_range = {1.0, -1.0};
  CHECK(kind(g) == ErrorKind::InvalidGrid);
  CHECK(GridSpec{}.r_values().front() == 0.05);
  CHECK(GridSpec{}.r_values().back() == std::numbers::pi - 0.05);
}

TEST_CASE("reduced MO system holds and detects a perturbed F2") {
  const auto mode = ModeIndex::make(1, 0, 0, Parity::Magnetic);
  const auto reps = residual_mo_reduced(mode, GridSpec{});
  REQUIRE(reps.size() == 4);
  for (const auto& r : reps) {
    CHECK(r.pass);
    CHECK(r.n_points == 1600);
    CHECK(r.max_abs <= 1e-8);
  }
  SuiteOptions bad;
  bad.perturbation = Perturbation{Profile::F2, 1e-3};
  const auto pert = residual_mo_reduced(mode, small_grid(), bad);
  CHECK(pert[0].max_abs > 1e-5);
  CHECK(pert[2].max_abs > 1e-5);
  CHECK(residual_mo_reduced(ModeIndex::make(3, 0, 2, Parity::Electric), small_grid())[0].pass);
}

TEST_CASE("wave equation for G with a wrong radial factor fails") {
  const auto mode = ModeIndex::make(1, 0, 0, Parity::Magnetic);
  CHECK(residual_wave_G(mode, small_grid()).pass);
  CHECK(residual_wave_G(ModeIndex::make(4, 0, 0, Parity::Magnetic), small_grid()).pass);
  const ProfileFn wrong = [](LD t, LD r) {
    return std::polar(LD(1), -LD(2) * conformal_time(t)) * CL(std::sin(r));
  };
  const auto rep = residual_wave_G(wrong, mode, small_grid(), 1e-4);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("DKP systems for both parities") {
  const auto g = small_grid();
  const auto mag = residual_dkp(ModeIndex::make(1, 0, 0, Parity::Magnetic), g);
  CHECK(mag.size() == 4);
  for (const auto& r : mag) CHECK(r.pass);
  const auto el = ModeIndex::make(1, 0, 0, Parity::Electric);
  const auto ele = residual_dkp(el, g);
  CHECK(ele.size() == 6);
  for (const auto& r : ele) CHECK(r.pass);
  const auto lorentz = electric_potentials_lorentz(el, {0.3, 0.2});
  for (const auto& r : residual_dkp(el, g, &lorentz)) CHECK(r.pass);
  CHECK(residual_lorentz(lorentz, g).pass);
}

TEST_CASE("gradient solutions obey their equations, the Lorentz condition and the KFG equation") {
  const auto g = small_grid();
  for (int omega_g : {3, 5}) {
    const auto grad = gradient_solution(ModeIndex::make(2, 1, 0, Parity::Electric), omega_g);
    const auto reps = residual_potential_equations(grad, g);
    CHECK(reps.size() == 3);
    for (const auto& r : reps) CHECK(r.max_abs <= 1e-9);
    CHECK(residual_lorentz(grad, g).max_abs <= 1e-8);
    CHECK(residual_conformal_kfg(grad, g).max_abs <= 1e-7);
    for (const auto& r : residual_dkp(grad.mode(), g, &grad)) CHECK(r.pass);
  }
}

TEST_CASE("Landau potentials satisfy their equations and the Lorentz condition") {
  const auto g = small_grid();
  const auto landau = electric_potentials_landau(ModeIndex::make(2, 0, 1, Parity::Electric));
  for (const auto& r : residual_potential_equations(landau, g)) CHECK(r.pass);
  // with zero integration constants the Landau set is itself Lorentz-gauge
  CHECK(residual_lorentz(landau, g).max_abs <= 1e-8);
}

TEST_CASE("Lorentz condition and KFG detect a perturbed g1") {
  const auto g = small_grid();
  const auto pot = electric_potentials_lorentz(ModeIndex::make(1, 0, 0, Parity::Electric), 1.0);
  SuiteOptions bad;
  bad.perturbation = Perturbation{Profile::G1, 1e-3};
  CHECK(residual_lorentz(pot, g, bad).max_abs > 1e-7);
  CHECK_FALSE(residual_potential_equations(pot, g, bad)[1].pass);
}

TEST_CASE("conformal KFG of a constant is twice the constant") {
  const ProfileFn c = [](LD, LD) { return CL(0.75, -1.0); };
  const auto rep = residual_conformal_kfg(c, ModeIndex::make(1, 0, 0, Parity::Electric), small_grid());
  // the j(j+1)/sin^2 term is part of the operator, so compare against j = 0 by hand
  const auto g = small_grid();
  double expected = 0;
  for (double r : g.r_values()) {
    for (double t : g.t_values()) {
      const double v = std::abs(std::complex<double>(0.75, -1.0) *
                                (2.0 + 2.0 / (std::cosh(t) * std::cosh(t) * std::sin(r) * std::sin(r))));
      expected = std::max(expected, v);
    }
  }
  CHECK(rep.max_abs == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("radial ODE residual") {
  for (int j = 1; j <= 3; ++j) {
    const auto rep = residual_radial(ModeIndex::make(j, 0, 2, Parity::Magnetic));
    CHECK(rep.pass);
    CHECK(rep.n_points == 200);
  }
}

TEST_CASE("full Maxwell residual") {
  GridSpec g;
  const auto pts = random_interior_points(g, 20, 7);
  CHECK(residual_full_maxwell(ModeIndex::make(1, 0, 0, Parity::Magnetic), pts).pass);
  CHECK(residual_full_maxwell(ModeIndex::make(2, 1, 1, Parity::Electric), pts).pass);
  const FieldFn4 zero = [](const SpacetimePoint&) { return Vector4<double>::Zero().eval(); };
  CHECK(residual_full_maxwell(zero, pts).max_abs == 0.0);
  // a wrong-sign m breaks the angular part
  const ScalarTriple triple(ModeIndex::make(2, 1, 1, Parity::Electric));
  const FieldFn4 flipped = [&](const SpacetimePoint& p) {
    SpacetimePoint q = p;
    q.phi = -p.phi;
    return mo_field(triple, q).psi;
  };
  CHECK_FALSE(residual_full_maxwell(flipped, pts).pass);
}

TEST_CASE("reports are deterministic and pass iff max <= tolerance") {
  const auto mode = ModeIndex::make(2, 0, 1, Parity::Magnetic);
  const auto a = residual_mo_reduced(mode, small_grid());
  const auto b = residual_mo_reduced(mode, small_grid());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].max_abs == b[k].max_abs);
    CHECK(a[k].rms == b[k].rms);
    CHECK(a[k].worst_point.t == b[k].worst_point.t);
    CHECK(a[k].worst_point.r == b[k].worst_point.r);
  }
  SuiteOptions tight;
  tight.tolerance = 1e-30;
  for (const auto& r : residual_mo_reduced(mode, small_grid(), tight)) CHECK(r.pass == (r.max_abs <= 1e-30));
  const auto p1 = random_interior_points(GridSpec{}, 5, 42);
  const auto p2 = random_interior_points(GridSpec{}, 5, 42);
  for (int k = 0; k < 5; ++k) CHECK(p1[k].phi == p2[k].phi);
}

TEST_CASE("worst point lies on the grid") {
  const auto rep = residual_wave_G(ModeIndex::make(2, 0, 0, Parity::Magnetic), small_grid());
  const auto g = small_grid();
  const auto ts = g.t_values();
  CHECK(std::find(ts.begin(), ts.end(), rep.worst_point.t) != ts.end());
  CHECK(worst({rep}) == rep.max_abs);
}
