#include "dsem/modes.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace dsem;
using C = std::complex<double>;

namespace {

// Gegenbauer C_n^(lambda)(x) by its three-term recurrence.
double gegenbauer(int n, double lambda, double x) {
  double prev = 1, cur = 2 * lambda * x;
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    const double next = (2 * x * (k + lambda - 1) * cur - (k + 2 * lambda - 2) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidGrid;
}

}  // namespace

TEST_CASE("spectrum and mode validation") {
  CHECK(spectrum(1, 0) == 2);
  CHECK(spectrum(3, 2) == 6);
  CHECK(ModeIndex::make(2, -2, 1, Parity::Electric).omega() == 4);
  CHECK(ModeIndex::make(2, 0, 0, Parity::Magnetic).b_nu() == doctest::Approx(std::sqrt(3.0)));
  CHECK(ModeIndex::make(1, 0, 0, Parity::Magnetic).parity_sign() == 1);
  CHECK(ModeIndex::make(1, 0, 0, Parity::Electric).parity_sign() == -1);
  CHECK(kind_of([] { ModeIndex::make(0, 0, 0, Parity::Magnetic); }) == ErrorKind::InvalidQuantumNumbers);
  CHECK(kind_of([] { ModeIndex::make(1, 2, 0, Parity::Magnetic); }) == ErrorKind::InvalidQuantumNumbers);
  CHECK(kind_of([] { ModeIndex::make(1, 0, -1, Parity::Magnetic); }) == ErrorKind::InvalidQuantumNumbers);
  CHECK(kind_of([] { spectrum(0, 1); }) == ErrorKind::InvalidQuantumNumbers);
  CHECK(parse_parity("electric") == Parity::Electric);
  CHECK(parse_parity("M") == Parity::Magnetic);
}

TEST_CASE("radial solution for j = 1, n = 0 is -4 sin^2 r") {
  const RadialSolution R(ModeIndex::make(1, 0, 0, Parity::Magnetic));
  const double half_pi = std::numbers::pi / 2;
  CHECK(std::abs(R.value(half_pi) - C(-4)) < 1e-14);
  CHECK(std::abs(R.derivative(half_pi)) < 1e-14);
  for (double r : {0.1, 0.9, 2.2, 3.0}) {
    CHECK(std::abs(R.value(r) - C(-4 * std::sin(r) * std::sin(r))) < 1e-14);
    CHECK(std::abs(R.derivative(r) - C(-8 * std::sin(r) * std::cos(r))) < 1e-13);
  }
}

TEST_CASE("radial solution is proportional to sin^(j+1) r times a Gegenbauer polynomial") {
  for (int j = 1; j <= 5; ++j)
    for (int n = 0; n <= 5; ++n) {
      const RadialSolution R(ModeIndex::make(j, 0, n, Parity::Magnetic));
      auto oracle = [&](double r) { return std::pow(std::sin(r), j + 1) * gegenbauer(n, j + 1, std::cos(r)); };
      // pick a reference point away from the oracle's zeros
      double r0 = 0.31;
      const C k = R.value(r0) / oracle(r0);
      for (double r : {0.2, 0.77, 1.3, 1.9, 2.6}) {
        CAPTURE(j);
        CAPTURE(n);
        CHECK(std::abs(R.value(r) - k * oracle(r)) < 1e-10 * std::abs(k));
      }
    }
}

TEST_CASE("radial derivative agrees with a difference quotient") {
  const RadialSolution R(ModeIndex::make(3, 1, 2, Parity::Electric));
  const double h = 1e-6;
  for (double r : {0.3, 1.5, 2.9}) {
    const C fd = (R.value(r + h) - R.value(r - h)) / (2 * h);
    CHECK(std::abs(R.derivative(r) - fd) < 1e-7 * (1 + std::abs(fd)));
  }
  CHECK(kind_of([&] { R.value(0.0); }) == ErrorKind::SingularPoint);
  CHECK(R.coeffs().size() == 3);
  CHECK(R.coeffs()[0] == C(1));
}

TEST_CASE("scalar triple at the reference point") {
  const ScalarTriple s(ModeIndex::make(1, 0, 0, Parity::Magnetic));
  const double half_pi = std::numbers::pi / 2;
  CHECK(std::abs(s.G(0.0, half_pi) - C(-4)) < 1e-14);
  CHECK(std::abs(s.F2(0.0, half_pi) - C(0, -2)) < 1e-14);
  CHECK(std::abs(s.F(0.0, half_pi)) < 1e-14);
  // pure e^{-iωτ} time dependence
  for (double tau : {-1.2, 0.4}) {
    const C ph = std::polar(1.0, -2 * tau);
    CHECK(std::abs(s.G(tau, 1.0) - ph * s.G(0.0, 1.0)) < 1e-14);
    CHECK(std::abs(s.F(tau, 1.0) - ph * s.F(0.0, 1.0)) < 1e-14);
    CHECK(std::abs(s.F2(tau, 1.0) - ph * s.F2(0.0, 1.0)) < 1e-14);
  }
}

TEST_CASE("MO field for j = 1, m = 0 matches the closed form") {
  const auto mode = ModeIndex::make(1, 0, 0, Parity::Magnetic);
  const SpacetimePoint p{0.4, 0.9, 1.2, 2.3};
  const auto f = mo_field(mode, p);
  CHECK(f.psi[0] == C(0));
  const double ch = std::cosh(p.t), sr = std::sin(p.r), cr = std::cos(p.r);
  const C ph = std::polar(1.0, -2 * std::atan(std::sinh(p.t)));
  const C G = ph * (-4 * sr * sr);
  const C F = ph * (-8 * sr * cr) / C(0, 2);
  const C F2 = -ph * (1.0 / sr) * (-4 * sr * sr) / C(0, 2);
  const double s = 1 / (ch * ch * sr);
  const double st = std::sin(p.theta), ct = std::cos(p.theta), r2 = std::sqrt(2.0);
  CHECK(std::abs(f.psi[1] - (F + G) / 2.0 * s * (-st / r2)) < 1e-14);
  CHECK(std::abs(f.psi[2] - F2 * s * ct) < 1e-14);
  CHECK(std::abs(f.psi[3] - (F - G) / 2.0 * s * (st / r2)) < 1e-14);
}

TEST_CASE("m = 0 fields do not depend on phi") {
  const auto mode = ModeIndex::make(2, 0, 1, Parity::Electric);
  const auto a = mo_field(mode, SpacetimePoint{0.2, 1.0, 0.8, 0.0});
  const auto b = mo_field(mode, SpacetimePoint{0.2, 1.0, 0.8, 4.0});
  CHECK((a.psi - b.psi).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("phi and DKP components round trip in both parity classes") {
  const std::array<C, 3> phi{C(0.3, -1.2), C(-0.7, 0.25), C(2.0, 0.5)};
  for (Parity par : {Parity::Magnetic, Parity::Electric}) {
    const auto f = dkp_from_mo(par, phi);
    const auto back = mo_from_dkp(par, f);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(back[k] - phi[k]) < 1e-15);
  }
  const auto fm = dkp_from_mo(Parity::Magnetic, phi);
  CHECK(fm[5] == C(0));
  CHECK(fm[6] == -fm[4]);
  CHECK(fm[9] == fm[7]);
  const auto fe = dkp_from_mo(Parity::Electric, phi);
  CHECK(fe[8] == C(0));
  CHECK(fe[6] == fe[4]);
  CHECK(fe[9] == -fe[7]);
}

TEST_CASE("magnetic DKP field relations") {
  const auto mode = ModeIndex::make(2, 1, 1, Parity::Magnetic);
  const SpacetimePoint p{-0.5, 1.4, 0.9, 0.1};
  const auto d = dkp_field(mode, p);
  const auto m = mo_field(mode, p);
  CHECK(d.f[0] == C(0));
  CHECK(d.f[2] == C(0));
  CHECK(d.f[3] == -d.f[1]);
  CHECK(std::abs(d.f[1] - std::cosh(p.t) * std::sin(p.r) * m.phi[1] / (2 * mode.b_nu())) < 1e-15);
}

TEST_CASE("potential sets") {
  const auto e = ModeIndex::make(2, 0, 1, Parity::Electric);
  const auto m = ModeIndex::make(2, 0, 1, Parity::Magnetic);
  CHECK(kind_of([&] { electric_potentials_landau(m); }) == ErrorKind::WrongParity);
  CHECK(kind_of([&] { electric_potentials_lorentz(m, 1.0); }) == ErrorKind::WrongParity);
  CHECK(kind_of([&] { gradient_solution(m, 4); }) == ErrorKind::WrongParity);
  CHECK(kind_of([&] { gradient_solution(e, 2); }) == ErrorKind::InvalidQuantumNumbers);

  const auto landau = electric_potentials_landau(e);
  const auto lorentz0 = electric_potentials_lorentz(e, 0.0);
  for (double r : {0.4, 2.0}) {
    const auto a = landau.at(0.3, r);
    const auto b = lorentz0.at(0.3, r);
    CHECK(a[0] == C(0));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(a[k] - b[k]) == 0);
  }
  const auto grad = gradient_solution(e, 6);
  CHECK(grad.pure_gauge());
  CHECK(grad.homogeneous_omega() == 6);
  const auto d = dkp_field(ScalarTriple(e), SpacetimePoint{0.1, 1.0, 1.0, 0.0}, &grad);
  for (int k = 4; k < 10; ++k) CHECK(d.f[k] == C(0));
  CHECK(kind_of([&] { dkp_field(ScalarTriple(e), SpacetimePoint{0.1, 1.0, 1.0, 0.0}); }) ==
        ErrorKind::WrongParity);
}

TEST_CASE("Lorentz g1 equals the homogeneous scalar over cosh t sin r") {
  const auto e = ModeIndex::make(1, 0, 1, Parity::Electric);
  const C A(0.5, -0.25);
  const auto pot = electric_potentials_lorentz(e, A);
  const RadialSolution R(e);
  for (double t : {-0.8, 0.6}) {
    const double tau = conformal_time(t), r = 1.3;
    const C expected = A * std::polar(1.0, -e.omega() * tau) * R.value(r) / (std::cosh(t) * std::sin(r));
    CHECK(std::abs(pot.at(tau, r)[0] - expected) < 1e-14);
  }
}
