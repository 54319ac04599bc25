#include "dsem/geometry.hpp"

#include <complex>

namespace dsem {

double RotationCoefficients::operator()(int a, int b, int c) const {
  if (a == b) return 0.0;
  if (a > b) return -(*this)(b, a, c);
  if (a == 0 && b == c) {
    if (b == 1) return g01_1;
    if (b == 2) return g02_2;
    if (b == 3) return g03_3;
  }
  // (3,1) and (3,2) are stored with the larger index first
  if (a == 1 && b == 3 && c == 1) return -g31_1;
  if (a == 2 && b == 3 && c == 2) return -g32_2;
  if (a == 1 && b == 2 && c == 2) return g12_2;
  return 0.0;
}

Eigen::Matrix4d metric_at(const SpacetimePoint& p) {
  const double ch2 = std::cosh(p.t) * std::cosh(p.t);
  const double sr2 = std::sin(p.r) * std::sin(p.r);
  const double st2 = std::sin(p.theta) * std::sin(p.theta);
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  g(0, 0) = 1.0;
  g(1, 1) = -ch2;
  g(2, 2) = -ch2 * sr2;
  g(3, 3) = -ch2 * sr2 * st2;
  return g;
}

FrameData frame_at(const SpacetimePoint& p, Basis basis) {
  require_interior(p);
  const double ch = std::cosh(p.t);
  const double th = std::tanh(p.t);
  const double sr = std::sin(p.r);
  const double cot_r = std::cos(p.r) / sr;
  const double cot_theta = std::cos(p.theta) / std::sin(p.theta);

  FrameData f;
  f.tetrad.setZero();
  f.tetrad(0, 0) = 1.0;
  f.tetrad(1, 2) = 1.0 / (ch * sr);
  f.tetrad(2, 3) = 1.0 / (ch * sr * std::sin(p.theta));
  f.tetrad(3, 1) = 1.0 / ch;

  f.rotation.g01_1 = th;
  f.rotation.g02_2 = th;
  f.rotation.g03_3 = th;
  f.rotation.g31_1 = cot_r / ch;
  f.rotation.g32_2 = cot_r / ch;
  f.rotation.g12_2 = cot_theta / (ch * sr);

  // (1/2) j^{ab} γ_{abk} summed over ordered pairs a < b
  for (int k = 1; k <= 3; ++k) {
    Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        const double gamma = f.rotation(a, b, k);
        if (gamma != 0.0) sum += to_complex<double>(lorentz_generator(a, b, basis)) * gamma;
      }
    f.spin_contractions[k - 1] = sum;
  }
  return f;
}

std::array<Eigen::Matrix4cd, 3> spin_contractions_closed_form(const SpacetimePoint& p,
                                                              Basis basis) {
  const auto gens = so3c_generators(basis);
  const Eigen::Matrix4cd S1 = to_complex<double>(gens.S[0]);
  const Eigen::Matrix4cd S2 = to_complex<double>(gens.S[1]);
  const Eigen::Matrix4cd S3 = to_complex<double>(gens.S[2]);
  const std::complex<double> i(0.0, 1.0);
  const double ch = std::cosh(p.t);
  const double th = std::tanh(p.t);
  const double cot_r = std::cos(p.r) / std::sin(p.r);
  const double cot_theta = std::cos(p.theta) / std::sin(p.theta);

  return {
      Eigen::Matrix4cd(i * th * S1 + (cot_r / ch) * S2),
      Eigen::Matrix4cd(-(cot_r / ch) * S1 + i * th * S2 + cot_theta / (ch * std::sin(p.r)) * S3),
      Eigen::Matrix4cd(i * th * S3),
  };
}

}  // namespace dsem
