#include "dsem/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsem {

namespace {

ExactComplex c_i() { return ExactComplex::i(); }

ExactMatrix4 from_ints(const int (&v)[4][4]) {
  ExactMatrix4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = ExactComplex(v[r][c]);
  return m;
}

ExactMatrix4 embed(const ExactMatrix3& block) {
  ExactMatrix4 m = ExactMatrix4::Zero();
  m.bottomRightCorner<3, 3>() = block;
  return m;
}

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // even permutations of (0,1,2)
  if ((i == 0 && j == 1 && k == 2) || (i == 1 && j == 2 && k == 0) || (i == 2 && j == 0 && k == 1))
    return 1;
  return -1;
}

std::array<ExactMatrix4, 4> cartesian_alphas() {
  static const int a1[4][4] = {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  static const int a2[4][4] = {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
  static const int a3[4][4] = {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
  ExactMatrix4 a0 = ExactMatrix4::Identity() * (-c_i());
  return {a0, from_ints(a1), from_ints(a2), from_ints(a3)};
}

std::array<ExactMatrix3, 3> cartesian_taus() {
  std::array<ExactMatrix3, 3> taus;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) taus[k](i, j) = ExactComplex(-levi_civita(k, i, j));
  return taus;
}

}  // namespace

CyclicTransform cyclic_transform() {
  const QSqrt2 w = QSqrt2::inv_sqrt2();
  const ExactComplex pw(w);
  const ExactComplex iw(QSqrt2(0), w);
  const ExactComplex one(1);
  const ExactComplex zero(0);

  CyclicTransform ct;
  ct.U << -pw, iw, zero,
          zero, zero, one,
          pw, iw, zero;
  ct.U_inv << -pw, zero, pw,
              -iw, zero, -iw,
              zero, one, zero;
  ct.U4 = ExactMatrix4::Identity();
  ct.U4.bottomRightCorner<3, 3>() = ct.U;
  return ct;
}

ExactMatrix4 to_cyclic(const ExactMatrix4& cartesian) {
  static const CyclicTransform ct = cyclic_transform();
  ExactMatrix4 u4_inv = ExactMatrix4::Identity();
  u4_inv.bottomRightCorner<3, 3>() = ct.U_inv;
  ExactMatrix4 tmp = ct.U4 * cartesian;
  return tmp * u4_inv;
}

std::array<ExactMatrix4, 4> mo_alphas(Basis basis) {
  auto alphas = cartesian_alphas();
  if (basis == Basis::Cyclic)
    for (auto& a : alphas) a = to_cyclic(a);
  return alphas;
}

std::array<ExactMatrix3, 3> tau_matrices(Basis basis) {
  auto taus = cartesian_taus();
  if (basis == Basis::Cyclic) {
    const CyclicTransform ct = cyclic_transform();
    for (auto& t : taus) {
      ExactMatrix3 tmp = ct.U * t;
      t = tmp * ct.U_inv;
    }
  }
  return taus;
}

Generators so3c_generators(Basis basis) {
  const auto taus = tau_matrices(basis);
  Generators g;
  for (int k = 0; k < 3; ++k) {
    g.S[k] = embed(taus[k]);
    g.N[k] = g.S[k] * c_i();
  }
  return g;
}

ExactMatrix4 lorentz_generator(int a, int b, Basis basis) {
  if (a < 0 || a > 3 || b < 0 || b > 3) throw std::out_of_range("lorentz_generator: index");
  if (a == b) return ExactMatrix4::Zero();
  if (a > b) return -lorentz_generator(b, a, basis);
  const Generators g = so3c_generators(basis);
  if (a == 0) return g.N[b - 1];
  // spatial pairs (1,2) -> S^3, (2,3) -> S^1, (1,3) -> -j^31 = -S^2
  if (a == 1 && b == 2) return g.S[2];
  if (a == 2 && b == 3) return g.S[0];
  return -g.S[1];
}

const std::vector<Substitution>& dkp_substitution_table() {
  static const std::vector<Substitution> table = [] {
    const ExactComplex i = ExactComplex::i();
    return std::vector<Substitution>{
        {"i*beta^0", "-i", -i, MoTarget::Identity, 0, false},
        {"i*beta^k", "alpha^k", ExactComplex(1), MoTarget::Alpha, 0, true},
        {"j^0k", "i*S^k", i, MoTarget::S, 0, true},
        {"j^31", "S^2", ExactComplex(1), MoTarget::S, 2, false},
        {"j^32", "-S^1", ExactComplex(-1), MoTarget::S, 1, false},
        {"j^12", "S^3", ExactComplex(1), MoTarget::S, 3, false},
    };
  }();
  return table;
}

const Substitution& lookup_substitution(std::string_view dkp_symbol) {
  const auto& table = dkp_substitution_table();
  auto it = std::find_if(table.begin(), table.end(),
                         [&](const Substitution& s) { return s.dkp == dkp_symbol; });
  if (it == table.end()) throw std::out_of_range("unknown DKP symbol: " + std::string(dkp_symbol));
  return *it;
}

ExactMatrix4 substitution_matrix(const Substitution& s, int k, Basis basis) {
  const int index = s.grouped_over_k ? k : s.index;
  switch (s.target) {
    case MoTarget::Identity:
      return ExactMatrix4::Identity() * s.coefficient;
    case MoTarget::Alpha:
      if (index < 1 || index > 3) throw std::out_of_range("substitution_matrix: k");
      return mo_alphas(basis)[index] * s.coefficient;
    case MoTarget::S:
      if (index < 1 || index > 3) throw std::out_of_range("substitution_matrix: k");
      return so3c_generators(basis).S[index - 1] * s.coefficient;
  }
  return ExactMatrix4::Zero();
}

}  // namespace dsem
