#pragma once

// Constant matrices of the Majorana-Oppenheimer (MO) formulation of Maxwell's
// equations: alpha^0..alpha^3, the SO(3,C) generators S^k and N^k = i S^k,
// the cyclic-basis transform, and the symbol dictionary that turns the
// massive DKP operator into the MO one.
//
// Matrices act on column 4-vectors (Psi_0, Psi_1, Psi_2, Psi_3). Everything is
// built in exact arithmetic; to_complex<T>() converts at the module boundary.

#include "dsem/exact.hpp"

#include <Eigen/Core>

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace dsem {

enum class Basis { Cartesian, Cyclic };

template <typename Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

using ExactMatrix4 = Matrix4<ExactComplex>;
using ExactMatrix3 = Matrix3<ExactComplex>;

struct CyclicTransform {
  ExactMatrix4 U4;     // block-diag(1, U)
  ExactMatrix3 U;
  ExactMatrix3 U_inv;  // = U^+
};

struct Generators {
  std::array<ExactMatrix4, 3> S;  // S^1 = j^23, S^2 = j^31, S^3 = j^12
  std::array<ExactMatrix4, 3> N;  // N^k = j^0k = i S^k
};

/// (alpha^0, alpha^1, alpha^2, alpha^3); alpha^0 = -i I in both bases.
std::array<ExactMatrix4, 4> mo_alphas(Basis basis);

Generators so3c_generators(Basis basis);

/// 3x3 rotation generators tau_k ((tau_k)_ij = -eps_kij in the Cartesian basis).
std::array<ExactMatrix3, 3> tau_matrices(Basis basis);

CyclicTransform cyclic_transform();

/// j^{ab} for a, b in {0,1,2,3}; antisymmetric, j^{aa} = 0.
ExactMatrix4 lorentz_generator(int a, int b, Basis basis);

/// X' = U4 X U4^{-1}.
ExactMatrix4 to_cyclic(const ExactMatrix4& cartesian);

template <typename Derived>
auto commutator(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Derived>& b) {
  using M = typename Derived::PlainObject;
  M ab = a * b;
  M ba = b * a;
  return M(ab - ba);
}

template <typename T, int N>
Eigen::Matrix<std::complex<T>, N, N> to_complex(const Eigen::Matrix<ExactComplex, N, N>& m) {
  return m.unaryExpr([](const ExactComplex& x) { return x.template to_complex<T>(); });
}

// ---------------------------------------------------------------------------
// DKP -> MO dictionary

enum class MoTarget { Identity, Alpha, S };

struct Substitution {
  std::string dkp;           // e.g. "j^32"
  std::string mo;            // e.g. "-S^1"
  ExactComplex coefficient;  // mo = coefficient * target(index)
  MoTarget target;
  int index;                 // 1..3, or 0 when the entry is grouped over k
  bool grouped_over_k;
};

/// The six formal changes, with i*beta^k and j^{0k} grouped over k = 1..3.
const std::vector<Substitution>& dkp_substitution_table();

/// Throws std::out_of_range when the symbol is not in the table.
const Substitution& lookup_substitution(std::string_view dkp_symbol);

/// Materialize the MO side of an entry; k selects the member of a grouped entry.
ExactMatrix4 substitution_matrix(const Substitution& s, int k, Basis basis);

}  // namespace dsem
