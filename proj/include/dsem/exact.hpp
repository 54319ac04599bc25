#pragma once

// Exact arithmetic in the field Q(sqrt 2)(i). Every constant matrix of the
// Majorana-Oppenheimer representation (and the cyclic transform) has entries
// of the form (p + q sqrt2) + i (p' + q' sqrt2) with rational p, q, so all
// algebraic identities can be checked with zero tolerance.

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace dsem {

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  long double to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// p + q*sqrt(2) with rational p, q.
class QSqrt2 {
 public:
  constexpr QSqrt2() = default;
  QSqrt2(Rational p, Rational q = Rational(0)) : p_(p), q_(q) {}  // NOLINT
  QSqrt2(int p) : p_(p) {}                                        // NOLINT

  static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }
  static QSqrt2 inv_sqrt2() { return {Rational(0), Rational(1, 2)}; }

  const Rational& rational_part() const { return p_; }
  const Rational& sqrt2_part() const { return q_; }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  double to_double() const;
  long double to_long_double() const;

  friend QSqrt2 operator+(const QSqrt2& a, const QSqrt2& b) { return {a.p_ + b.p_, a.q_ + b.q_}; }
  friend QSqrt2 operator-(const QSqrt2& a, const QSqrt2& b) { return {a.p_ - b.p_, a.q_ - b.q_}; }
  friend QSqrt2 operator*(const QSqrt2& a, const QSqrt2& b) {
    return {a.p_ * b.p_ + Rational(2) * a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_};
  }
  friend QSqrt2 operator/(const QSqrt2& a, const QSqrt2& b);
  QSqrt2 operator-() const { return {-p_, -q_}; }
  friend bool operator==(const QSqrt2& a, const QSqrt2& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

 private:
  Rational p_;
  Rational q_;
};

/// Gaussian element re + i*im over Q(sqrt 2).
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(QSqrt2 re, QSqrt2 im = QSqrt2()) : re_(re), im_(im) {}  // NOLINT
  ExactComplex(int re) : re_(re) {}                                    // NOLINT

  static ExactComplex i() { return {QSqrt2(0), QSqrt2(1)}; }

  const QSqrt2& real() const { return re_; }
  const QSqrt2& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  template <typename T>
  std::complex<T> to_complex() const;

  ExactComplex& operator+=(const ExactComplex& o) { return *this = *this + o; }
  ExactComplex& operator-=(const ExactComplex& o) { return *this = *this - o; }
  ExactComplex& operator*=(const ExactComplex& o) { return *this = *this * o; }
  ExactComplex& operator/=(const ExactComplex& o) { return *this = *this / o; }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b);
  ExactComplex operator-() const { return {-re_, -im_}; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

 private:
  QSqrt2 re_;
  QSqrt2 im_;
};

ExactComplex conj(const ExactComplex& x);
std::string to_string(const ExactComplex& x);
std::ostream& operator<<(std::ostream& os, const ExactComplex& x);

template <typename T>
std::complex<T> ExactComplex::to_complex() const {
  if constexpr (std::is_same_v<T, long double>) {
    return {re_.to_long_double(), im_.to_long_double()};
  } else {
    return {static_cast<T>(re_.to_double()), static_cast<T>(im_.to_double())};
  }
}

}  // namespace dsem

namespace Eigen {

template <>
struct NumTraits<dsem::ExactComplex> : GenericNumTraits<dsem::ExactComplex> {
  using Real = dsem::ExactComplex;
  using NonInteger = dsem::ExactComplex;
  using Nested = dsem::ExactComplex;
  using Literal = dsem::ExactComplex;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16,
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
