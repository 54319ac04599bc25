#include "dsem/exact.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dsem {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / (g == 0 ? 1 : g);
  den_ = den / (g == 0 ? 1 : g);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

double QSqrt2::to_double() const { return p_.to_double() + q_.to_double() * std::sqrt(2.0); }
long double QSqrt2::to_long_double() const {
  return p_.to_long_double() + q_.to_long_double() * std::sqrt(2.0L);
}

// (p + q s)^{-1} = (p - q s) / (p^2 - 2 q^2); the norm vanishes only at zero.
QSqrt2 operator/(const QSqrt2& a, const QSqrt2& b) {
  const Rational norm = b.p_ * b.p_ - Rational(2) * b.q_ * b.q_;
  if (norm.is_zero()) throw std::domain_error("QSqrt2: division by zero");
  const QSqrt2 conj_b(b.p_ / norm, -(b.q_ / norm));
  return a * conj_b;
}

ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
  const QSqrt2 norm = b.re_ * b.re_ + b.im_ * b.im_;
  const ExactComplex num = a * conj(b);
  return {num.re_ / norm, num.im_ / norm};
}

ExactComplex conj(const ExactComplex& x) { return {x.real(), -x.imag()}; }

namespace {

void append_qsqrt2(std::ostringstream& os, const QSqrt2& v) {
  const auto& p = v.rational_part();
  const auto& q = v.sqrt2_part();
  os << p.num();
  if (p.den() != 1) os << '/' << p.den();
  if (!q.is_zero()) {
    os << (q.num() < 0 ? "-" : "+") << std::llabs(q.num());
    if (q.den() != 1) os << '/' << q.den();
    os << "*sqrt2";
  }
}

}  // namespace

std::string to_string(const ExactComplex& x) {
  std::ostringstream os;
  os << '(';
  append_qsqrt2(os, x.real());
  os << ")+i(";
  append_qsqrt2(os, x.imag());
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& x) { return os << to_string(x); }

}  // namespace dsem
