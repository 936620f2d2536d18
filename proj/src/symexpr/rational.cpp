#include "jforge/symexpr/rational.hpp"

#include "jforge/errors.hpp"

namespace jforge {

Rational::Rational(long n, long d) {
  if (d == 0) throw DivisionByZero();
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'", 1);
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  return Rational(q);
}

long double Rational::to_long_double() const {
  // Two-term split keeps the 64-bit mantissa honest.
  mpf_class x(v_, 192);
  double hi = x.get_d();
  mpf_class rest(x - hi, 192);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(n, d));
}

}  // namespace jforge
