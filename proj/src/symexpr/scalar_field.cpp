#include "jforge/symexpr/scalar_field.hpp"

namespace jforge {

namespace {
bool single_factor(const Polynomial& p) {
  if (!p.is_monomial()) return false;
  const Term& t = p.leading();
  if (t.m.is_one()) return t.c.is_integer() && t.c.sign() > 0;
  if (!t.c.is_one()) return false;
  int vars = 0;
  for (int i = 0; i < kMaxDim; ++i) vars += t.m.e[i] ? 1 : 0;
  return vars == 1 && t.m.deg == 1;
}
}  // namespace

ScalarField::ScalarField(Polynomial p) {
  ChartPtr c = p.chart();
  num_ = std::move(p);
  den_ = Polynomial(c, Rational(1));
}

ScalarField::ScalarField(Polynomial num, Polynomial den) {
  *this = normalized(std::move(num), std::move(den));
}

ScalarField ScalarField::coordinate(ChartPtr chart, int i) {
  return ScalarField(Polynomial::variable(std::move(chart), i));
}

ScalarField ScalarField::constant(ChartPtr chart, const Rational& c) {
  return ScalarField(Polynomial(std::move(chart), c));
}

ScalarField ScalarField::normalized(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero();
  ChartPtr chart = common_chart(num.chart(), den.chart());
  num = num.with_chart(chart);
  den = den.with_chart(chart);
  if (num.is_zero()) return ScalarField(Polynomial(chart), Polynomial(chart, Rational(1)), Canonical{});
  if (!den.is_constant()) {
    Polynomial g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  Rational lc = den.leading().c;
  if (!lc.is_one()) {
    Rational inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return ScalarField(std::move(num), std::move(den), Canonical{});
}

ScalarField canonicalize(const ScalarField& f) {
  return ScalarField(f.num(), f.den());
}

Rational ScalarField::constant_value() const {
  if (!is_constant()) throw DomainError("scalar field is not constant");
  return num_.constant_value() / den_.constant_value();
}

ScalarField ScalarField::with_chart(ChartPtr chart) const {
  return ScalarField(num_.with_chart(chart), den_.with_chart(chart), Canonical{});
}

ScalarField ScalarField::operator-() const {
  return ScalarField(-num_, den_, Canonical{});
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  if (a.is_zero()) return b.with_chart(a.chart());
  if (b.is_zero()) return a.with_chart(b.chart());
  if (a.den_.is_one() && b.den_.is_one()) {
    Polynomial n = a.num_ + b.num_;
    Polynomial d(n.chart(), Rational(1));
    return ScalarField(std::move(n), std::move(d), ScalarField::Canonical{});
  }
  if (a.den_ == b.den_) return ScalarField(a.num_ + b.num_, a.den_);
  if (a.den_.is_one()) {
    return ScalarField(a.num_ * b.den_ + b.num_, b.den_.with_chart(a.chart()), ScalarField::Canonical{});
  }
  if (b.den_.is_one()) {
    return ScalarField(a.num_ + b.num_ * a.den_, a.den_.with_chart(b.chart()), ScalarField::Canonical{});
  }
  // Henrici: only the common factor of the denominators can cancel.
  Polynomial g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    return ScalarField(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, ScalarField::Canonical{});
  }
  Polynomial ad = exact_div(a.den_, g), bd = exact_div(b.den_, g);
  Polynomial n = a.num_ * bd + b.num_ * ad;
  Polynomial d = ad * b.den_;
  if (n.is_zero()) return ScalarField(Polynomial(n.chart()), Polynomial(n.chart(), Rational(1)), ScalarField::Canonical{});
  Polynomial g2 = gcd(n, g);
  if (!g2.is_one()) {
    n = exact_div(n, g2);
    d = exact_div(d, g2);
  }
  return ScalarField(std::move(n), std::move(d), ScalarField::Canonical{});
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) { return a + (-b); }

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  ChartPtr chart = common_chart(a.chart(), b.chart());
  if (a.is_zero() || b.is_zero()) return ScalarField(Polynomial(chart), Polynomial(chart, Rational(1)), ScalarField::Canonical{});
  if (a.den_.is_one() && b.den_.is_one()) {
    Polynomial n = a.num_ * b.num_;
    return ScalarField(std::move(n), Polynomial(chart, Rational(1)), ScalarField::Canonical{});
  }
  // Cross cancellation keeps both factors coprime.
  Polynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  Polynomial an = g1.is_one() ? a.num_ : exact_div(a.num_, g1);
  Polynomial bd = g1.is_one() ? b.den_ : exact_div(b.den_, g1);
  Polynomial bn = g2.is_one() ? b.num_ : exact_div(b.num_, g2);
  Polynomial ad = g2.is_one() ? a.den_ : exact_div(a.den_, g2);
  Polynomial n = an * bn, d = ad * bd;
  Rational lc = d.leading().c;
  if (!lc.is_one()) {
    n = n.scaled(lc.inverse());
    d = d.scaled(lc.inverse());
  }
  return ScalarField(n.with_chart(chart), d.with_chart(chart), ScalarField::Canonical{});
}

ScalarField ScalarField::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Polynomial n = den_, d = num_;
  Rational lc = d.leading().c.inverse();
  return ScalarField(n.scaled(lc), d.scaled(lc), Canonical{});
}

ScalarField operator/(const ScalarField& a, const ScalarField& b) { return a * b.inverse(); }

ScalarField ScalarField::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  // Coprime stays coprime under powers.
  Polynomial pn = num_.pow(static_cast<unsigned>(n)), pd = den_.pow(static_cast<unsigned>(n));
  return ScalarField(std::move(pn), std::move(pd), Canonical{});
}

ScalarField ScalarField::partial(int i) const {
  if (i < 0 || i >= kMaxDim || (chart() && i >= chart()->dim()))
    throw DomainError("coordinate index out of range");
  if (is_constant()) return ScalarField(Polynomial(chart()), Polynomial(chart(), Rational(1)), Canonical{});
  if (den_.is_constant()) {
    Polynomial n = num_.derivative(i);
    return ScalarField(std::move(n), den_, Canonical{});
  }
  Polynomial dd = den_.derivative(i);
  if (dd.is_zero()) return ScalarField(num_.derivative(i), den_);
  // (n/d)' = (n' d - n d') / d^2; gcd(d, d') trims the square.
  Polynomial g = gcd(den_, dd);
  Polynomial dg = exact_div(den_, g);
  Polynomial n = num_.derivative(i) * dg - num_ * exact_div(dd, g);
  return ScalarField(std::move(n), den_ * dg);
}

std::string ScalarField::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.str();
  if (!single_factor(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

bool is_zero_exact(const ScalarField& f) { return f.is_zero(); }
bool is_zero_exact(const Rational& r) { return r.is_zero(); }

}  // namespace jforge
