#include "jforge/symexpr/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "jforge/errors.hpp"

namespace jforge {

Monomial Monomial::unit(int i, int power) {
  if (i < 0 || i >= kMaxDim) throw DomainError("coordinate index out of range");
  if (power < 0 || power > 255) throw DomainError("exponent out of range");
  Monomial m;
  m.e[i] = static_cast<std::uint8_t>(power);
  m.deg = static_cast<std::uint16_t>(power);
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (int i = 0; i < kMaxDim; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxDim; ++i) {
    int s = e[i] + o.e[i];
    if (s > 255) throw DomainError("exponent overflow (degree > 255)");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.deg = static_cast<std::uint16_t>(deg + o.deg);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxDim; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
  r.deg = static_cast<std::uint16_t>(deg - o.deg);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  int d = 0;
  for (int i = 0; i < kMaxDim; ++i) {
    r.e[i] = std::min(e[i], o.e[i]);
    d += r.e[i];
  }
  r.deg = static_cast<std::uint16_t>(d);
  return r;
}

namespace {
bool desc(const Term& a, const Term& b) { return a.m > b.m; }
}  // namespace

Polynomial::Polynomial(ChartPtr chart, const Rational& c) : chart_(std::move(chart)) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(ChartPtr chart, int i) {
  if (!chart || i < 0 || i >= chart->dim()) throw DomainError("coordinate index out of range");
  Polynomial p(std::move(chart));
  p.terms_.push_back({Monomial::unit(i), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(ChartPtr chart, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(chart));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(ChartPtr chart, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), desc);
  Polynomial p(std::move(chart));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
    } else if (!t.c.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].c;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.m == m) return t.c;
  return Rational(0);
}

int Polynomial::degree_in(int v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.m.e[v]);
  return d;
}

Polynomial Polynomial::with_chart(ChartPtr chart) const {
  common_chart(chart_, chart);
  Polynomial p = *this;
  p.chart_ = chart ? chart : chart_;
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

namespace {
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].m > b[j].m)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].m > a[i].m) {
      out.push_back(subtract ? Term{b[j].m, -b[j].c} : b[j]);
      ++j;
    } else {
      Rational c = subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!c.is_zero()) out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  chart_ = common_chart(chart_, o.chart_);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  chart_ = common_chart(chart_, o.chart_);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  ChartPtr chart = common_chart(a.chart_, b.chart_);
  if (a.is_zero() || b.is_zero()) return Polynomial(chart);
  if (a.is_monomial()) return b.times_monomial(a.terms_[0].m, a.terms_[0].c).with_chart(chart);
  if (b.is_monomial()) return a.times_monomial(b.terms_[0].m, b.terms_[0].c).with_chart(chart);
  std::vector<Term> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc.push_back({s.m * t.m, s.c * t.c});
  return Polynomial::from_terms(chart, std::move(acc));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial(chart_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.c *= c;
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return Polynomial(chart_);
  Polynomial p = *this;
  for (auto& t : p.terms_) {
    t.m = t.m * m;
    t.c *= c;
  }
  return p;  // order preserved: multiplication by a monomial is monotone
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(chart_, Rational(1));
  Polynomial base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(int i) const {
  if (i < 0 || (chart_ && i >= chart_->dim()) || i >= kMaxDim)
    throw DomainError("coordinate index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (!t.m.e[i]) continue;
    Term d{t.m, t.c * Rational(static_cast<long>(t.m.e[i]))};
    d.m.e[i] -= 1;
    d.m.deg -= 1;
    out.push_back(std::move(d));
  }
  // Order can change when exponents drop; re-sort.
  return from_terms(chart_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!compatible(a.chart_, b.chart_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    c = c.abs();
    std::string mono;
    for (int i = 0; i < kMaxDim; ++i) {
      if (!t.m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += chart_ ? chart_->name(i) : ("x" + std::to_string(i));
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) os << c.str();
    else if (c.is_one()) os << mono;
    else os << c.str() << "*" << mono;
  }
  return os.str();
}

std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  ChartPtr chart = common_chart(a.chart(), b.chart());
  if (a.is_zero()) return Polynomial(chart);
  const Term& lb = b.leading();
  if (b.is_monomial()) {
    Rational inv = lb.c.inverse();
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!lb.m.divides(t.m)) return std::nullopt;
      out.push_back({t.m / lb.m, t.c * inv});
    }
    return Polynomial::from_terms(chart, std::move(out));
  }
  std::vector<Term> q;
  Polynomial r = a;
  Rational inv = lb.c.inverse();
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lb.m.divides(lr.m)) return std::nullopt;
    Term t{lr.m / lb.m, lr.c * inv};
    r -= b.times_monomial(t.m, t.c);
    q.push_back(std::move(t));
  }
  return Polynomial::from_terms(chart, std::move(q));
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw DomainError("inexact polynomial division");
  return *std::move(q);
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero() || p.leading().c.is_one()) return p;
  return p.scaled(p.leading().c.inverse());
}

Polynomial primitive_integer(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class l = 1, g = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.gmp().get_den_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.gmp().get_num_mpz_t());
  }
  mpq_class s(l, g);
  if (p.leading().c.sign() < 0) s = -s;
  if (s == 1) return p;
  return p.scaled(Rational(s));
}

}  // namespace jforge
