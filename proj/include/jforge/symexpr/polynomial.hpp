#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "jforge/symexpr/chart.hpp"
#include "jforge/symexpr/rational.hpp"

namespace jforge {

// Exponent vector with cached total degree. Ordered graded-lex, x1 > x2 > ...
struct Monomial {
  std::array<std::uint8_t, kMaxDim> e{};
  std::uint16_t deg = 0;

  static Monomial unit(int i, int power = 1);

  bool is_one() const { return deg == 0; }
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divides
  Monomial gcd(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg <=> b.deg;
    for (int i = 0; i < kMaxDim; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] <=> b.e[i];
    return std::strong_ordering::equal;
  }
};

struct Term {
  Monomial m;
  Rational c;
};

template <class T>
T coerce(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>) return r;
  else if constexpr (std::is_floating_point_v<T>) return to_real<T>(r);
  else return T(r);
}

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(ChartPtr chart) : chart_(std::move(chart)) {}
  Polynomial(ChartPtr chart, const Rational& c);

  static Polynomial variable(ChartPtr chart, int i);
  static Polynomial monomial(ChartPtr chart, const Monomial& m, const Rational& c);
  // Terms in any order; duplicates are merged and zeros dropped.
  static Polynomial from_terms(ChartPtr chart, std::vector<Term> terms);

  const ChartPtr& chart() const { return chart_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].c.is_one(); }
  Rational constant_value() const;  // requires is_constant
  Rational coefficient(const Monomial& m) const;

  // Leading term under graded-lex; requires nonzero.
  const Term& leading() const { return terms_.front(); }
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().m.deg; }
  int degree_in(int v) const;
  bool depends_on(int v) const { return degree_in(v) > 0; }

  Polynomial with_chart(ChartPtr chart) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned n) const;

  Polynomial derivative(int i) const;

  template <class T>
  T evaluate(std::span<const T> x) const;

  std::string str() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  ChartPtr chart_;
  std::vector<Term> terms_;  // strictly decreasing monomials, nonzero coefficients
};

// Division that must be exact; nullopt when b does not divide a.
std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b);
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

// Leading coefficient scaled to one (zero stays zero).
Polynomial monic(const Polynomial& p);
// Coprime integer coefficients with positive leading coefficient.
Polynomial primitive_integer(const Polynomial& p);
// Monic greatest common divisor; gcd(0,0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

template <class T>
T Polynomial::evaluate(std::span<const T> x) const {
  const int n = chart_ ? chart_->dim() : 0;
  if (static_cast<int>(x.size()) < n) throw std::invalid_argument("point has too few coordinates");
  std::array<int, kMaxDim> maxdeg{};
  for (const auto& t : terms_)
    for (int i = 0; i < n; ++i) maxdeg[i] = std::max<int>(maxdeg[i], t.m.e[i]);
  std::array<std::vector<T>, kMaxDim> powers;
  for (int i = 0; i < n; ++i) {
    powers[i].reserve(static_cast<std::size_t>(maxdeg[i]) + 1);
    powers[i].push_back(coerce<T>(Rational(1)));
    for (int k = 1; k <= maxdeg[i]; ++k) powers[i].push_back(powers[i].back() * x[i]);
  }
  T acc = coerce<T>(Rational(0));
  for (const auto& t : terms_) {
    T v = coerce<T>(t.c);
    for (int i = 0; i < n; ++i)
      if (t.m.e[i]) v = v * powers[i][t.m.e[i]];
    acc = acc + v;
  }
  return acc;
}

}  // namespace jforge
