#pragma once

#include <Eigen/Core>
#include <ostream>
#include <span>
#include <string>

#include "jforge/errors.hpp"
#include "jforge/symexpr/polynomial.hpp"

namespace jforge {

// Rational function num/den in canonical form: coprime, den monic under graded-lex.
// A default-constructed field is the zero constant with no chart; constants
// without a chart adopt the chart of whatever they are combined with.
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(const Rational& c) : num_(nullptr, c), den_(nullptr, Rational(1)) {}
  ScalarField(int c) : ScalarField(Rational(c)) {}
  explicit ScalarField(Polynomial p);
  ScalarField(Polynomial num, Polynomial den);

  static ScalarField coordinate(ChartPtr chart, int i);
  static ScalarField constant(ChartPtr chart, const Rational& c);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const ChartPtr& chart() const { return num_.chart(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  Rational constant_value() const;  // requires is_constant
  std::size_t complexity() const { return num_.size() + den_.size(); }

  ScalarField with_chart(ChartPtr chart) const;

  ScalarField operator-() const;
  ScalarField& operator+=(const ScalarField& o) { return *this = *this + o; }
  ScalarField& operator-=(const ScalarField& o) { return *this = *this - o; }
  ScalarField& operator*=(const ScalarField& o) { return *this = *this * o; }
  ScalarField& operator/=(const ScalarField& o) { return *this = *this / o; }
  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator/(const ScalarField& a, const ScalarField& b);
  ScalarField inverse() const;
  ScalarField pow(int n) const;

  ScalarField partial(int i) const;

  // Exact for Rational points, floating otherwise. Throws PoleError.
  template <class T>
  T evaluate(std::span<const T> x) const;
  template <class T>
  T evaluate(const Point<T>& p) const;

  // Canonical text in the shared grammar.
  std::string str() const;

  friend bool operator==(const ScalarField& a, const ScalarField& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::ostream& operator<<(std::ostream& os, const ScalarField& f) { return os << f.str(); }

 private:
  struct Canonical {};
  ScalarField(Polynomial num, Polynomial den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}
  static ScalarField normalized(Polynomial num, Polynomial den);

  Polynomial num_;
  Polynomial den_{nullptr, Rational(1)};
};

// Normalization entry point exposed for idempotence checks.
ScalarField canonicalize(const ScalarField& f);

template <class T>
T ScalarField::evaluate(std::span<const T> x) const {
  T d = den_.evaluate<T>(x);
  if (d == coerce<T>(Rational(0))) throw PoleError();
  return num_.evaluate<T>(x) / d;
}

template <class T>
T ScalarField::evaluate(const Point<T>& p) const {
  if (!compatible(chart(), p.chart)) throw ChartMismatch();
  return evaluate<T>(std::span<const T>(p.values.data(), static_cast<std::size_t>(p.values.size())));
}

bool is_zero_exact(const ScalarField& f);
bool is_zero_exact(const Rational& r);

}  // namespace jforge

namespace Eigen {
template <>
struct NumTraits<jforge::ScalarField> : GenericNumTraits<jforge::ScalarField> {
  using Real = jforge::ScalarField;
  using NonInteger = jforge::ScalarField;
  using Literal = jforge::ScalarField;
  using Nested = jforge::ScalarField;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 50,
    MulCost = 50
  };
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
