#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "jforge/errors.hpp"
#include "jforge/symexpr/scalar_field.hpp"

namespace jforge {

using IndexTuple = std::vector<int>;

struct FormTag {};
struct VectorTag {};

template <class Coeff>
bool coeff_is_zero(const Coeff& c) {
  if constexpr (std::is_arithmetic_v<Coeff>) return c == Coeff(0);
  else return is_zero_exact(c);
}

// (-1)^(number of inversions) when merging two strictly increasing tuples;
// 0 when they share an index.
int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple* out);

// Graded element keyed by strictly increasing index tuples. Coeff is
// ScalarField for symbolic work or a floating type for numeric checks.
template <class Tag, class Coeff>
class BasicGraded {
 public:
  using Terms = std::map<IndexTuple, Coeff>;
  static constexpr bool is_form = std::is_same_v<Tag, FormTag>;

  BasicGraded() = default;
  BasicGraded(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree) {
    if (!chart_) throw DomainError("graded element needs a chart");
    dim_ = chart_->dim();
    check_degree();
  }
  // Chart-free numeric element.
  BasicGraded(int dim, int degree) : dim_(dim), degree_(degree) { check_degree(); }

  static BasicGraded basis(ChartPtr chart, IndexTuple idx, Coeff c = Coeff(1)) {
    BasicGraded g(chart, static_cast<int>(idx.size()));
    g.add_term(std::move(idx), std::move(c));
    return g;
  }
  static BasicGraded scalar(ChartPtr chart, Coeff c) {
    BasicGraded g(chart, 0);
    g.add_term({}, std::move(c));
    return g;
  }

  const ChartPtr& chart() const { return chart_; }
  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const IndexTuple& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  // Accepts indices in any order; reorders with the permutation sign.
  void add_term(IndexTuple idx, Coeff c) {
    if (static_cast<int>(idx.size()) != degree_) throw DomainError("term degree mismatch");
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
      for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
        if (idx[j - 1] == idx[j]) return;
        std::swap(idx[j - 1], idx[j]);
        sign = -sign;
      }
    for (int i : idx)
      if (i < 0 || i >= dim_) throw DomainError("index out of range");
    if (coeff_is_zero(c)) return;
    if (chart_) bind(c);
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
      terms_.emplace(std::move(idx), sign > 0 ? std::move(c) : Coeff(-c));
    } else {
      it->second = sign > 0 ? it->second + c : it->second - c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  BasicGraded operator-() const {
    BasicGraded r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }
  BasicGraded& operator+=(const BasicGraded& o) {
    if (absorb_zero(o)) return *this;
    for (const auto& [k, v] : o.terms_) add_sorted(k, v);
    return *this;
  }
  BasicGraded& operator-=(const BasicGraded& o) {
    if (absorb_zero(o)) return *this;
    for (const auto& [k, v] : o.terms_) add_sorted(k, -v);
    return *this;
  }
  friend BasicGraded operator+(BasicGraded a, const BasicGraded& b) { return a += b; }
  friend BasicGraded operator-(BasicGraded a, const BasicGraded& b) { return a -= b; }
  friend BasicGraded operator*(const Coeff& c, const BasicGraded& g) {
    BasicGraded r(g.shape());
    if (coeff_is_zero(c)) return r;
    for (const auto& [k, v] : g.terms_) {
      Coeff p = c * v;
      if (!coeff_is_zero(p)) r.terms_.emplace(k, std::move(p));
    }
    return r;
  }

  template <class F>
  BasicGraded map_coefficients(F&& f) const {
    BasicGraded r(shape());
    for (const auto& [k, v] : terms_) r.add_sorted(k, f(v));
    return r;
  }

  // Empty element of the same chart and given degree.
  BasicGraded zero_like(int degree) const {
    BasicGraded r = shape();
    r.degree_ = degree;
    r.check_degree();
    return r;
  }

  bool same_space(const BasicGraded& o) const {
    return dim_ == o.dim_ && compatible(chart_, o.chart_);
  }

  // Zero is degree-agnostic, as every zero element is the same empty map.
  friend bool operator==(const BasicGraded& a, const BasicGraded& b) {
    if (!a.same_space(b)) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  // Adds to a key known to be strictly increasing.
  void add_sorted(const IndexTuple& k, const Coeff& c) {
    if (coeff_is_zero(c)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      Coeff v = c;
      if (chart_) bind(v);
      terms_.emplace(k, std::move(v));
    } else {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

 private:
  BasicGraded shape() const {
    BasicGraded r;
    r.chart_ = chart_;
    r.dim_ = dim_;
    r.degree_ = degree_;
    return r;
  }
  // Degrees above dim are allowed and hold only zero.
  void check_degree() const {
    if (degree_ < 0) throw DomainError("negative degree");
  }
  // Checks a sum is well formed; true when nothing remains to add.
  bool absorb_zero(const BasicGraded& o) {
    if (!same_space(o)) throw ChartMismatch();
    if (o.is_zero()) return true;
    if (degree_ != o.degree_) {
      if (!is_zero()) throw DomainError("degree mismatch in sum");
      degree_ = o.degree_;
    }
    return false;
  }
  void bind(Coeff& c) const {
    if constexpr (std::is_same_v<Coeff, ScalarField>) {
      if (!compatible(c.chart(), chart_)) throw ChartMismatch();
      if (!c.chart()) c = c.with_chart(chart_);
    }
  }

  ChartPtr chart_;
  int dim_ = 0;
  int degree_ = 0;
  Terms terms_;
};

using DifferentialForm = BasicGraded<FormTag, ScalarField>;
using MultiVectorField = BasicGraded<VectorTag, ScalarField>;
template <class Real>
using NumericForm = BasicGraded<FormTag, Real>;

template <class Tag, class Coeff>
BasicGraded<Tag, Coeff> wedge(const BasicGraded<Tag, Coeff>& a, const BasicGraded<Tag, Coeff>& b) {
  if (!a.same_space(b)) throw ChartMismatch();
  int deg = a.degree() + b.degree();
  BasicGraded<Tag, Coeff> r = a.zero_like(deg);
  IndexTuple merged;
  for (const auto& [ka, va] : a.terms())
    for (const auto& [kb, vb] : b.terms()) {
      int s = merge_sign(ka, kb, &merged);
      if (s == 0) continue;
      Coeff p = va * vb;
      r.add_sorted(merged, s > 0 ? p : Coeff(-p));
    }
  return r;
}

template <class Tag, class Coeff>
BasicGraded<Tag, Coeff> wedge_power(const BasicGraded<Tag, Coeff>& a, int m) {
  BasicGraded<Tag, Coeff> r = a.zero_like(0);
  r.add_sorted({}, Coeff(1));
  for (int i = 0; i < m; ++i) r = wedge(r, a);
  return r;
}

// Coefficient of the unique top-degree basis element.
template <class Tag, class Coeff>
Coeff top_coefficient(const BasicGraded<Tag, Coeff>& a) {
  if (a.degree() != a.dim()) throw DomainError("not a top-degree element");
  IndexTuple all(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) all[static_cast<std::size_t>(i)] = i;
  return a.coefficient(all);
}

template <class Real, class Tag>
BasicGraded<Tag, Real> evaluate_at(const BasicGraded<Tag, ScalarField>& g, std::span<const Real> x) {
  BasicGraded<Tag, Real> r(g.dim(), g.degree());
  for (const auto& [k, v] : g.terms()) r.add_sorted(k, v.template evaluate<Real>(x));
  return r;
}

}  // namespace jforge
