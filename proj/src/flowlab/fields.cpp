#include "jforge/flowlab/fields.hpp"

#include <cmath>

#include "jforge/errors.hpp"

namespace jforge {

Real mollifier(Real v2) {
  if (v2 >= 1) return 0;
  return std::exp(1 - 1 / (1 - v2));
}

Real mollifier_dv2(Real v2) {
  if (v2 >= 1) return 0;
  const Real d = 1 - v2;
  return -mollifier(v2) / (d * d);
}

namespace {
std::vector<std::pair<int, int>> powers_of(const Monomial& m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < kMaxDim; ++i)
    if (m.e[static_cast<std::size_t>(i)]) out.emplace_back(i, m.e[static_cast<std::size_t>(i)]);
  return out;
}
}  // namespace

CompiledField::CompiledField(const ScalarField& f) {
  for (const Term& t : f.num().terms()) num_.push_back({to_real<Real>(t.c), powers_of(t.m)});
  if (!f.den().is_one())
    for (const Term& t : f.den().terms()) den_.push_back({to_real<Real>(t.c), powers_of(t.m)});
}

Real CompiledField::eval(const std::vector<Mono>& p, const RVec& x) {
  Real acc = 0;
  for (const Mono& m : p) {
    Real v = m.c;
    for (const auto& [i, e] : m.powers) {
      const Real xi = x(i);
      for (int k = 0; k < e; ++k) v *= xi;
    }
    acc += v;
  }
  return acc;
}

Real CompiledField::operator()(const RVec& x) const {
  if (num_.empty()) return 0;
  const Real n = eval(num_, x);
  if (den_.empty()) return n;
  const Real d = eval(den_, x);
  if (d == 0) throw PoleError();
  return n / d;
}

namespace {

Real g(Real s) { return s > 0 ? std::exp(-1 / s) : 0; }
Real dg(Real s) { return s > 0 ? std::exp(-1 / s) / (s * s) : 0; }

void check_dim(const RVec& x, int dim) {
  if (x.size() != dim) throw DomainError("numeric field evaluated at a point of the wrong dimension");
}

class Constant final : public NumericScalar {
 public:
  Constant(int dim, Real c) : dim_(dim), c_(c) {}
  int dim() const override { return dim_; }
  Real value(const RVec&) const override { return c_; }
  RVec gradient(const RVec&) const override { return RVec::Zero(dim_); }

 private:
  int dim_;
  Real c_;
};

class Symbolic final : public NumericScalar {
 public:
  Symbolic(const ScalarField& f, int dim) : f_(f), dim_(dim) {
    for (int i = 0; i < dim; ++i) df_.emplace_back(f.partial(i));
  }
  int dim() const override { return dim_; }
  Real value(const RVec& x) const override {
    check_dim(x, dim_);
    return f_(x);
  }
  RVec gradient(const RVec& x) const override {
    check_dim(x, dim_);
    RVec g(dim_);
    for (int i = 0; i < dim_; ++i) g(i) = df_[static_cast<std::size_t>(i)](x);
    return g;
  }

 private:
  CompiledField f_;
  std::vector<CompiledField> df_;
  int dim_;
};

class Bump final : public NumericScalar {
 public:
  Bump(RVec c, Real r, Real a) : c_(std::move(c)), r_(r), a_(a) {
    if (!(r > 0)) throw DomainError("bump radius must be positive");
  }
  int dim() const override { return static_cast<int>(c_.size()); }
  Real value(const RVec& x) const override {
    check_dim(x, dim());
    return a_ * mollifier((x - c_).squaredNorm() / (r_ * r_));
  }
  RVec gradient(const RVec& x) const override {
    check_dim(x, dim());
    const Real v2 = (x - c_).squaredNorm() / (r_ * r_);
    if (v2 >= 1) return RVec::Zero(dim());
    return (a_ * mollifier_dv2(v2) * 2 / (r_ * r_)) * (x - c_);
  }

 private:
  RVec c_;
  Real r_, a_;
};

class PlateauBump final : public NumericScalar {
 public:
  PlateauBump(RVec c, Real inner, Real outer, Real a) : c_(std::move(c)), in_(inner), out_(outer), a_(a) {
    if (!(inner >= 0 && outer > inner)) throw DomainError("plateau needs 0 <= inner < radius");
  }
  int dim() const override { return static_cast<int>(c_.size()); }
  Real value(const RVec& x) const override {
    check_dim(x, dim());
    return a_ * plateau((x - c_).norm(), in_, out_);
  }
  RVec gradient(const RVec& x) const override {
    check_dim(x, dim());
    const Real rho = (x - c_).norm();
    if (rho <= in_ || rho >= out_) return RVec::Zero(dim());
    return (a_ * plateau_ds(rho, in_, out_) / rho) * (x - c_);
  }

 private:
  RVec c_;
  Real in_, out_, a_;
};

class BoxBump final : public NumericScalar {
 public:
  BoxBump(RVec c, RVec half) : c_(std::move(c)), h_(std::move(half)) {
    if (c_.size() != h_.size() || (h_.array() <= 0).any()) throw DomainError("box bump needs positive half-widths");
  }
  int dim() const override { return static_cast<int>(c_.size()); }
  Real value(const RVec& x) const override {
    check_dim(x, dim());
    Real v = 1;
    for (int i = 0; i < dim() && v != 0; ++i) v *= mollifier(sq(i, x));
    return v;
  }
  RVec gradient(const RVec& x) const override {
    check_dim(x, dim());
    const int n = dim();
    RVec f(n), df(n);
    for (int i = 0; i < n; ++i) {
      const Real v2 = sq(i, x);
      f(i) = mollifier(v2);
      df(i) = mollifier_dv2(v2) * 2 * (x(i) - c_(i)) / (h_(i) * h_(i));
    }
    RVec grad(n);
    for (int i = 0; i < n; ++i) {
      Real p = df(i);
      for (int j = 0; j < n; ++j)
        if (j != i) p *= f(j);
      grad(i) = p;
    }
    return grad;
  }

 private:
  Real sq(int i, const RVec& x) const {
    const Real v = (x(i) - c_(i)) / h_(i);
    return v * v;
  }
  RVec c_, h_;
};

class BoxPlateau final : public NumericScalar {
 public:
  BoxPlateau(RVec c, RVec inner, RVec outer) : c_(std::move(c)), in_(std::move(inner)), out_(std::move(outer)) {
    if (c_.size() != in_.size() || c_.size() != out_.size() || (out_.array() <= in_.array()).any() ||
        (in_.array() < 0).any())
      throw DomainError("box plateau needs 0 <= inner < outer");
  }
  int dim() const override { return static_cast<int>(c_.size()); }
  Real value(const RVec& x) const override {
    check_dim(x, dim());
    Real v = 1;
    for (int i = 0; i < dim() && v != 0; ++i) v *= plateau(x(i) - c_(i), in_(i), out_(i));
    return v;
  }
  RVec gradient(const RVec& x) const override {
    check_dim(x, dim());
    const int n = dim();
    RVec f(n), df(n);
    for (int i = 0; i < n; ++i) {
      f(i) = plateau(x(i) - c_(i), in_(i), out_(i));
      df(i) = plateau_ds(x(i) - c_(i), in_(i), out_(i));
    }
    RVec grad(n);
    for (int i = 0; i < n; ++i) {
      Real p = df(i);
      for (int j = 0; j < n; ++j)
        if (j != i) p *= f(j);
      grad(i) = p;
    }
    return grad;
  }

 private:
  RVec c_, in_, out_;
};

class Sum final : public NumericScalar {
 public:
  explicit Sum(std::vector<ScalarFn> t) : t_(std::move(t)) {
    if (t_.empty()) throw DomainError("empty sum");
    for (const auto& f : t_)
      if (f->dim() != t_.front()->dim()) throw DomainError("sum of fields on different dimensions");
  }
  int dim() const override { return t_.front()->dim(); }
  Real value(const RVec& x) const override {
    Real v = 0;
    for (const auto& f : t_) v += f->value(x);
    return v;
  }
  RVec gradient(const RVec& x) const override {
    RVec g = RVec::Zero(dim());
    for (const auto& f : t_) g += f->gradient(x);
    return g;
  }

 private:
  std::vector<ScalarFn> t_;
};

class Product final : public NumericScalar {
 public:
  explicit Product(std::vector<ScalarFn> f) : f_(std::move(f)) {
    if (f_.empty()) throw DomainError("empty product");
    for (const auto& h : f_)
      if (h->dim() != f_.front()->dim()) throw DomainError("product of fields on different dimensions");
  }
  int dim() const override { return f_.front()->dim(); }
  Real value(const RVec& x) const override {
    Real v = 1;
    for (const auto& h : f_) v *= h->value(x);
    return v;
  }
  RVec gradient(const RVec& x) const override {
    std::vector<Real> v;
    for (const auto& h : f_) v.push_back(h->value(x));
    RVec g = RVec::Zero(dim());
    for (std::size_t i = 0; i < f_.size(); ++i) {
      Real others = 1;
      for (std::size_t j = 0; j < f_.size(); ++j)
        if (j != i) others *= v[j];
      if (others != 0) g += others * f_[i]->gradient(x);
    }
    return g;
  }

 private:
  std::vector<ScalarFn> f_;
};

class Scaled final : public NumericScalar {
 public:
  Scaled(ScalarFn f, Real c) : f_(std::move(f)), c_(c) {}
  int dim() const override { return f_->dim(); }
  Real value(const RVec& x) const override { return c_ * f_->value(x); }
  RVec gradient(const RVec& x) const override { return c_ * f_->gradient(x); }

 private:
  ScalarFn f_;
  Real c_;
};

class TimeLifted final : public NumericScalar {
 public:
  explicit TimeLifted(ScalarFn f) : f_(std::move(f)) {}
  int dim() const override { return f_->dim() + 1; }
  Real value(const RVec& x) const override { return f_->value(x.head(f_->dim())); }
  RVec gradient(const RVec& x) const override {
    RVec g = RVec::Zero(dim());
    g.head(f_->dim()) = f_->gradient(x.head(f_->dim()));
    return g;
  }

 private:
  ScalarFn f_;
};

class Coordinate final : public NumericScalar {
 public:
  Coordinate(int dim, int i) : dim_(dim), i_(i) {}
  int dim() const override { return dim_; }
  Real value(const RVec& x) const override { return x(i_); }
  RVec gradient(const RVec&) const override {
    RVec g = RVec::Zero(dim_);
    g(i_) = 1;
    return g;
  }

 private:
  int dim_, i_;
};

}  // namespace

Real plateau(Real s, Real a, Real b) {
  const Real r = std::fabs(s);
  if (r <= a) return 1;
  if (r >= b) return 0;
  const Real p = g(b - r), q = g(r - a);
  return p / (p + q);
}

Real plateau_ds(Real s, Real a, Real b) {
  const Real r = std::fabs(s);
  if (r <= a || r >= b) return 0;
  const Real p = g(b - r), q = g(r - a), dp = -dg(b - r), dq = dg(r - a);
  const Real d = (dp * (p + q) - p * (dp + dq)) / ((p + q) * (p + q));
  return s < 0 ? -d : d;
}

ScalarFn constant_fn(int dim, Real c) { return std::make_shared<Constant>(dim, c); }
ScalarFn symbolic_fn(const ScalarField& f, int dim) { return std::make_shared<Symbolic>(f, dim); }
ScalarFn bump_fn(RVec center, Real radius, Real amplitude) {
  return std::make_shared<Bump>(std::move(center), radius, amplitude);
}
ScalarFn plateau_bump_fn(RVec center, Real inner, Real radius, Real amplitude) {
  return std::make_shared<PlateauBump>(std::move(center), inner, radius, amplitude);
}
ScalarFn box_bump_fn(RVec center, RVec half) { return std::make_shared<BoxBump>(std::move(center), std::move(half)); }
ScalarFn box_plateau_fn(RVec center, RVec inner, RVec outer) {
  return std::make_shared<BoxPlateau>(std::move(center), std::move(inner), std::move(outer));
}
ScalarFn sum_fn(std::vector<ScalarFn> terms) { return std::make_shared<Sum>(std::move(terms)); }
ScalarFn product_fn(std::vector<ScalarFn> factors) { return std::make_shared<Product>(std::move(factors)); }
ScalarFn scaled_fn(ScalarFn f, Real c) { return std::make_shared<Scaled>(std::move(f), c); }
ScalarFn time_lifted_fn(ScalarFn f) { return std::make_shared<TimeLifted>(std::move(f)); }
ScalarFn coordinate_fn(int dim, int i) {
  if (i < 0 || i >= dim) throw DomainError("coordinate index out of range");
  return std::make_shared<Coordinate>(dim, i);
}

}  // namespace jforge
