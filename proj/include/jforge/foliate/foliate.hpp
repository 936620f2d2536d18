#pragma once

#include <memory>
#include <optional>

#include "jforge/geomstruct/nondeg.hpp"

namespace jforge {

// R^q x R^{n-q}: transverse coordinates first, then leaf coordinates.
// Leaves are the level sets of the transverse coordinates.
class ProductChart {
 public:
  ProductChart(std::vector<std::string> transverse, std::vector<std::string> leaf);

  const ChartPtr& chart() const { return chart_; }
  int q() const { return q_; }
  int dim() const { return chart_->dim(); }
  int leaf_dim() const { return dim() - q_; }
  bool is_leaf_index(int i) const { return i >= q_; }
  IndexTuple leaf_top() const;

  friend bool operator==(const ProductChart& a, const ProductChart& b) {
    return a.q_ == b.q_ && *a.chart_ == *b.chart_;
  }

 private:
  ChartPtr chart_;
  int q_;
};

using ProductChartPtr = std::shared_ptr<const ProductChart>;

ProductChartPtr make_product_chart(std::vector<std::string> transverse, std::vector<std::string> leaf);

// Form with leaf differentials only; coefficients may depend on every coordinate.
class FoliatedForm {
 public:
  FoliatedForm(ProductChartPtr pc, int degree);
  // Throws DomainError if w contains a transverse differential.
  FoliatedForm(ProductChartPtr pc, DifferentialForm w);

  const ProductChartPtr& product() const { return pc_; }
  const DifferentialForm& form() const { return w_; }
  int degree() const { return w_.degree(); }
  bool is_zero() const { return w_.is_zero(); }

  FoliatedForm operator-() const { return {pc_, -w_}; }
  friend FoliatedForm operator+(const FoliatedForm& a, const FoliatedForm& b);
  friend FoliatedForm operator-(const FoliatedForm& a, const FoliatedForm& b);
  friend FoliatedForm operator*(const ScalarField& f, const FoliatedForm& a) { return {a.pc_, f * a.w_}; }
  friend bool operator==(const FoliatedForm& a, const FoliatedForm& b) {
    return *a.pc_ == *b.pc_ && a.w_ == b.w_;
  }

 private:
  struct Trusted {};
  FoliatedForm(ProductChartPtr pc, DifferentialForm w, Trusted) : pc_(std::move(pc)), w_(std::move(w)) {}
  friend FoliatedForm leaf_restrict(const ProductChartPtr&, const DifferentialForm&);

  ProductChartPtr pc_;
  DifferentialForm w_;
};

FoliatedForm wedge(const FoliatedForm& a, const FoliatedForm& b);
FoliatedForm parse_foliated(const std::string& text, const ProductChartPtr& pc, int zero_degree = 0);

// Quotient map: drops every term with a transverse differential.
FoliatedForm leaf_restrict(const ProductChartPtr& pc, const DifferentialForm& w);

// Exterior derivative in leaf directions only.
FoliatedForm d_F(const FoliatedForm& w);

struct FoliatedClassification {
  enum class Kind { FoliatedSymplectic, FoliatedLCS, FoliatedContact, AlmostContact, None };
  Kind kind = Kind::None;
  std::optional<FoliatedForm> theta;  // set for FoliatedLCS
  NondegReport report;                // leafwise top power
};

const char* to_string(FoliatedClassification::Kind k);

// alpha alone: contact test. omega alone: symplectic / lcs test. Both: almost
// contact test, reported as FoliatedContact when omega = d_F alpha.
FoliatedClassification foliated_classify(const std::optional<FoliatedForm>& alpha,
                                         const std::optional<FoliatedForm>& omega, Samples samples = {});

// Coefficient of the leaf volume element.
ScalarField leaf_top_coefficient(const FoliatedForm& w);

}  // namespace jforge
