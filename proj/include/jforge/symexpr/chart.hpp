#pragma once

#include <Eigen/Core>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jforge/symexpr/rational.hpp"

namespace jforge {

// Upper bound on chart dimension; exponent vectors are stored inline.
inline constexpr int kMaxDim = 12;

class Chart {
 public:
  explicit Chart(std::vector<std::string> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::string& name(int i) const { return coords_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(std::string_view name) const;

  friend bool operator==(const Chart& a, const Chart& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<std::string> coords_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<std::string> coords);

// Null charts are wildcards (unbound constants).
bool compatible(const ChartPtr& a, const ChartPtr& b);
ChartPtr common_chart(const ChartPtr& a, const ChartPtr& b);

template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <class T>
struct Point {
  ChartPtr chart;
  Vec<T> values;

  Point() = default;
  Point(ChartPtr c, Vec<T> v);
};

template <class T>
Point<T>::Point(ChartPtr c, Vec<T> v) : chart(std::move(c)), values(std::move(v)) {
  if (chart && values.size() != chart->dim())
    throw std::invalid_argument("point length does not match chart dimension");
}

}  // namespace jforge
