#include "jforge/symexpr/chart.hpp"

#include <cctype>
#include <set>

#include "jforge/errors.hpp"

namespace jforge {

namespace {
bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}
}  // namespace

Chart::Chart(std::vector<std::string> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("chart needs at least one coordinate");
  if (dim() > kMaxDim) throw DomainError("chart dimension exceeds " + std::to_string(kMaxDim));
  std::set<std::string> seen;
  for (const auto& c : coords_) {
    if (!valid_identifier(c)) throw DomainError("invalid coordinate name '" + c + "'");
    if (!seen.insert(c).second) throw DomainError("duplicate coordinate name '" + c + "'");
  }
}

std::optional<int> Chart::index_of(std::string_view name) const {
  for (int i = 0; i < dim(); ++i)
    if (coords_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

ChartPtr make_chart(std::vector<std::string> coords) {
  return std::make_shared<const Chart>(std::move(coords));
}

bool compatible(const ChartPtr& a, const ChartPtr& b) {
  return !a || !b || a == b || *a == *b;
}

ChartPtr common_chart(const ChartPtr& a, const ChartPtr& b) {
  if (!compatible(a, b)) throw ChartMismatch();
  return a ? a : b;
}

}  // namespace jforge
