#include "torusobs/action.hpp"

#include <sstream>

namespace torusobs {

WeightAction::WeightAction(IntMatrix weights, std::optional<std::vector<IndexSet>> components)
    : weights_(std::move(weights)), components_(std::move(components)) {
  if (!components_) return;
  for (auto& s : *components_) {
    s = normalize_index_set(std::move(s));
    for (std::size_t i : s)
      if (i >= weights_.cols()) throw std::invalid_argument("WeightAction: component index out of range");
  }
  const auto& comps = *components_;
  if (comps.empty()) throw std::invalid_argument("WeightAction: component list is empty");
  for (std::size_t a = 0; a < comps.size(); ++a)
    for (std::size_t b = 0; b < comps.size(); ++b)
      if (a != b && is_subset(comps[a], comps[b]))
        throw std::invalid_argument("WeightAction: component supports must form an antichain");
}

WeightAction WeightAction::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  return WeightAction(IntMatrix::from_rows(rows));
}

WeightAction WeightAction::from_columns(const std::vector<std::vector<long>>& columns, std::size_t d) {
  IntMatrix w(d, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != d) throw std::invalid_argument("WeightAction::from_columns: column length mismatch");
    for (std::size_t i = 0; i < d; ++i) w(i, j) = columns[j][i];
  }
  return WeightAction(std::move(w));
}

WeightAction WeightAction::restricted_to(const IndexSet& support) const {
  return WeightAction(weights_.select_columns(support));
}

std::string describe(const WeightAction& action) {
  std::ostringstream os;
  os << "d=" << action.torus_rank() << " n=" << action.dimension()
     << " weights=" << format_matrix(action.weights());
  if (action.components()) {
    os << " components=[";
    const auto& comps = *action.components();
    for (std::size_t k = 0; k < comps.size(); ++k) os << (k ? "," : "") << format_index_set(comps[k]);
    os << ']';
  }
  return os.str();
}

}  // namespace torusobs
