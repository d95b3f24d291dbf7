#pragma once

#include "torusobs/exact_linalg.hpp"

#include <optional>

namespace torusobs {

/// Diagonal action of the torus (k*)^d on A^n: coordinate x_i is scaled by the
/// character given by column i of `weights`. When `components` is present, X is
/// the union of the coordinate subspaces A^S, one per listed support.
class WeightAction {
 public:
  WeightAction() = default;
  explicit WeightAction(IntMatrix weights, std::optional<std::vector<IndexSet>> components = std::nullopt);

  static WeightAction from_rows(std::initializer_list<std::initializer_list<long>> rows);
  /// Columns given one per coordinate; convenient for d > 1 examples.
  static WeightAction from_columns(const std::vector<std::vector<long>>& columns, std::size_t d);

  std::size_t torus_rank() const { return weights_.rows(); }
  std::size_t dimension() const { return weights_.cols(); }
  const IntMatrix& weights() const { return weights_; }
  IntVector weight(std::size_t i) const { return weights_.column(i); }

  bool reducible() const { return components_.has_value(); }
  const std::optional<std::vector<IndexSet>>& components() const { return components_; }

  /// The action on the coordinate subspace A^S, with coordinates renumbered
  /// 0..|S|-1 in increasing order of S.
  WeightAction restricted_to(const IndexSet& support) const;

  friend bool operator==(const WeightAction&, const WeightAction&) = default;

 private:
  IntMatrix weights_;
  std::optional<std::vector<IndexSet>> components_;
};

std::string describe(const WeightAction& action);

}  // namespace torusobs
