#pragma once

// Brute-force referee. Everything here enumerates monomials up to a degree
// bound and never calls the completion engine except to test membership in
// the monoid spanned by a proposed Hilbert basis.

#include "torusobs/invariant_ring.hpp"
#include "torusobs/orbit_geometry.hpp"

#include <map>

namespace torusobs {

inline constexpr std::size_t kDefaultOracleBound = 8;
inline constexpr std::size_t kDefaultTableCeiling = 2'000'000;

struct SemiinvariantTable {
  WeightAction action;
  std::size_t degree_bound = 0;
  /// Every monomial of total degree <= degree_bound, keyed by its weight.
  std::map<Character, std::vector<ExponentVector>> entries;

  std::size_t size() const;
  /// Invariant monomials (weight zero), including the constant.
  const std::vector<ExponentVector>& invariants() const;
};

/// Throws ResourceError when binom(n + bound, bound) > ceiling.
SemiinvariantTable enumerate(const WeightAction& action, std::size_t degree_bound,
                             std::size_t ceiling = kDefaultTableCeiling);

struct BoundedGroupTest {
  bool group = false;
  /// Set when `group` is false only because no semiinvariant within the bound
  /// was found and no exact certificate settles it.
  bool provisional = false;
};

/// E_G(X) is a group iff -a_j is a semiinvariant weight for every j. A true
/// answer is definitive; a false one is provisional unless `exact_dual`
/// (a destabilizer of the full support) is supplied and verifies.
BoundedGroupTest group_test_bounded(const SemiinvariantTable& table,
                                    const std::optional<IntVector>& exact_dual = std::nullopt);

/// Irreducible elements among the nonconstant invariants of the table.
std::vector<ExponentVector> bounded_irreducible_invariants(const SemiinvariantTable& table);

struct RefereeReport {
  std::vector<std::string> discrepancies;
  /// Checks the bound could not settle; informational, not failures.
  std::vector<std::string> provisional;

  bool clean() const { return discrepancies.empty(); }
};

RefereeReport referee(const WeightAction& action, std::size_t degree_bound = kDefaultOracleBound);
/// Same checks against a caller-supplied basis (used for negative controls).
RefereeReport referee_with_basis(const WeightAction& action, std::size_t degree_bound, const HilbertBasis& basis);

// Golden text format: '#'-prefixed header lines (kind, action, bound,
// version) followed by one space-separated exponent vector per line.
std::string golden_basis(const WeightAction& action, std::size_t bound, const std::vector<ExponentVector>& elements);
std::string golden_relations(const WeightAction& action, std::size_t degree_bound,
                             const std::vector<BinomialRelation>& relations);
std::string golden_socle(const WeightAction& action, const SocleData& socle);
/// Replaces the value of the "# version:" header line with a fixed mask.
std::string mask_version(const std::string& golden);

}  // namespace torusobs
