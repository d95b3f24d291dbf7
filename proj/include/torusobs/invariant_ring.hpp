#pragma once

// The invariant monomial monoid ker A ∩ N^n (and its localizations): Hilbert
// basis, generated lattice and truncated binomial relations.

#include "torusobs/action.hpp"
#include "torusobs/completion.hpp"

#include <compare>

namespace torusobs {

/// Exponent of a (Laurent) monomial; coordinates in `inverted` may be negative.
struct ExponentVector {
  Exponents entries;
  IndexSet inverted;

  std::int64_t degree() const;
  IntVector as_integers() const;
  bool is_zero() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

ExponentVector monomial(Exponents entries);

/// Canonical order: lower total degree first, then lexicographically larger
/// first (so x1 precedes x2).
bool graded_lex_before(const Exponents& a, const Exponents& b);
void sort_graded_lex(std::vector<ExponentVector>& v);

struct Character {
  IntVector weight;
  friend auto operator<=>(const Character& a, const Character& b) { return a.weight <=> b.weight; }
  friend bool operator==(const Character&, const Character&) = default;
};

Character weight_of(const WeightAction& action, const Exponents& m);

struct HilbertBasis {
  WeightAction action;
  IndexSet inverted;
  /// Basis of the unit group (nonempty only for localizations); each u stands
  /// for the pair ±u.
  std::vector<ExponentVector> units;
  /// Irreducible elements of the pointed part, graded-lex ordered.
  std::vector<ExponentVector> elements;

  std::size_t dimension() const { return action.dimension(); }
  /// units, their negatives and the pointed elements.
  std::vector<ExponentVector> all_generators() const;
};

/// F empty: the Hilbert basis of ker A ∩ N^n. Otherwise F must be the support
/// of an invariant monomial f, and the result generates the invariant
/// exponents of the localization at f.
HilbertBasis hilbert_basis(const WeightAction& action, const IndexSet& inverted = {});

/// Subgroup of Z^n generated by all generators of the basis.
Lattice invariant_lattice(const HilbertBasis& basis);

/// Counts over basis.elements: sum lhs_k g_k = sum rhs_k g_k.
struct BinomialRelation {
  Exponents lhs;
  Exponents rhs;
  friend bool operator==(const BinomialRelation&, const BinomialRelation&) = default;
};

inline constexpr std::size_t kDefaultRelationCeiling = 2'000'000;

/// Minimal binomial relations among multisets of at most `degree_bound`
/// generators. A truncation, not a presentation of the toric ideal.
std::vector<BinomialRelation> relations_up_to_degree(const HilbertBasis& basis, std::size_t degree_bound,
                                                     std::size_t ceiling = kDefaultRelationCeiling);

Exponents combine(const std::vector<ExponentVector>& gens, const Exponents& counts);

}  // namespace torusobs
