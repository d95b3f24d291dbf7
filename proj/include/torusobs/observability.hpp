#pragma once

// Observability verdicts. For an irreducible X = A^n three independent routes
// decide the question:
//
//   characterization  condition 1 (the invariant monomials generate ker_Z A as
//                     a group) and condition 2 (Omega(X) nonempty, read off as
//                     a full socle support);
//   factorial         E_G(X) is a group (strictly positive relation on all
//                     weights) and the closed orbits are dense (full socle);
//   reductive         Omega(X) nonempty, read off as equality of the generic
//                     and socle orbit dimensions.
//
// The solvable-group criterion (E_G(X) a group, alone) is recorded as well.

#include "torusobs/invariant_ring.hpp"
#include "torusobs/orbit_geometry.hpp"

namespace torusobs {

struct RouteOutcomes {
  bool characterization = false;
  bool factorial = false;
  bool reductive = false;
  bool solvable = false;

  bool agree() const {
    return characterization == factorial && factorial == reductive && reductive == solvable;
  }
};

struct Verdict {
  bool observable = false;
  bool condition1 = false;
  bool condition2 = false;
  bool group_criterion = false;
  RouteOutcomes routes;

  IndexSet inverted;  // localization support; empty for the global verdict
  IndexSet socle_support;
  std::size_t max_orbit_dim = 0;
  std::size_t socle_orbit_dim = 0;
  /// Witness for the group criterion, or a destabilizing lambda. For a
  /// localized verdict the witness is a Laurent exponent over all n coordinates.
  PositivityResult group_certificate;
  Lattice kernel;
  Lattice invariants;

  /// Present when X is reducible; top-level booleans are then conjunctions.
  std::vector<IndexSet> components;
  std::vector<Verdict> per_component;
};

Verdict verdict(const WeightAction& action);

/// Verdict for the action on X_f, computed on the localized monoid. Throws
/// std::invalid_argument if f is not an invariant monomial and std::logic_error
/// if the result differs from the global verdict.
Verdict verdict_localized(const WeightAction& action, const ExponentVector& f);

struct MonomialIdeal {
  std::vector<ExponentVector> generators;

  /// Drops duplicates and multiples of other generators; graded-lex order.
  static MonomialIdeal generated_by(std::vector<ExponentVector> gens);
  bool contains(const Exponents& m) const;
};

/// The ideal of the socle: (x_j : j outside S*).
MonomialIdeal max_null_ideal(const WeightAction& action);

/// An invariant monomial lying in the ideal, or nothing. On reducible X the
/// monomial must be supported in a single component (otherwise it is zero).
std::optional<ExponentVector> ideal_has_invariant(const WeightAction& action, const MonomialIdeal& ideal);

}  // namespace torusobs
