#pragma once

// Orbit combinatorics of a diagonal torus action on A^n. A point with support
// S has orbit dimension rank A_S, and its orbit is closed iff the weights on S
// admit a strictly positive rational relation.

#include "torusobs/action.hpp"
#include "torusobs/feasibility.hpp"

#include <map>

namespace torusobs {

using RationalPoint = RatVector;

IndexSet support_of(const RationalPoint& x);

std::size_t orbit_dimension(const WeightAction& action, const IndexSet& support);

struct ClosedOrbitResult {
  bool closed = false;
  std::optional<PositiveWitness> witness;
  /// One-parameter subgroup lambda along which the orbit degenerates:
  /// <lambda, a_i> >= 0 on the support, strict somewhere.
  std::optional<IntVector> destabilizer;
};

ClosedOrbitResult is_closed_orbit(const WeightAction& action, const IndexSet& support);

struct SocleData {
  IndexSet socle_support;
  PositiveWitness witness;  // strictly positive on socle_support
  std::size_t max_orbit_dim = 0;
  std::size_t socle_orbit_dim = 0;
  /// For each j outside the socle, y with <y, a_i> >= 0 for all i and <y, a_j> > 0.
  std::vector<std::pair<std::size_t, IntVector>> exclusion_certificates;
};

/// Irreducible X = A^n only.
SocleData socle(const WeightAction& action);

bool omega_nonempty(const WeightAction& action);

/// Same orbit over the algebraic closure.
bool orbit_equivalent(const WeightAction& action, const RationalPoint& x, const RationalPoint& y);

/// orbit_equivalent with the saturated relation lattice of each support
/// computed once and reused across calls.
class OrbitComparator {
 public:
  explicit OrbitComparator(const WeightAction& action) : action_(action) {}
  bool operator()(const RationalPoint& x, const RationalPoint& y);

 private:
  const std::vector<IntVector>& relations(const IndexSet& support);

  const WeightAction& action_;
  std::map<IndexSet, std::vector<IntVector>> relations_;
};

/// t . x where the torus point t in (Q*)^d scales x_i by prod_r t_r^{a_ri}.
RationalPoint act(const WeightAction& action, const RatVector& t, const RationalPoint& x);

Rational power(const Rational& base, const Integer& exponent);

}  // namespace torusobs
