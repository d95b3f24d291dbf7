#pragma once

// The affinized quotient X -> Spec k[X]^G as an explicit map: evaluation of
// the Hilbert basis monomials at rational points.

#include "torusobs/invariant_ring.hpp"
#include "torusobs/orbit_geometry.hpp"

#include <cstdint>
#include <random>

namespace torusobs {

struct QuotientMap {
  HilbertBasis generators;

  explicit QuotientMap(const WeightAction& action) : generators(hilbert_basis(action)) {}
  explicit QuotientMap(HilbertBasis basis) : generators(std::move(basis)) {}
  const WeightAction& action() const { return generators.action; }
};

/// Values of the generator monomials at x, with 0^0 = 1.
RatVector evaluate(const QuotientMap& map, const RationalPoint& x);
Rational evaluate_monomial(const Exponents& m, const RationalPoint& x);

bool separates(const QuotientMap& map, const RationalPoint& x, const RationalPoint& y);

/// For an observable action: exponent u of f = x^u with u >= 1 everywhere,
/// A u = 0, taken from the socle witness. On X_f every orbit is closed of
/// maximal dimension and the quotient is geometric.
std::optional<ExponentVector> geometric_quotient_locus(const WeightAction& action);

/// Seeded sampler for rational points. std::mt19937_64 output is fixed by the
/// standard; integers in [lo, hi] are drawn by rejection rather than through
/// std::uniform_int_distribution so streams agree across standard libraries.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed);
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// p/q with 1 <= |p|, q <= bound, sign uniform.
  Rational nonzero_rational(std::int64_t bound);
  RationalPoint full_support_point(std::size_t n, std::int64_t bound);

 private:
  std::mt19937_64 engine_;
};

struct FiberViolation {
  RationalPoint x;
  RationalPoint y;
  bool separated = false;
  bool equivalent = false;
};

struct FiberSampleReport {
  std::size_t trials = 0;
  std::size_t same_orbit_pairs = 0;   // pairs built as (x, t.x)
  std::size_t separated_pairs = 0;
  std::vector<FiberViolation> violations;
};

/// Draws `trials` pairs in X_f: half as (x, t.x) for a random rational torus
/// point t, half independent. Each pair must satisfy
/// separates(x, y) == !orbit_equivalent(x, y). Requires supp f = all coordinates.
FiberSampleReport fibers_are_orbits_sample(const WeightAction& action, const ExponentVector& f, std::size_t trials,
                                           std::uint64_t seed);
FiberSampleReport fibers_are_orbits_sample(const QuotientMap& map, const ExponentVector& f, std::size_t trials,
                                           std::uint64_t seed);

inline constexpr std::int64_t kSampleBound = 100;

}  // namespace torusobs
