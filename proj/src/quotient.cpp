#include "torusobs/quotient.hpp"

#include "torusobs/observability.hpp"

#include <algorithm>
#include <limits>

namespace torusobs {

Rational evaluate_monomial(const Exponents& m, const RationalPoint& x) {
  if (m.size() != x.size()) throw std::invalid_argument("evaluate_monomial: dimension mismatch");
  Rational value = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    value *= power(x[i], Integer(static_cast<long>(m[i])));
  }
  return value;
}

RatVector evaluate(const QuotientMap& map, const RationalPoint& x) {
  if (x.size() != map.action().dimension()) throw std::invalid_argument("evaluate: point dimension mismatch");
  RatVector out;
  for (const auto& g : map.generators.all_generators()) out.push_back(evaluate_monomial(g.entries, x));
  return out;
}

bool separates(const QuotientMap& map, const RationalPoint& x, const RationalPoint& y) {
  const std::size_t n = map.action().dimension();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("separates: point dimension mismatch");
  for (const auto& g : map.generators.all_generators())
    if (evaluate_monomial(g.entries, x) != evaluate_monomial(g.entries, y)) return true;
  return false;
}

std::optional<ExponentVector> geometric_quotient_locus(const WeightAction& action) {
  if (action.reducible()) throw std::invalid_argument("geometric_quotient_locus: irreducible X only");
  const std::size_t n = action.dimension();
  const SocleData soc = socle(action);
  if (soc.socle_support.size() != n) return std::nullopt;
  const IntVector u = soc.witness.dense(n);
  Exponents e;
  for (const auto& x : u) e.push_back(x.get_si());
  return monomial(std::move(e));
}

PointSampler::PointSampler(std::uint64_t seed) : engine_(seed) {}

std::int64_t PointSampler::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("PointSampler::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

Rational PointSampler::nonzero_rational(std::int64_t bound) {
  const long num = uniform(1, bound);
  const long den = uniform(1, bound);
  Rational r(num, den);
  r.canonicalize();
  return uniform(0, 1) ? r : Rational(-r);
}

RationalPoint PointSampler::full_support_point(std::size_t n, std::int64_t bound) {
  RationalPoint x(n);
  for (auto& c : x) c = nonzero_rational(bound);
  return x;
}

FiberSampleReport fibers_are_orbits_sample(const WeightAction& action, const ExponentVector& f, std::size_t trials,
                                           std::uint64_t seed) {
  return fibers_are_orbits_sample(QuotientMap(action), f, trials, seed);
}

FiberSampleReport fibers_are_orbits_sample(const QuotientMap& map, const ExponentVector& f, std::size_t trials,
                                           std::uint64_t seed) {
  const WeightAction& action = map.action();
  const std::size_t n = action.dimension();
  if (f.entries.size() != n || std::any_of(f.entries.begin(), f.entries.end(), [](std::int64_t e) { return e <= 0; }))
    throw std::invalid_argument("fibers_are_orbits_sample: f must have full support");
  const IntVector image = action.weights().apply(f.entries);
  if (std::any_of(image.begin(), image.end(), [](const Integer& x) { return x != 0; }))
    throw std::invalid_argument("fibers_are_orbits_sample: f is not invariant");

  OrbitComparator same_orbit(action);
  PointSampler sampler(seed);
  FiberSampleReport report;
  report.trials = trials;
  for (std::size_t k = 0; k < trials; ++k) {
    const RationalPoint x = sampler.full_support_point(n, kSampleBound);
    RationalPoint y;
    if (k % 2 == 0) {
      RatVector t(action.torus_rank());
      for (auto& c : t) c = sampler.nonzero_rational(5);
      y = act(action, t, x);
      ++report.same_orbit_pairs;
    } else {
      y = sampler.full_support_point(n, kSampleBound);
    }
    const bool sep = separates(map, x, y);
    const bool eq = same_orbit(x, y);
    if (sep) ++report.separated_pairs;
    if (sep == eq) report.violations.push_back({x, y, sep, eq});
  }
  return report;
}

}  // namespace torusobs
