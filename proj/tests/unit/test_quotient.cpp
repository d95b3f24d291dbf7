#include "oracles.hpp"

#include "torusobs/observability.hpp"
#include "torusobs/quotient.hpp"

#include <doctest.h>

using namespace torusobs;

namespace {

Rational small_rational(std::mt19937_64& rng, long bound) {
  Rational q(static_cast<long>(1 + rng() % bound), static_cast<long>(1 + rng() % bound));
  q.canonicalize();
  return rng() % 2 ? q : Rational(-q);
}

}  // namespace

TEST_CASE("evaluate examples") {
  CHECK(evaluate(QuotientMap(WeightAction::from_rows({{1, -1}})), {3, 2}) == RatVector{6});
  CHECK(evaluate(QuotientMap(WeightAction::from_rows({{1, 1}})), {5, Rational(1, 3)}).empty());
  CHECK(evaluate(QuotientMap(WeightAction::from_rows({{1, 1, -1, -1}})), {1, 2, 3, 4}) == RatVector{3, 4, 6, 8});
  // 0^0 = 1 on unused coordinates
  CHECK(evaluate_monomial({0, 2}, {0, 3}) == 9);
}

TEST_CASE("separates examples") {
  const QuotientMap hyperbola(WeightAction::from_rows({{1, -1}}));
  CHECK(separates(hyperbola, {1, 1}, {1, 2}));
  CHECK_FALSE(separates(hyperbola, {1, 1}, {2, Rational(1, 2)}));
  const QuotientMap scaling(WeightAction::from_rows({{1, 1}}));
  CHECK_FALSE(separates(scaling, {1, 1}, {7, -2}));
}

TEST_CASE("geometric quotient locus examples") {
  const auto f = geometric_quotient_locus(WeightAction::from_rows({{1, -1}}));
  REQUIRE(f);
  CHECK(f->entries == Exponents{1, 1});
  const auto g = geometric_quotient_locus(WeightAction::from_rows({{2, -3}}));
  REQUIRE(g);
  CHECK(g->entries == Exponents{3, 2});
  CHECK_FALSE(geometric_quotient_locus(WeightAction::from_rows({{1, 1}})));
}

TEST_CASE("fiber sampling examples") {
  auto r = fibers_are_orbits_sample(WeightAction::from_rows({{1, -1}}), monomial({1, 1}), 100, 7);
  CHECK(r.trials == 100);
  CHECK(r.violations.empty());
  CHECK(r.same_orbit_pairs == 50);
  r = fibers_are_orbits_sample(WeightAction::from_rows({{1, 1, -1, -1}}), monomial({1, 1, 1, 1}), 100, 8);
  CHECK(r.violations.empty());
  // independent pairs are almost surely in different orbits
  CHECK(r.separated_pairs >= 45);
  CHECK_THROWS_AS(fibers_are_orbits_sample(WeightAction::from_rows({{1, -1}}), monomial({1, 0}), 10, 1),
                  std::invalid_argument);
}

TEST_CASE("sampling is reproducible from the seed") {
  PointSampler a(99), b(99), c(100);
  const auto x = a.full_support_point(5, kSampleBound);
  CHECK(x == b.full_support_point(5, kSampleBound));
  CHECK(x != c.full_support_point(5, kSampleBound));
  for (const auto& q : x) {
    CHECK(q != 0);
    CHECK(abs(q.get_num()) <= kSampleBound);
    CHECK(q.get_den() <= kSampleBound);
  }
}

TEST_CASE("invariants are constant on orbits") {
  std::mt19937_64 rng(61);
  for (const auto& inst : oracle::random_instances(62, 60, 3, 5, 3)) {
    const WeightAction a = inst.action();
    const QuotientMap map(a);
    for (int trial = 0; trial < 100; ++trial) {
      RationalPoint x(inst.n);
      for (auto& c : x) c = rng() % 5 == 0 ? Rational(0) : small_rational(rng, 9);
      RatVector t(inst.rows.size());
      for (auto& c : t) c = small_rational(rng, 4);
      CHECK(evaluate(map, x) == evaluate(map, act(a, t, x)));
    }
  }
}

TEST_CASE("separation matches orbit equivalence on observable actions") {
  std::size_t observable = 0;
  for (const auto& inst : oracle::random_instances(63, 120, 3, 5, 3)) {
    const WeightAction a = inst.action();
    const auto f = geometric_quotient_locus(a);
    CHECK(f.has_value() == verdict(a).observable);
    if (!f) continue;
    ++observable;
    for (const auto e : f->entries) CHECK(e >= 1);
    const auto r = fibers_are_orbits_sample(a, *f, 100, 64 + observable);
    CHECK(r.violations.empty());
    // dimension of the quotient equals n - rank A
    const HilbertBasis hb = hilbert_basis(a);
    std::vector<IntVector> rows;
    for (const auto& g : hb.elements) rows.push_back(g.as_integers());
    const std::size_t qdim = rows.empty() ? 0 : rank(IntMatrix::from_rows(rows, inst.n));
    CHECK(qdim == inst.n - rank(a.weights()));
  }
  CHECK(observable > 10);
}

TEST_CASE("non-observable actions merge distinct orbits") {
  std::mt19937_64 rng(65);
  std::size_t with_witness = 0, point_quotients = 0;
  for (const auto& inst : oracle::random_instances(66, 120, 3, 5, 3)) {
    const WeightAction a = inst.action();
    if (verdict(a).observable) continue;
    const QuotientMap map(a);
    if (map.generators.elements.empty()) {
      ++point_quotients;
      continue;
    }
    // search points with random zero patterns for a pair in distinct orbits
    // that the invariants do not tell apart
    bool found = false;
    for (int trial = 0; trial < 400 && !found; ++trial) {
      RationalPoint x(inst.n);
      for (auto& c : x) c = small_rational(rng, 6);
      RationalPoint y = x;
      for (auto& c : y)
        if (rng() % 2 == 0) c = 0;
      found = !separates(map, x, y) && !orbit_equivalent(a, x, y);
    }
    CHECK(found);
    with_witness += found;
  }
  CHECK(with_witness > 0);
  CHECK(point_quotients > 0);
}
