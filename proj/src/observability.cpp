#include "torusobs/observability.hpp"

#include <algorithm>

namespace torusobs {

namespace {

Verdict reducible_verdict(const WeightAction& action) {
  Verdict v;
  v.observable = v.condition1 = v.condition2 = v.group_criterion = true;
  v.routes = {true, true, true, true};
  v.components = *action.components();
  for (const auto& s : v.components) {
    Verdict c = verdict(action.restricted_to(s));
    v.observable = v.observable && c.observable;
    v.condition1 = v.condition1 && c.condition1;
    v.condition2 = v.condition2 && c.condition2;
    v.group_criterion = v.group_criterion && c.group_criterion;
    v.routes.characterization = v.routes.characterization && c.routes.characterization;
    v.routes.factorial = v.routes.factorial && c.routes.factorial;
    v.routes.reductive = v.routes.reductive && c.routes.reductive;
    v.routes.solvable = v.routes.solvable && c.routes.solvable;
    v.per_component.push_back(std::move(c));
  }
  return v;
}

}  // namespace

Verdict verdict(const WeightAction& action) {
  if (action.reducible()) return reducible_verdict(action);
  const std::size_t n = action.dimension();
  const IntMatrix& a = action.weights();

  Verdict v;
  v.kernel = kernel_lattice(a);
  v.invariants = invariant_lattice(hilbert_basis(action));
  v.condition1 = lattice_equal(v.invariants, v.kernel);

  const SocleData soc = socle(action);
  v.socle_support = soc.socle_support;
  v.max_orbit_dim = soc.max_orbit_dim;
  v.socle_orbit_dim = soc.socle_orbit_dim;
  const bool full_socle = soc.socle_support.size() == n;
  v.condition2 = full_socle;

  v.group_certificate = strict_positive_kernel(a, full_index_set(n));
  v.group_criterion = v.group_certificate.feasible();

  v.routes.characterization = v.condition1 && v.condition2;
  v.routes.factorial = v.group_criterion && full_socle;
  v.routes.reductive = soc.socle_orbit_dim == soc.max_orbit_dim;
  v.routes.solvable = v.group_criterion;
  v.observable = v.routes.characterization;
  return v;
}

Verdict verdict_localized(const WeightAction& action, const ExponentVector& f) {
  if (action.reducible()) throw std::invalid_argument("verdict_localized: irreducible X only");
  const std::size_t n = action.dimension();
  if (f.entries.size() != n || !f.inverted.empty() ||
      std::any_of(f.entries.begin(), f.entries.end(), [](std::int64_t e) { return e < 0; }))
    throw std::invalid_argument("verdict_localized: f must be a monomial exponent in N^n");
  const IntVector image = action.weights().apply(f.entries);
  if (std::any_of(image.begin(), image.end(), [](const Integer& x) { return x != 0; }))
    throw std::invalid_argument("verdict_localized: f = x^" + format_vector(f.entries) + " is not invariant");

  IndexSet inverted;
  for (std::size_t i = 0; i < n; ++i)
    if (f.entries[i] > 0) inverted.push_back(i);

  // On X_f the coordinates in F are units: their weights enter with both signs.
  const IntMatrix& a = action.weights();
  std::vector<std::size_t> column_of(n);
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < n; ++i) {
    column_of[i] = cols.size();
    cols.push_back(a.column(i));
    if (contains_index(inverted, i)) {
      IntVector neg = a.column(i);
      for (auto& x : neg) x = -x;
      cols.push_back(std::move(neg));
    }
  }
  IntMatrix expanded(a.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t r = 0; r < a.rows(); ++r) expanded(r, j) = cols[j][r];

  Verdict v;
  v.inverted = inverted;
  v.kernel = kernel_lattice(a);
  v.invariants = invariant_lattice(hilbert_basis(action, inverted));
  v.condition1 = lattice_equal(v.invariants, v.kernel);

  v.socle_support = inverted;
  for (std::size_t j = 0; j < n; ++j) {
    if (contains_index(inverted, j)) continue;
    if (nonnegative_relation_through(expanded, column_of[j]).relation) v.socle_support.push_back(j);
  }
  v.socle_support = normalize_index_set(std::move(v.socle_support));
  v.condition2 = v.socle_support.size() == n;
  v.max_orbit_dim = rank(a);
  v.socle_orbit_dim = rank(a.select_columns(v.socle_support));

  v.group_certificate = strict_positive_kernel(expanded, full_index_set(expanded.cols()));
  v.group_criterion = v.group_certificate.feasible();
  if (v.group_certificate.witness) {
    // Fold the expanded columns back: the pair (a_i, -a_i) becomes one Laurent exponent.
    const IntVector wide = v.group_certificate.witness->dense(expanded.cols());
    PositiveWitness folded{full_index_set(n), IntVector(n, Integer(0))};
    for (std::size_t i = 0; i < n; ++i) {
      folded.coefficients[i] = wide[column_of[i]];
      if (contains_index(inverted, i)) folded.coefficients[i] -= wide[column_of[i] + 1];
    }
    v.group_certificate.witness = std::move(folded);
  }

  v.routes.characterization = v.condition1 && v.condition2;
  v.routes.factorial = v.group_criterion && v.condition2;
  v.routes.reductive = v.socle_orbit_dim == v.max_orbit_dim;
  v.routes.solvable = v.group_criterion;
  v.observable = v.routes.characterization;

  if (v.observable != verdict(action).observable)
    throw std::logic_error("verdict_localized: localization at x^" + format_vector(f.entries) +
                           " changed the observability verdict");
  return v;
}

MonomialIdeal MonomialIdeal::generated_by(std::vector<ExponentVector> gens) {
  sort_graded_lex(gens);
  MonomialIdeal out;
  for (auto& g : gens) {
    if (!g.inverted.empty()) throw std::invalid_argument("MonomialIdeal: generators must be ordinary monomials");
    if (out.contains(g.entries)) continue;
    out.generators.push_back(std::move(g));
  }
  return out;
}

bool MonomialIdeal::contains(const Exponents& m) const {
  return std::any_of(generators.begin(), generators.end(), [&](const ExponentVector& g) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] < g.entries[i]) return false;
    return true;
  });
}

MonomialIdeal max_null_ideal(const WeightAction& action) {
  const std::size_t n = action.dimension();
  const auto soc = socle(action);
  std::vector<ExponentVector> gens;
  for (std::size_t j = 0; j < n; ++j) {
    if (contains_index(soc.socle_support, j)) continue;
    Exponents e(n, 0);
    e[j] = 1;
    gens.push_back(monomial(std::move(e)));
  }
  return MonomialIdeal::generated_by(std::move(gens));
}

namespace {

// Invariant x^m with m >= g. The rational cone { m : A m = 0, m >= g } is
// nonempty exactly when an integer point exists (scale a rational point by its
// common denominator), so one LP decides it.
std::optional<Exponents> invariant_above(const IntMatrix& a, const Exponents& g) {
  IntVector target = a.apply(g);
  for (auto& x : target) x = -x;
  const auto y = find_nonnegative_solution(a, target);
  if (!y) return std::nullopt;
  Integer den = 1;
  for (const auto& q : *y) den = lcm(den, Integer(q.get_den()));
  Exponents m(g.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Rational exact = Rational(static_cast<long>(g[i])) + (*y)[i];
    exact *= den;
    if (!exact.get_num().fits_slong_p()) throw ResourceError("ideal_has_invariant: witness exponent too large");
    m[i] = exact.get_num().get_si();
  }
  const IntVector image = a.apply(m);
  if (std::any_of(image.begin(), image.end(), [](const Integer& x) { return x != 0; }))
    throw std::logic_error("ideal_has_invariant: witness is not invariant");
  return m;
}

}  // namespace

std::optional<ExponentVector> ideal_has_invariant(const WeightAction& action, const MonomialIdeal& ideal) {
  const std::size_t n = action.dimension();
  for (const auto& g : ideal.generators)
    if (g.entries.size() != n) throw std::invalid_argument("ideal_has_invariant: generator dimension mismatch");

  if (!action.reducible()) {
    for (const auto& g : ideal.generators)
      if (auto m = invariant_above(action.weights(), g.entries)) return monomial(std::move(*m));
    return std::nullopt;
  }
  for (const auto& g : ideal.generators) {
    for (const auto& s : *action.components()) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i) inside = g.entries[i] == 0 || contains_index(s, i);
      if (!inside) continue;
      Exponents local;
      for (std::size_t i : s) local.push_back(g.entries[i]);
      if (auto m = invariant_above(action.weights().select_columns(s), local)) {
        Exponents full(n, 0);
        for (std::size_t k = 0; k < s.size(); ++k) full[s[k]] = (*m)[k];
        return monomial(std::move(full));
      }
    }
  }
  return std::nullopt;
}

}  // namespace torusobs
