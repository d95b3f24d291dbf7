#include "torusobs/invariant_ring.hpp"

#include "torusobs/feasibility.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace torusobs {

std::int64_t ExponentVector::degree() const {
  return std::accumulate(entries.begin(), entries.end(), std::int64_t{0});
}

IntVector ExponentVector::as_integers() const {
  IntVector out;
  out.reserve(entries.size());
  for (auto e : entries) out.emplace_back(static_cast<long>(e));
  return out;
}

bool ExponentVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](std::int64_t e) { return e == 0; });
}

ExponentVector monomial(Exponents entries) { return ExponentVector{std::move(entries), {}}; }

bool graded_lex_before(const Exponents& a, const Exponents& b) {
  const auto da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (da != db) return da < db;
  return b < a;
}

void sort_graded_lex(std::vector<ExponentVector>& v) {
  std::sort(v.begin(), v.end(), [](const ExponentVector& a, const ExponentVector& b) {
    return graded_lex_before(a.entries, b.entries);
  });
}

Character weight_of(const WeightAction& action, const Exponents& m) {
  return Character{action.weights().apply(m)};
}

std::vector<ExponentVector> HilbertBasis::all_generators() const {
  std::vector<ExponentVector> out = units;
  for (const auto& u : units) {
    ExponentVector neg = u;
    for (auto& e : neg.entries) e = -e;
    out.push_back(std::move(neg));
  }
  out.insert(out.end(), elements.begin(), elements.end());
  return out;
}

namespace {

Exponents to_exponents(const IntVector& v) {
  Exponents out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw ResourceError("exponent does not fit in 64 bits");
    out.push_back(x.get_si());
  }
  return out;
}

std::vector<ExponentVector> pointed_hilbert_basis(const WeightAction& action) {
  std::vector<ExponentVector> out;
  for (auto& s : hilbert_basis_by_cuts(action.weights())) out.push_back(monomial(std::move(s)));
  sort_graded_lex(out);
  return out;
}

}  // namespace

HilbertBasis hilbert_basis(const WeightAction& action, const IndexSet& inverted_in) {
  if (action.reducible())
    throw std::invalid_argument("hilbert_basis: action on a reducible X; restrict to a component first");
  const std::size_t n = action.dimension();
  const IndexSet inverted = normalize_index_set(inverted_in);
  for (std::size_t i : inverted)
    if (i >= n) throw std::invalid_argument("hilbert_basis: inverted index out of range");

  HilbertBasis hb{action, inverted, {}, pointed_hilbert_basis(action)};
  if (inverted.empty()) return hb;

  if (!strict_positive_kernel(action.weights(), inverted).feasible())
    throw std::invalid_argument("hilbert_basis: inverted set " + format_index_set(inverted) +
                                " is not the support of an invariant monomial");

  // Localizing at f with supp f = F: the monoid becomes M + U with
  // U = ker A ∩ Z^F, and M/U embeds into N^{complement} by projection.
  const IndexSet rest = set_difference(full_index_set(n), inverted);
  const Lattice units_local = kernel_lattice(action.weights().select_columns(inverted));
  for (const auto& b : units_local.basis()) {
    Exponents e(n, 0);
    const Exponents local = to_exponents(b);
    for (std::size_t k = 0; k < inverted.size(); ++k) e[inverted[k]] = local[k];
    hb.units.push_back({std::move(e), inverted});
  }

  auto project = [&](const Exponents& x) {
    Exponents p;
    for (std::size_t i : rest) p.push_back(x[i]);
    return p;
  };
  std::vector<Exponents> projections;
  std::vector<const ExponentVector*> lifts;
  for (const auto& g : hb.elements) {
    Exponents p = project(g.entries);
    if (std::all_of(p.begin(), p.end(), [](std::int64_t e) { return e == 0; })) continue;
    if (std::find(projections.begin(), projections.end(), p) != projections.end()) continue;
    projections.push_back(std::move(p));
    lifts.push_back(&g);
  }

  // y >= 0 lies in the projected monoid iff A_rest y is in the lattice A_F Z^F.
  const IntMatrix a_rest = action.weights().select_columns(rest);
  const IntMatrix a_f = action.weights().select_columns(inverted);
  std::vector<IntVector> image_gens;
  for (std::size_t k = 0; k < a_f.cols(); ++k) image_gens.push_back(a_f.column(k));
  const Lattice image = Lattice::from_generators(a_f.rows(), image_gens);

  std::vector<ExponentVector> pointed;
  for (std::size_t a = 0; a < projections.size(); ++a) {
    bool reducible = false;
    for (std::size_t b = 0; b < projections.size() && !reducible; ++b) {
      if (a == b) continue;
      Exponents diff = projections[a];
      bool below = true;
      for (std::size_t i = 0; i < diff.size() && below; ++i) {
        diff[i] -= projections[b][i];
        below = diff[i] >= 0;
      }
      if (below && image.contains(a_rest.apply(diff))) reducible = true;
    }
    if (reducible) continue;
    // canonical lift: reduce the F-part modulo the unit lattice
    IntVector local;
    for (std::size_t i : inverted) local.emplace_back(static_cast<long>(lifts[a]->entries[i]));
    const Exponents reduced = to_exponents(units_local.reduce(local));
    Exponents e = lifts[a]->entries;
    for (std::size_t k = 0; k < inverted.size(); ++k) e[inverted[k]] = reduced[k];
    pointed.push_back({std::move(e), inverted});
  }
  sort_graded_lex(pointed);
  hb.elements = std::move(pointed);
  return hb;
}

Lattice invariant_lattice(const HilbertBasis& basis) {
  std::vector<IntVector> gens;
  for (const auto& u : basis.units) gens.push_back(u.as_integers());
  for (const auto& e : basis.elements) gens.push_back(e.as_integers());
  return Lattice::from_generators(basis.dimension(), gens);
}

Exponents combine(const std::vector<ExponentVector>& gens, const Exponents& counts) {
  Exponents out(gens.empty() ? 0 : gens.front().entries.size(), 0);
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += counts[k] * gens[k].entries[i];
  return out;
}

std::vector<BinomialRelation> relations_up_to_degree(const HilbertBasis& basis, std::size_t degree_bound,
                                                     std::size_t ceiling) {
  if (degree_bound < 1) throw std::invalid_argument("relations_up_to_degree: degree bound must be >= 1");
  const auto& gens = basis.elements;
  const std::size_t k = gens.size();
  Integer multisets;
  mpz_bin_uiui(multisets.get_mpz_t(), k + degree_bound, degree_bound);
  if (multisets > Integer(static_cast<unsigned long>(ceiling)))
    throw ResourceError("relations_up_to_degree: " + multisets.get_str() + " multisets exceed ceiling " +
                        std::to_string(ceiling));

  std::map<Exponents, std::vector<Exponents>> by_sum;
  Exponents counts(k, 0);
  // enumerate count vectors of total 1..degree_bound
  auto visit = [&](auto&& self, std::size_t idx, std::size_t remaining) -> void {
    if (idx == k) {
      if (remaining != degree_bound) by_sum[combine(gens, counts)].push_back(counts);
      return;
    }
    for (std::size_t c = 0; c <= remaining; ++c) {
      counts[idx] = static_cast<std::int64_t>(c);
      self(self, idx + 1, remaining - c);
    }
    counts[idx] = 0;
  };
  visit(visit, 0, degree_bound);

  std::vector<BinomialRelation> candidates;
  for (const auto& [sum, group] : by_sum) {
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = 0; b < group.size(); ++b) {
        if (!(group[b] < group[a])) continue;
        bool disjoint = true;
        for (std::size_t i = 0; i < k && disjoint; ++i) disjoint = group[a][i] == 0 || group[b][i] == 0;
        if (disjoint) candidates.push_back({group[a], group[b]});
      }
  }

  auto leq = [](const Exponents& x, const Exponents& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] > y[i]) return false;
    return true;
  };
  std::vector<BinomialRelation> out;
  for (const auto& r : candidates) {
    bool minimal = true;
    for (const auto& s : candidates) {
      if (s == r) continue;
      if ((leq(s.lhs, r.lhs) && leq(s.rhs, r.rhs)) || (leq(s.rhs, r.lhs) && leq(s.lhs, r.rhs))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const BinomialRelation& x, const BinomialRelation& y) {
    if (graded_lex_before(x.lhs, y.lhs)) return true;
    if (graded_lex_before(y.lhs, x.lhs)) return false;
    return graded_lex_before(x.rhs, y.rhs);
  });
  return out;
}

}  // namespace torusobs
