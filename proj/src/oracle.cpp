#include "torusobs/oracle.hpp"

#include "torusobs/feasibility.hpp"

#include <algorithm>
#include <sstream>

namespace torusobs {

std::size_t SemiinvariantTable::size() const {
  std::size_t total = 0;
  for (const auto& [_, list] : entries) total += list.size();
  return total;
}

const std::vector<ExponentVector>& SemiinvariantTable::invariants() const {
  static const std::vector<ExponentVector> empty;
  const auto it = entries.find(Character{IntVector(action.torus_rank(), Integer(0))});
  return it == entries.end() ? empty : it->second;
}

SemiinvariantTable enumerate(const WeightAction& action, std::size_t degree_bound, std::size_t ceiling) {
  const std::size_t n = action.dimension();
  const std::size_t d = action.torus_rank();
  Integer count;
  mpz_bin_uiui(count.get_mpz_t(), n + degree_bound, degree_bound);
  if (count > Integer(static_cast<unsigned long>(ceiling)))
    throw ResourceError("enumerate: " + count.get_str() + " monomials of degree <= " + std::to_string(degree_bound) +
                        " exceed the ceiling of " + std::to_string(ceiling));

  SemiinvariantTable table{action, degree_bound, {}};
  Exponents m(n, 0);
  IntVector weight(d, Integer(0));
  auto visit = [&](auto&& self, std::size_t i, std::size_t remaining) -> void {
    if (i == n) {
      table.entries[Character{weight}].push_back(monomial(m));
      return;
    }
    for (std::size_t e = 0;; ++e) {
      self(self, i + 1, remaining - e);
      if (e == remaining) break;
      ++m[i];
      for (std::size_t r = 0; r < d; ++r) weight[r] += action.weights()(r, i);
    }
    for (std::size_t r = 0; r < d; ++r) weight[r] -= action.weights()(r, i) * static_cast<long>(m[i]);
    m[i] = 0;
  };
  visit(visit, 0, degree_bound);
  for (auto& [_, list] : table.entries) sort_graded_lex(list);
  return table;
}

BoundedGroupTest group_test_bounded(const SemiinvariantTable& table, const std::optional<IntVector>& exact_dual) {
  const auto& action = table.action;
  BoundedGroupTest out;
  out.group = true;
  for (std::size_t j = 0; j < action.dimension() && out.group; ++j) {
    IntVector neg = action.weight(j);
    for (auto& x : neg) x = -x;
    out.group = table.entries.contains(Character{neg});
  }
  if (!out.group) {
    const bool settled = exact_dual.has_value() &&
                         verify_destabilizer(action.weights(), full_index_set(action.dimension()), *exact_dual);
    out.provisional = !settled;
  }
  return out;
}

namespace {

bool leq(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::uint64_t mask_of(const Exponents& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) mask |= std::uint64_t{1} << i;
  return mask;
}

std::string show(const Exponents& m) { return "x^" + format_vector(m); }

bool is_invariant(const WeightAction& action, const Exponents& m) {
  const IntVector img = action.weights().apply(m);
  return std::all_of(img.begin(), img.end(), [](const Integer& x) { return x == 0; });
}

bool n_combination(const std::vector<ExponentVector>& gens, const Exponents& target) {
  if (gens.empty()) return std::all_of(target.begin(), target.end(), [](std::int64_t e) { return e == 0; });
  IntMatrix m(target.size(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < target.size(); ++i) m(i, j) = static_cast<long>(gens[j].entries[i]);
  IntVector t;
  for (auto e : target) t.emplace_back(static_cast<long>(e));
  return integer_point({m, t, {}, false}).has_value();
}

// Some invariant g with 0 < g < e, by enumerating the box below e. Returns
// nullopt when the box exceeds `cap` (undecided).
std::optional<bool> has_invariant_below(const WeightAction& action, const Exponents& e, std::size_t cap) {
  Integer box = 1;
  for (auto x : e) box *= static_cast<long>(x + 1);
  if (box > Integer(static_cast<unsigned long>(cap))) return std::nullopt;
  const std::size_t n = e.size();
  Exponents g(n, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < n && g[i] == e[i]) g[i++] = 0;
    if (i == n) return false;
    ++g[i];
    if (g != e && is_invariant(action, g)) return true;
  }
}

}  // namespace

std::vector<ExponentVector> bounded_irreducible_invariants(const SemiinvariantTable& table) {
  std::vector<ExponentVector> nonconstant;
  for (const auto& m : table.invariants())
    if (!m.is_zero()) nonconstant.push_back(m);
  std::vector<ExponentVector> out;
  for (const auto& m : nonconstant) {
    const bool reducible = std::any_of(nonconstant.begin(), nonconstant.end(), [&](const ExponentVector& g) {
      return g.entries != m.entries && leq(g.entries, m.entries);
    });
    if (!reducible) out.push_back(m);
  }
  sort_graded_lex(out);
  return out;
}

RefereeReport referee(const WeightAction& action, std::size_t degree_bound) {
  return referee_with_basis(action, degree_bound, hilbert_basis(action));
}

RefereeReport referee_with_basis(const WeightAction& action, std::size_t degree_bound, const HilbertBasis& basis) {
  if (action.reducible()) throw std::invalid_argument("referee: irreducible X only");
  const std::size_t n = action.dimension();
  const std::size_t d = action.torus_rank();
  const IntMatrix& a = action.weights();
  RefereeReport report;
  auto fail = [&](std::string s) { report.discrepancies.push_back(std::move(s)); };
  auto note = [&](std::string s) { report.provisional.push_back(std::move(s)); };
  const SemiinvariantTable table = enumerate(action, degree_bound);
  const auto& invariants = table.invariants();

  // Hilbert basis: complete up to the bound, each element invariant and irreducible.
  for (const auto& m : invariants) {
    if (m.is_zero()) continue;
    if (!n_combination(basis.elements, m.entries))
      fail("invariant monomial " + show(m.entries) + " of degree " + std::to_string(m.degree()) +
           " is not an N-combination of the Hilbert basis");
  }
  std::int64_t max_basis_degree = 0;
  for (const auto& e : basis.elements) {
    max_basis_degree = std::max(max_basis_degree, e.degree());
    if (!is_invariant(action, e.entries) || e.is_zero()) {
      fail("basis element " + show(e.entries) + " is not a nonzero invariant");
      continue;
    }
    const auto below = has_invariant_below(action, e.entries, kDefaultTableCeiling);
    if (below.has_value()) {
      if (*below) fail("basis element " + show(e.entries) + " is reducible");
    } else {
      const bool found = std::any_of(invariants.begin(), invariants.end(), [&](const ExponentVector& g) {
        return !g.is_zero() && g.entries != e.entries && leq(g.entries, e.entries);
      });
      if (found) fail("basis element " + show(e.entries) + " is reducible");
      else note("irreducibility of " + show(e.entries) + " checked only against degree <= bound");
    }
    if (e.degree() <= static_cast<std::int64_t>(degree_bound) &&
        std::none_of(invariants.begin(), invariants.end(),
                     [&](const ExponentVector& g) { return g.entries == e.entries; }))
      fail("basis element " + show(e.entries) + " missing from the enumerated invariants");
  }

  // Closed-type supports: certificate validity, plus brute searches on both sides.
  std::vector<std::uint64_t> invariant_supports;
  for (const auto& m : invariants) invariant_supports.push_back(mask_of(m.entries));
  const long radius = d <= 3 ? 3 : (d == 4 ? 2 : 1);
  auto brute_destabilizer = [&](const IndexSet& s) {
    IntVector lambda(d, Integer(-radius));
    if (d == 0) return false;
    for (;;) {
      bool ok = true, strict = false;
      for (std::size_t i : s) {
        Integer p = 0;
        for (std::size_t r = 0; r < d; ++r) p += lambda[r] * a(r, i);
        if (p < 0) {
          ok = false;
          break;
        }
        if (p > 0) strict = true;
      }
      if (ok && strict) return true;
      std::size_t r = 0;
      while (r < d && lambda[r] == radius) lambda[r++] = -radius;
      if (r == d) return false;
      ++lambda[r];
    }
  };
  if (n <= 12) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      IndexSet s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) s.push_back(i);
      const auto res = is_closed_orbit(action, s);
      if (res.closed == res.destabilizer.has_value() || res.closed != res.witness.has_value()) {
        fail("support " + format_index_set(s) + ": certificate alternative violated");
        continue;
      }
      if (res.closed) {
        if (!verify_witness(a, *res.witness)) fail("support " + format_index_set(s) + ": invalid positive witness");
        if (brute_destabilizer(s))
          fail("support " + format_index_set(s) + ": closed but a destabilizing lambda exists");
        if (std::find(invariant_supports.begin(), invariant_supports.end(), mask) == invariant_supports.end())
          note("support " + format_index_set(s) + ": no invariant with this exact support within the bound");
      } else {
        if (!verify_destabilizer(a, s, *res.destabilizer))
          fail("support " + format_index_set(s) + ": invalid destabilizer");
        if (std::find(invariant_supports.begin(), invariant_supports.end(), mask) != invariant_supports.end())
          fail("support " + format_index_set(s) + ": not closed but an invariant with this support exists");
      }
    }
  } else {
    note("closed-type support sweep skipped for n > 12");
  }

  // Socle: union of supports of nonnegative kernel vectors in a box.
  const SocleData soc = socle(action);
  std::uint64_t oracle_socle = 0;
  Integer box;
  mpz_ui_pow_ui(box.get_mpz_t(), degree_bound + 1, n);
  if (box <= Integer(static_cast<unsigned long>(kDefaultTableCeiling))) {
    Exponents m(n, 0);
    for (;;) {
      std::size_t i = 0;
      while (i < n && m[i] == static_cast<std::int64_t>(degree_bound)) m[i++] = 0;
      if (i == n) break;
      ++m[i];
      if (is_invariant(action, m)) oracle_socle |= mask_of(m);
    }
  } else {
    for (const auto& m : invariants) oracle_socle |= mask_of(m.entries);
  }
  for (std::size_t j = 0; j < n; ++j) {
    const bool in_oracle = oracle_socle & (std::uint64_t{1} << j);
    const bool in_exact = contains_index(soc.socle_support, j);
    if (in_oracle && !in_exact) fail("coordinate " + std::to_string(j + 1) + " supports an invariant but is outside S*");
    if (!in_oracle && in_exact)
      note("coordinate " + std::to_string(j + 1) + " in S* but no invariant within the box reaches it");
  }

  // Condition (1) lattice against the lattice of bounded invariants.
  std::vector<IntVector> gens;
  for (const auto& m : invariants) gens.push_back(m.as_integers());
  const Lattice bounded = Lattice::from_generators(n, gens);
  const Lattice exact = invariant_lattice(basis);
  for (const auto& g : gens)
    if (!exact.contains(g)) fail("invariant " + format_vector(g) + " outside the invariant lattice");
  if (bounded != exact) {
    if (max_basis_degree <= static_cast<std::int64_t>(degree_bound))
      fail("invariant lattice differs from the lattice of bounded invariants");
    else
      note("part of the invariant lattice needs generators above the degree bound");
  }

  // Bounded group test never claims a group the exact engine refutes.
  const auto exact_group = strict_positive_kernel(a, full_index_set(n));
  const auto bounded_group = group_test_bounded(table, exact_group.dual);
  if (bounded_group.group && !exact_group.feasible()) fail("bounded group test contradicts the exact engine");
  if (!bounded_group.group && exact_group.feasible())
    note("E_G(X) is a group but some -a_j needs a semiinvariant of degree above the bound");
  return report;
}

namespace {

std::string header(const char* kind, const WeightAction& action, const std::string& bound) {
  std::ostringstream os;
  os << "# torusobs " << kind << '\n'
     << "# action: " << describe(action) << '\n'
     << "# bound: " << bound << '\n'
     << "# version: " << kToolVersion << '\n';
  return os.str();
}

void write_row(std::ostringstream& os, const Exponents& v) {
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
}

}  // namespace

std::string golden_basis(const WeightAction& action, std::size_t bound, const std::vector<ExponentVector>& elements) {
  std::ostringstream os;
  os << header("hilbert-basis", action, std::to_string(bound));
  for (const auto& e : elements) {
    write_row(os, e.entries);
    os << '\n';
  }
  return os.str();
}

std::string golden_relations(const WeightAction& action, std::size_t degree_bound,
                             const std::vector<BinomialRelation>& relations) {
  std::ostringstream os;
  os << header("relations", action, std::to_string(degree_bound));
  for (const auto& r : relations) {
    write_row(os, r.lhs);
    os << " = ";
    write_row(os, r.rhs);
    os << '\n';
  }
  return os.str();
}

std::string golden_socle(const WeightAction& action, const SocleData& socle) {
  std::ostringstream os;
  os << header("socle", action, "exact");
  os << "support:";
  for (std::size_t j : socle.socle_support) os << ' ' << j + 1;
  os << "\nwitness:";
  for (const auto& x : socle.witness.dense(action.dimension())) os << ' ' << x;
  os << "\nnull-ideal:";
  for (std::size_t j = 0; j < action.dimension(); ++j)
    if (!contains_index(socle.socle_support, j)) os << " x" << j + 1;
  os << "\norbit-dimensions: " << socle.socle_orbit_dim << ' ' << socle.max_orbit_dim << '\n';
  return os.str();
}

std::string mask_version(const std::string& golden) {
  std::istringstream in(golden);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# version: ", 0) == 0) line = "# version: <masked>";
    out << line << '\n';
  }
  return out.str();
}

}  // namespace torusobs
