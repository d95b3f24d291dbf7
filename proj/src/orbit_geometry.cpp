#include "torusobs/orbit_geometry.hpp"

#include <algorithm>

namespace torusobs {

namespace {

void require_irreducible(const WeightAction& action, const char* what) {
  if (action.reducible())
    throw std::invalid_argument(std::string(what) + ": reducible X must be handled per component");
}

void check_support(const WeightAction& action, const IndexSet& support) {
  for (std::size_t i : support)
    if (i >= action.dimension()) throw std::out_of_range("support index out of range");
}

}  // namespace

IndexSet support_of(const RationalPoint& x) {
  IndexSet s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) s.push_back(i);
  return s;
}

std::size_t orbit_dimension(const WeightAction& action, const IndexSet& support) {
  check_support(action, support);
  return rank(action.weights().select_columns(support));
}

ClosedOrbitResult is_closed_orbit(const WeightAction& action, const IndexSet& support) {
  check_support(action, support);
  auto pos = strict_positive_kernel(action.weights(), normalize_index_set(support));
  ClosedOrbitResult r;
  r.closed = pos.feasible();
  r.witness = std::move(pos.witness);
  r.destabilizer = std::move(pos.dual);
  return r;
}

SocleData socle(const WeightAction& action) {
  require_irreducible(action, "socle");
  const std::size_t n = action.dimension();
  SocleData data;
  IntVector total(n, Integer(0));
  for (std::size_t j = 0; j < n; ++j) {
    auto rel = nonnegative_relation_through(action.weights(), j);
    if (rel.relation) {
      data.socle_support.push_back(j);
      for (std::size_t i = 0; i < n; ++i) total[i] += (*rel.relation)[i];
    } else {
      data.exclusion_certificates.emplace_back(j, std::move(*rel.dual));
    }
  }
  total = primitive(std::move(total));
  data.witness.support = data.socle_support;
  for (std::size_t j : data.socle_support) data.witness.coefficients.push_back(total[j]);
  for (std::size_t i = 0; i < n; ++i)
    if (total[i] != 0 && !contains_index(data.socle_support, i))
      throw std::logic_error("socle: relation leaves the socle support");
  if (!verify_witness(action.weights(), data.witness))
    throw std::logic_error("socle: summed witness failed verification");
  data.max_orbit_dim = rank(action.weights());
  data.socle_orbit_dim = rank(action.weights().select_columns(data.socle_support));
  return data;
}

bool omega_nonempty(const WeightAction& action) {
  require_irreducible(action, "omega_nonempty");
  const auto s = socle(action);
  const bool full_support = s.socle_support.size() == action.dimension();
  const bool full_rank = s.socle_orbit_dim == s.max_orbit_dim;
  const bool generic_closed = is_closed_orbit(action, full_index_set(action.dimension())).closed;
  if (full_support != full_rank || full_support != generic_closed)
    throw std::logic_error("omega_nonempty: socle support, rank and generic closedness disagree");
  return full_support;
}

Rational power(const Rational& base, const Integer& exponent) {
  if (!Integer(abs(exponent)).fits_ulong_p())
    throw ResourceError("power: exponent too large");
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("power: zero to a negative exponent");
    const Rational inv = 1 / base;
    return power(inv, Integer(-exponent));
  }
  const unsigned long e = exponent.get_ui();
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

bool orbit_equivalent(const WeightAction& action, const RationalPoint& x, const RationalPoint& y) {
  OrbitComparator same(action);
  return same(x, y);
}

const std::vector<IntVector>& OrbitComparator::relations(const IndexSet& support) {
  auto it = relations_.find(support);
  if (it != relations_.end()) return it->second;
  // the image of the torus in (k*)^S is the subtorus annihilated by the
  // (saturated) relation lattice of the weights on S
  const Lattice lattice = saturate(kernel_lattice(action_.weights().select_columns(support)));
  return relations_.emplace(support, lattice.basis()).first->second;
}

bool OrbitComparator::operator()(const RationalPoint& x, const RationalPoint& y) {
  const std::size_t n = action_.dimension();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("orbit_equivalent: point dimension mismatch");
  const IndexSet s = support_of(x);
  if (s != support_of(y)) return false;
  for (const auto& v : relations(s)) {
    Rational prod = 1;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (v[k] == 0) continue;
      prod *= power(y[s[k]] / x[s[k]], v[k]);
    }
    if (prod != 1) return false;
  }
  return true;
}

RationalPoint act(const WeightAction& action, const RatVector& t, const RationalPoint& x) {
  if (t.size() != action.torus_rank() || x.size() != action.dimension())
    throw std::invalid_argument("act: dimension mismatch");
  RationalPoint out = x;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t r = 0; r < t.size(); ++r)
      if (action.weights()(r, i) != 0) out[i] *= power(t[r], action.weights()(r, i));
  return out;
}

}  // namespace torusobs
