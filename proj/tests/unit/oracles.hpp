#pragma once

// Brute-force reference computations for the unit tests. These work on plain
// int64 vectors and exhaustive enumeration, so they share no code path with the
// library algorithms they check.

#include "torusobs/action.hpp"
#include "torusobs/exact_linalg.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<long>;
using Rows = std::vector<Vec>;

inline torusobs::IntMatrix to_matrix(const Rows& rows, std::size_t cols) {
  std::vector<torusobs::IntVector> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return torusobs::IntMatrix::from_rows(r, cols);
}

inline torusobs::WeightAction to_action(const Rows& rows, std::size_t n) {
  return torusobs::WeightAction(to_matrix(rows, n));
}

inline Rows rows_of(const torusobs::IntMatrix& m) {
  Rows out(m.rows(), Vec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_si();
  return out;
}

inline torusobs::IntVector to_int_vector(const Vec& v) { return {v.begin(), v.end()}; }

inline Vec from_int_vector(const torusobs::IntVector& v) {
  Vec out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

inline Vec from_exponents(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

inline Vec mul(const Rows& a, const Vec& v) {
  Vec out(a.size(), 0);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += a[r][c] * v[c];
  return out;
}

inline bool is_zero(const Vec& v) {
  for (long x : v)
    if (x != 0) return false;
  return true;
}

inline long degree(const Vec& v) {
  long s = 0;
  for (long x : v) s += x;
  return s;
}

/// Calls fn on every vector of length n with entries in [lo, hi].
inline void for_each_box(std::size_t n, long lo, long hi, const std::function<void(const Vec&)>& fn) {
  Vec v(n, lo);
  while (true) {
    fn(v);
    std::size_t i = 0;
    while (i < n && v[i] == hi) v[i++] = lo;
    if (i == n) return;
    ++v[i];
  }
}

/// Calls fn on every v with 0 <= v <= top componentwise.
inline void for_each_below(const Vec& top, const std::function<void(const Vec&)>& fn) {
  const std::size_t n = top.size();
  Vec v(n, 0);
  while (true) {
    fn(v);
    std::size_t i = 0;
    while (i < n && v[i] == top[i]) v[i++] = 0;
    if (i == n) return;
    ++v[i];
  }
}

/// All exponent vectors in N^n with total degree <= bound.
inline std::vector<Vec> monomials_up_to(std::size_t n, long bound) {
  std::vector<Vec> out;
  Vec v(n, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == n) {
      out.push_back(v);
      return;
    }
    for (long e = 0; e <= left; ++e) {
      v[i] = e;
      rec(i + 1, left - e);
    }
    v[i] = 0;
  };
  rec(0, bound);
  return out;
}

/// Invariant monomials of degree <= bound, including zero.
inline std::vector<Vec> invariant_monomials(const Rows& a, std::size_t n, long bound) {
  std::vector<Vec> out;
  for (const auto& m : monomials_up_to(n, bound))
    if (is_zero(mul(a, m))) out.push_back(m);
  return out;
}

/// Nonzero invariant monomials of degree <= bound that are not a sum of two
/// nonzero invariant monomials.
inline std::set<Vec> irreducible_invariants(const Rows& a, std::size_t n, long bound) {
  const auto inv = invariant_monomials(a, n, bound);
  std::set<Vec> all(inv.begin(), inv.end());
  std::set<Vec> out;
  for (const auto& m : inv) {
    if (is_zero(m)) continue;
    bool reducible = false;
    for (const auto& g : inv) {
      if (is_zero(g) || g == m) continue;
      Vec rest(n);
      bool below = true;
      for (std::size_t i = 0; i < n; ++i) {
        rest[i] = m[i] - g[i];
        below = below && rest[i] >= 0;
      }
      if (below && all.count(rest)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.insert(m);
  }
  return out;
}

/// Is v (nonnegative) a sum of elements of gens (nonnegative, nonzero)?
inline bool in_monoid(const Vec& v, const std::vector<Vec>& gens) {
  std::map<Vec, bool> memo;
  std::function<bool(const Vec&)> rec = [&](const Vec& x) -> bool {
    if (is_zero(x)) return true;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : gens) {
      Vec rest(x.size());
      bool below = true;
      for (std::size_t i = 0; i < x.size() && below; ++i) {
        rest[i] = x[i] - g[i];
        below = rest[i] >= 0;
      }
      if (below && rec(rest)) {
        ok = true;
        break;
      }
    }
    memo[x] = ok;
    return ok;
  };
  return rec(v);
}

/// Coordinates of v in the rational span of linearly independent rows, by
/// Gaussian elimination on the augmented transpose.
inline std::optional<std::vector<mpq_class>> rational_coordinates(const std::vector<Vec>& basis, const Vec& v) {
  const std::size_t k = basis.size(), n = v.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = v[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < k && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const mpq_class f = m[i][col] / m[row][col];
      for (std::size_t j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (m[i][k] != 0) return std::nullopt;
  std::vector<mpq_class> c(k, 0);
  for (std::size_t r = 0; r < row; ++r) c[pivot_col[r]] = m[r][k] / m[r][pivot_col[r]];
  return c;
}

/// Integer membership in the lattice spanned by independent rows.
inline bool in_lattice(const std::vector<Vec>& basis, const Vec& v) {
  const auto c = rational_coordinates(basis, v);
  if (!c) return false;
  for (const auto& x : *c)
    if (x.get_den() != 1) return false;
  return true;
}

inline std::vector<Vec> basis_rows(const torusobs::Lattice& l) {
  std::vector<Vec> out;
  for (const auto& b : l.basis()) out.push_back(from_int_vector(b));
  return out;
}

/// Side found by bounded search: a strictly positive relation on `support`
/// (scale-free, so integer u in [1, bound]^|S|) or a Farkas dual lambda in
/// [-bound, bound]^d.
enum class Side { Witness, Dual, Neither, Both };

inline bool has_positive_relation(const Rows& a, const std::vector<std::size_t>& support, long bound) {
  if (support.empty()) return true;
  bool found = false;
  for_each_box(support.size(), 1, bound, [&](const Vec& u) {
    if (found) return;
    Vec sum(a.size(), 0);
    for (std::size_t k = 0; k < support.size(); ++k)
      for (std::size_t r = 0; r < a.size(); ++r) sum[r] += u[k] * a[r][support[k]];
    found = is_zero(sum);
  });
  return found;
}

inline bool has_destabilizer(const Rows& a, const std::vector<std::size_t>& support, long bound) {
  bool found = false;
  for_each_box(a.size(), -bound, bound, [&](const Vec& lambda) {
    if (found) return;
    bool nonneg = true, strict = false;
    for (std::size_t i : support) {
      long p = 0;
      for (std::size_t r = 0; r < a.size(); ++r) p += lambda[r] * a[r][i];
      nonneg = nonneg && p >= 0;
      strict = strict || p > 0;
    }
    found = nonneg && strict;
  });
  return found;
}

inline Side positivity_side(const Rows& a, const std::vector<std::size_t>& support, long bound) {
  const bool w = has_positive_relation(a, support, bound);
  const bool d = has_destabilizer(a, support, bound);
  if (w && d) return Side::Both;
  if (w) return Side::Witness;
  if (d) return Side::Dual;
  return Side::Neither;
}

/// Coordinates j admitting u >= 0, u_j >= 1, A u = 0 with entries <= bound.
inline std::vector<std::size_t> bounded_socle(const Rows& a, std::size_t n, long bound) {
  std::set<std::size_t> s;
  for_each_box(n, 0, bound, [&](const Vec& u) {
    if (is_zero(u) || !is_zero(mul(a, u))) return;
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] > 0) s.insert(i);
  });
  return {s.begin(), s.end()};
}

/// Same orbit over C for a rank-one torus: enumerates every t with
/// t^{a_j} = r_j at the first coordinate of nonzero weight and checks the rest
/// numerically. Points must share support; r is y/x on that support.
inline bool same_orbit_rank_one(const Vec& weights, const std::vector<double>& ratios) {
  std::size_t j = 0;
  while (j < weights.size() && weights[j] == 0) ++j;
  auto ok_at = [&](std::complex<double> t) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const std::complex<double> value = std::pow(t, static_cast<double>(weights[i]));
      if (std::abs(value - ratios[i]) > 1e-9 * std::max(1.0, std::abs(ratios[i]))) return false;
    }
    return true;
  };
  if (j == weights.size()) return ok_at(1.0);
  const long a = weights[j];
  const double rho = std::pow(std::abs(ratios[j]), 1.0 / static_cast<double>(a));
  const double arg = ratios[j] < 0 ? M_PI : 0.0;
  for (long k = 0; k < std::labs(a); ++k) {
    const double theta = (arg + 2.0 * M_PI * static_cast<double>(k)) / static_cast<double>(a);
    if (ok_at(std::polar(rho, theta))) return true;
  }
  return false;
}

/// A d x n matrix with entries uniform in [-bound, bound].
inline Rows random_rows(std::mt19937_64& rng, std::size_t d, std::size_t n, long bound) {
  std::uniform_int_distribution<long> pick(-bound, bound);
  Rows a(d, Vec(n));
  for (auto& row : a)
    for (auto& x : row) x = pick(rng);
  return a;
}

struct Instance {
  Rows rows;
  std::size_t n;
  torusobs::WeightAction action() const { return to_action(rows, n); }
};

inline std::vector<Instance> random_instances(std::uint64_t seed, std::size_t count, std::size_t max_d,
                                              std::size_t max_n, long bound, std::size_t min_n = 1) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t d = 1 + rng() % max_d;
    const std::size_t n = min_n + rng() % (max_n - min_n + 1);
    out.push_back({random_rows(rng, d, n, bound), n});
  }
  return out;
}

}  // namespace oracle
