#include "torusobs/completion.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace torusobs {
namespace {

struct OverflowEscape {};

/// int64 that throws OverflowEscape instead of wrapping.
struct Checked {
  std::int64_t v = 0;

  friend Checked operator+(Checked a, Checked b) {
    Checked r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw OverflowEscape{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    Checked r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw OverflowEscape{};
    return r;
  }
  bool is_zero() const { return v == 0; }
  bool is_negative() const { return v < 0; }
};

Checked to_checked(const Integer& x) {
  if (!x.fits_slong_p()) throw OverflowEscape{};
  return Checked{x.get_si()};
}

struct Exact {
  Integer v = 0;
  friend Exact operator+(const Exact& a, const Exact& b) { return Exact{a.v + b.v}; }
  friend Exact operator*(const Exact& a, const Exact& b) { return Exact{a.v * b.v}; }
  bool is_zero() const { return v == 0; }
  bool is_negative() const { return v < 0; }
};

Exact to_exact(const Integer& x) { return Exact{x}; }

struct ExponentHash {
  std::size_t operator()(const Exponents& x) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : x) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::uint64_t support_mask(const Exponents& x) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < x.size() && i < 64; ++i)
    if (x[i] != 0) m |= (std::uint64_t{1} << i);
  return m;
}

template <class Num>
struct Node {
  Exponents x;
  std::vector<Num> image;
};

template <class Num, class Convert>
CompletionOutcome complete(const IntMatrix& c, const CompletionOptions& options, Convert convert) {
  const std::size_t d = c.rows();
  const std::size_t n = c.cols();
  std::vector<std::vector<Num>> cols(n, std::vector<Num>(d));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < d; ++i) cols[j][i] = convert(c(i, j));

  std::vector<bool> once = options.at_most_once;
  once.resize(n, false);
  std::vector<std::size_t> starts = options.starts;
  if (starts.empty())
    for (std::size_t j = 0; j < n; ++j) starts.push_back(j);

  CompletionOutcome out;
  std::vector<std::uint64_t> masks;
  const bool use_masks = n <= 64;

  auto dominated = [&](const Exponents& q) {
    const std::uint64_t qm = use_masks ? support_mask(q) : 0;
    for (std::size_t s = 0; s < out.solutions.size(); ++s) {
      if (use_masks && (masks[s] & ~qm) != 0) continue;
      const auto& b = out.solutions[s];
      bool ge = true;
      for (std::size_t i = 0; i < n && ge; ++i) ge = q[i] >= b[i];
      if (ge) return true;
    }
    return false;
  };
  auto record = [&](const Exponents& x) {
    out.solutions.push_back(x);
    masks.push_back(support_mask(x));
    return options.on_solution && options.on_solution(x);
  };
  auto is_zero = [](const std::vector<Num>& v) {
    for (const auto& e : v)
      if (!e.is_zero()) return false;
    return true;
  };

  std::vector<Node<Num>> frontier;
  std::unordered_set<Exponents, ExponentHash> seen;
  for (std::size_t j : starts) {
    Exponents x(n, 0);
    x[j] = 1;
    if (!seen.insert(x).second) continue;
    ++out.explored;
    if (is_zero(cols[j])) {
      if (record(x)) {
        out.stopped_early = true;
        return out;
      }
    } else {
      frontier.push_back({std::move(x), cols[j]});
    }
  }

  while (!frontier.empty()) {
    std::vector<Node<Num>> next;
    seen.clear();
    for (const auto& p : frontier) {
      for (std::size_t j = 0; j < n; ++j) {
        if (once[j] && p.x[j] >= 1) continue;
        Num dot{};
        for (std::size_t i = 0; i < d; ++i) dot = dot + p.image[i] * cols[j][i];
        if (!dot.is_negative()) continue;
        Exponents q = p.x;
        ++q[j];
        if (!seen.insert(q).second) continue;
        if (dominated(q)) continue;
        if (++out.explored > options.node_ceiling)
          throw ResourceError("completion: explored-vector ceiling exceeded");
        std::vector<Num> img(d);
        for (std::size_t i = 0; i < d; ++i) img[i] = p.image[i] + cols[j][i];
        if (is_zero(img)) {
          if (record(q)) {
            out.stopped_early = true;
            return out;
          }
        } else {
          next.push_back({std::move(q), std::move(img)});
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

CompletionOutcome run_completion(const IntMatrix& c, const CompletionOptions& options) {
  try {
    return complete<Checked>(c, options, to_checked);
  } catch (const OverflowEscape&) {
    return run_completion_exact(c, options);
  }
}

CompletionOutcome run_completion_exact(const IntMatrix& c, const CompletionOptions& options) {
  return complete<Exact>(c, options, to_exact);
}

namespace {

// Elements of one side of a cut, stored flat and indexed by degree.
struct CutSide {
  explicit CutSide(std::size_t dim) : n(dim) {}
  std::size_t n;
  std::vector<std::int64_t> coords;
  std::vector<std::int64_t> lambda;
  std::vector<std::uint64_t> mask;
  std::vector<std::vector<std::size_t>> by_degree;

  std::size_t size() const { return lambda.size(); }
  const std::int64_t* at(std::size_t k) const { return coords.data() + k * n; }
  void push(const std::int64_t* x, std::int64_t lam, std::uint64_t m, std::int64_t deg) {
    coords.insert(coords.end(), x, x + n);
    lambda.push_back(lam);
    mask.push_back(m);
    if (by_degree.size() <= static_cast<std::size_t>(deg)) by_degree.resize(deg + 1);
    by_degree[deg].push_back(size() - 1);
    top_degree = std::max(top_degree, deg);
  }
  std::int64_t max_degree() const { return top_degree; }
  std::int64_t top_degree = 0;

  /// Some y with deg y <= deg, y <= x componentwise and λ(y) on the reducing
  /// side of lam (<= lam if nonneg, >= lam otherwise).
  bool reduces(const std::int64_t* x, std::int64_t lam, std::uint64_t m, std::int64_t deg, bool nonneg) const {
    const auto last = std::min<std::size_t>(static_cast<std::size_t>(deg) + 1, by_degree.size());
    for (std::size_t d = 0; d < last; ++d)
      for (std::size_t k : by_degree[d]) {
        if ((mask[k] & ~m) != 0) continue;
        if (nonneg ? lambda[k] > lam : lambda[k] < lam) continue;
        const std::int64_t* y = at(k);
        bool le = true;
        for (std::size_t i = 0; i < n && le; ++i) le = y[i] <= x[i];
        if (le) return true;
      }
    return false;
  }
};

struct BudgetExhausted {};

std::int64_t checked_dot(const std::vector<std::int64_t>& row, const Exponents& x) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::int64_t term;
    if (__builtin_mul_overflow(row[i], x[i], &term) || __builtin_add_overflow(acc, term, &acc)) throw OverflowEscape{};
  }
  return acc;
}

std::vector<Exponents> cut(std::vector<Exponents> basis, const std::vector<std::int64_t>& row, std::size_t budget) {
  const std::size_t n = row.size();
  CutSide pos(n), neg(n), zero(n);
  for (const auto& h : basis) {
    const std::int64_t lam = checked_dot(row, h);
    const std::int64_t deg = std::accumulate(h.begin(), h.end(), std::int64_t{0});
    (lam > 0 ? pos : lam < 0 ? neg : zero).push(h.data(), lam, support_mask(h), deg);
  }

  std::size_t generated = 0;
  std::vector<std::int64_t> level;
  std::vector<std::int64_t> level_lambda;
  std::vector<std::size_t> order;
  for (std::int64_t deg = 2; deg <= pos.max_degree() + neg.max_degree(); ++deg) {
    // All sums p + q of this degree; both parts have strictly smaller degree.
    level.clear();
    level_lambda.clear();
    for (std::int64_t dp = 1; dp < deg; ++dp) {
      const std::int64_t dq = deg - dp;
      if (static_cast<std::size_t>(dp) >= pos.by_degree.size() || static_cast<std::size_t>(dq) >= neg.by_degree.size())
        continue;
      for (std::size_t p : pos.by_degree[dp])
        for (std::size_t q : neg.by_degree[dq]) {
          if (++generated > budget) throw BudgetExhausted{};
          const std::int64_t* a = pos.at(p);
          const std::int64_t* b = neg.at(q);
          for (std::size_t i = 0; i < n; ++i) {
            std::int64_t v;
            if (__builtin_add_overflow(a[i], b[i], &v)) throw OverflowEscape{};
            level.push_back(v);
          }
          level_lambda.push_back(pos.lambda[p] + neg.lambda[q]);
        }
    }
    const std::size_t count = level_lambda.size();
    if (count == 0) continue;
    order.resize(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto row_at = [&](std::size_t k) { return level.data() + k * n; };
    auto less = [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(row_at(a), row_at(a) + n, row_at(b), row_at(b) + n);
    };
    std::sort(order.begin(), order.end(), less);

    std::vector<std::size_t> fresh;
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t c = order[k];
      if (k > 0 && std::equal(row_at(c), row_at(c) + n, row_at(order[k - 1]))) continue;
      const std::int64_t* x = row_at(c);
      std::uint64_t m = 0;
      for (std::size_t i = 0; i < n && i < 64; ++i)
        if (x[i] != 0) m |= std::uint64_t{1} << i;
      const std::int64_t lam = level_lambda[c];
      const bool nonneg = lam >= 0;
      if (zero.reduces(x, lam, m, deg, nonneg)) continue;
      if ((nonneg ? pos : neg).reduces(x, lam, m, deg, nonneg)) continue;
      fresh.push_back(c);
    }
    // Elements of one degree cannot reduce each other, so they join together.
    for (std::size_t c : fresh) {
      const std::int64_t* x = row_at(c);
      std::uint64_t m = 0;
      for (std::size_t i = 0; i < n && i < 64; ++i)
        if (x[i] != 0) m |= std::uint64_t{1} << i;
      const std::int64_t lam = level_lambda[c];
      (lam > 0 ? pos : lam < 0 ? neg : zero).push(x, lam, m, deg);
    }
  }
  std::vector<Exponents> out;
  out.reserve(zero.size());
  for (std::size_t k = 0; k < zero.size(); ++k) out.emplace_back(zero.at(k), zero.at(k) + n);
  return out;
}

}  // namespace

std::vector<Exponents> hilbert_basis_by_cuts(const IntMatrix& a, std::size_t node_ceiling) {
  const std::size_t n = a.cols();
  try {
    std::vector<std::vector<std::int64_t>> rows(a.rows(), std::vector<std::int64_t>(n));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t i = 0; i < n; ++i) rows[r][i] = to_checked(a(r, i)).v;
    std::vector<Exponents> basis;
    for (std::size_t i = 0; i < n; ++i) {
      Exponents e(n, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    // The cost of a cut depends heavily on the order of the rows. Each round
    // tries every remaining row under a shared candidate budget, doubling it
    // until some row completes, and keeps the smallest resulting basis.
    std::vector<bool> used(rows.size(), false);
    for (std::size_t round = 0; round < rows.size(); ++round) {
      const bool last = round + 1 == rows.size();
      std::size_t budget = last ? node_ceiling : std::min<std::size_t>(4096, node_ceiling);
      std::optional<std::vector<Exponents>> best;
      std::size_t best_row = 0;
      while (!best) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (used[r]) continue;
          try {
            auto next = cut(basis, rows[r], budget);
            if (!best || next.size() < best->size()) {
              best = std::move(next);
              best_row = r;
            }
          } catch (const BudgetExhausted&) {
          }
        }
        if (!best) {
          if (budget >= node_ceiling) throw ResourceError("hilbert basis: candidate ceiling exceeded");
          budget = std::min(node_ceiling, 2 * budget);
        }
      }
      used[best_row] = true;
      basis = std::move(*best);
    }
    return basis;
  } catch (const OverflowEscape&) {
    CompletionOptions options;
    options.node_ceiling = node_ceiling;
    return run_completion(a, options).solutions;
  }
}

}  // namespace torusobs
