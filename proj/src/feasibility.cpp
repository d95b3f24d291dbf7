#include "torusobs/feasibility.hpp"

#include <algorithm>

namespace torusobs {

IntVector PositiveWitness::dense(std::size_t n) const {
  IntVector out(n, Integer(0));
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (support[k] >= n) throw std::out_of_range("PositiveWitness::dense: support index out of range");
    out[support[k]] = coefficients[k];
  }
  return out;
}

std::optional<RatVector> find_nonnegative_solution(const IntMatrix& a, const IntVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw std::invalid_argument("find_nonnegative_solution: rhs dimension mismatch");
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;

  std::vector<RatVector> t(m, RatVector(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a(i, j)) : Rational(a(i, j));
    t[i][n + i] = 1;
    t[i][rhs] = flip ? Rational(-b[i]) : Rational(b[i]);
    basis[i] = n + i;
  }
  // reduced costs of the phase-one objective (sum of artificials); the rhs
  // slot holds minus the objective value
  RatVector cost(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
    cost[rhs] -= t[i][rhs];
  }

  for (;;) {
    std::size_t enter = rhs;
    for (std::size_t j = 0; j < rhs; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == rhs) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // the phase-one objective is bounded below by zero
    if (leave == m) throw std::logic_error("find_nonnegative_solution: unbounded phase one");

    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (cost[rhs] != 0) return std::nullopt;
  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][rhs];
  return x;
}

bool verify_farkas(const IntMatrix& a, const IntVector& b, const IntVector& y) {
  if (y.size() != a.rows()) return false;
  const IntVector aty = a.transpose().apply(y);
  if (std::any_of(aty.begin(), aty.end(), [](const Integer& v) { return v < 0; })) return false;
  Integer by = 0;
  for (std::size_t i = 0; i < y.size(); ++i) by += b[i] * y[i];
  return by < 0;
}

std::optional<IntVector> farkas_certificate(const IntMatrix& a, const IntVector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // variables p (m), q (m), s (n):  A^T p - A^T q - s = 0,  <b, p - q> = -1
  IntMatrix sys(n + 1, 2 * m + n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      sys(j, i) = a(i, j);
      sys(j, m + i) = -a(i, j);
    }
    sys(j, 2 * m + j) = -1;
  }
  for (std::size_t i = 0; i < m; ++i) {
    sys(n, i) = b[i];
    sys(n, m + i) = -b[i];
  }
  IntVector rhs(n + 1, Integer(0));
  rhs[n] = -1;
  const auto sol = find_nonnegative_solution(sys, rhs);
  if (!sol) return std::nullopt;
  RatVector y(m);
  for (std::size_t i = 0; i < m; ++i) y[i] = (*sol)[i] - (*sol)[m + i];
  IntVector out = primitive_integer_multiple(y);
  if (!verify_farkas(a, b, out)) throw std::logic_error("farkas_certificate: certificate failed verification");
  return out;
}

bool verify_witness(const IntMatrix& a, const PositiveWitness& w) {
  if (w.coefficients.size() != w.support.size()) return false;
  if (std::any_of(w.coefficients.begin(), w.coefficients.end(), [](const Integer& u) { return u < 1; }))
    return false;
  const IntVector img = a.select_columns(w.support).apply(w.coefficients);
  return std::all_of(img.begin(), img.end(), [](const Integer& v) { return v == 0; });
}

bool verify_destabilizer(const IntMatrix& a, const IndexSet& support, const IntVector& lambda) {
  if (lambda.size() != a.rows()) return false;
  bool strict = false;
  for (std::size_t i : support) {
    Integer pairing = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) pairing += lambda[r] * a(r, i);
    if (pairing < 0) return false;
    if (pairing > 0) strict = true;
  }
  return strict;
}

PositivityResult strict_positive_kernel(const IntMatrix& a, const IndexSet& support) {
  for (std::size_t i : support)
    if (i >= a.cols()) throw std::out_of_range("strict_positive_kernel: support index out of range");
  const IntMatrix sub = a.select_columns(support);
  // u = 1 + x with x >= 0:  sub x = -sub 1
  IntVector ones(support.size(), Integer(1));
  IntVector rhs = sub.apply(ones);
  for (auto& v : rhs) v = -v;

  PositivityResult result;
  if (auto x = find_nonnegative_solution(sub, rhs)) {
    RatVector u(support.size());
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = (*x)[k] + 1;
    result.witness = PositiveWitness{support, primitive_integer_multiple(u)};
    if (!verify_witness(a, *result.witness))
      throw std::logic_error("strict_positive_kernel: witness failed verification");
  }
  result.dual = farkas_certificate(sub, rhs);
  if (result.witness.has_value() == result.dual.has_value())
    throw std::logic_error("strict_positive_kernel: Farkas alternative violated");
  return result;
}

RelationResult nonnegative_relation_through(const IntMatrix& a, std::size_t j) {
  if (j >= a.cols()) throw std::out_of_range("nonnegative_relation_through: index out of range");
  IntVector rhs = a.column(j);
  for (auto& v : rhs) v = -v;
  RelationResult result;
  if (auto x = find_nonnegative_solution(a, rhs)) {
    (*x)[j] += 1;
    result.relation = primitive_integer_multiple(*x);
  }
  result.dual = farkas_certificate(a, rhs);
  if (result.relation.has_value() == result.dual.has_value())
    throw std::logic_error("nonnegative_relation_through: Farkas alternative violated");
  return result;
}

std::optional<IntVector> integer_point(const FeasibilityQuery& q) {
  const std::size_t d = q.matrix.rows();
  const std::size_t n = q.matrix.cols();
  if (q.target.size() != d) throw std::invalid_argument("integer_point: target dimension mismatch");
  if (!q.domains.empty() && q.domains.size() != n)
    throw std::invalid_argument("integer_point: domain list dimension mismatch");

  // split free variables into a difference of two nonnegative ones
  std::vector<std::pair<std::size_t, int>> var_of_column;
  for (std::size_t i = 0; i < n; ++i) {
    var_of_column.emplace_back(i, 1);
    if (!q.domains.empty() && q.domains[i] == VarDomain::FreeInteger) var_of_column.emplace_back(i, -1);
  }
  const bool homogeneous =
      std::all_of(q.target.begin(), q.target.end(), [](const Integer& v) { return v == 0; });
  if (homogeneous && !q.require_nonzero) return IntVector(n, Integer(0));

  const std::size_t cols = var_of_column.size() + (homogeneous ? 0 : 1);
  IntMatrix c(d, cols);
  for (std::size_t k = 0; k < var_of_column.size(); ++k) {
    const auto [i, sign] = var_of_column[k];
    for (std::size_t r = 0; r < d; ++r) c(r, k) = sign > 0 ? q.matrix(r, i) : Integer(-q.matrix(r, i));
  }
  auto decode = [&](const Exponents& x) {
    IntVector m(n, Integer(0));
    for (std::size_t k = 0; k < var_of_column.size(); ++k) {
      const auto [i, sign] = var_of_column[k];
      m[i] += Integer(static_cast<long>(x[k])) * sign;
    }
    return m;
  };

  CompletionOptions options;
  if (homogeneous) {
    options.on_solution = [&](const Exponents& x) {
      const IntVector m = decode(x);
      return std::any_of(m.begin(), m.end(), [](const Integer& v) { return v != 0; });
    };
  } else {
    const std::size_t s = cols - 1;
    for (std::size_t r = 0; r < d; ++r) c(r, s) = -q.target[r];
    options.at_most_once.assign(cols, false);
    options.at_most_once[s] = true;
    options.on_solution = [s](const Exponents& x) { return x[s] == 1; };
  }
  const auto outcome = run_completion(c, options);
  if (!outcome.stopped_early) return std::nullopt;
  IntVector m = decode(outcome.solutions.back());
  if (q.matrix.apply(m) != q.target) throw std::logic_error("integer_point: returned point is not a solution");
  return m;
}

}  // namespace torusobs
