#pragma once

// Contejean-Devie completion for nonnegative integer solutions of a
// homogeneous system  sum_j x_j c_j = 0.  Shared by the Hilbert basis
// computation and the integer feasibility queries.
//
// Vectors are grown breadth-first by total degree. A vector p is extended by
// e_j only when <C p, c_j> < 0, and a candidate is dropped as soon as it
// dominates a solution already found. The solutions produced this way are
// exactly the minimal nonzero solutions.

#include "torusobs/exact_linalg.hpp"

#include <functional>
#include <optional>

namespace torusobs {

using Exponents = std::vector<std::int64_t>;

struct CompletionOptions {
  /// Columns whose unit vectors seed the search; empty means all columns.
  std::vector<std::size_t> starts;
  /// Columns allowed to reach at most 1 (homogenizing columns).
  std::vector<bool> at_most_once;
  /// Called on every solution in discovery order; returning true stops the search.
  /// Must be side-effect free: the search may be replayed after an overflow escape.
  std::function<bool(const Exponents&)> on_solution;
  /// Upper bound on explored vectors before a ResourceError is raised.
  std::size_t node_ceiling = 50'000'000;
};

struct CompletionOutcome {
  std::vector<Exponents> solutions;  // discovery order (nondecreasing degree)
  bool stopped_early = false;
  std::size_t explored = 0;
};

/// Columns of `c` are the c_j. Runs on checked 64-bit arithmetic and reruns
/// on mpz if any intermediate value would overflow.
CompletionOutcome run_completion(const IntMatrix& c, const CompletionOptions& options = {});

/// Forces the arbitrary-precision path (used to test the overflow escape).
CompletionOutcome run_completion_exact(const IntMatrix& c, const CompletionOptions& options = {});

/// Hilbert basis of { x in N^n : a x = 0 } by Pottier's dual algorithm. The
/// monoid is cut by one row of `a` at a time: from the Hilbert basis of M the
/// irreducibles of M ∩ {λ >= 0} and M ∩ {λ <= 0} are closed under sums
/// p + q with λ(p) > 0 > λ(q), processed by increasing degree, and those on
/// λ = 0 form the Hilbert basis of the next monoid. Falls back to completion
/// when a weight or an intermediate value leaves 64-bit range. Result is in
/// discovery order.
std::vector<Exponents> hilbert_basis_by_cuts(const IntMatrix& a, std::size_t node_ceiling = 50'000'000);

}  // namespace torusobs
