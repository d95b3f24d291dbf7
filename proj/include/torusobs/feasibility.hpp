#pragma once

// Exact feasibility queries: strictly positive kernel vectors (rational LP
// with Bland's rule) and nonnegative integer points (completion).

#include "torusobs/completion.hpp"
#include "torusobs/exact_linalg.hpp"

#include <optional>

namespace torusobs {

/// u with u_i >= 1 on `support` and sum_i u_i a_i = 0, scaled to the primitive
/// integer vector on its ray.
struct PositiveWitness {
  IndexSet support;
  IntVector coefficients;  // aligned with support

  /// Coefficients spread over all n coordinates (zeros off the support).
  IntVector dense(std::size_t n) const;
};

/// Exactly one of witness / dual is engaged.
struct PositivityResult {
  std::optional<PositiveWitness> witness;
  /// Integer lambda with <lambda, a_i> >= 0 on the support, strict for some i.
  std::optional<IntVector> dual;

  bool feasible() const { return witness.has_value(); }
};

/// x >= 0 with a x = b, or nothing. Phase-one simplex over Q with Bland's rule.
std::optional<RatVector> find_nonnegative_solution(const IntMatrix& a, const IntVector& b);

/// y with a^T y >= 0 and <b, y> < 0 (primitive integer), or nothing. Solved as
/// its own LP so that the two alternatives are decided independently.
std::optional<IntVector> farkas_certificate(const IntMatrix& a, const IntVector& b);

bool verify_farkas(const IntMatrix& a, const IntVector& b, const IntVector& y);

/// Throws std::logic_error if neither or both alternatives are feasible.
PositivityResult strict_positive_kernel(const IntMatrix& a, const IndexSet& support);

bool verify_witness(const IntMatrix& a, const PositiveWitness& w);
/// <lambda, a_i> >= 0 for i in support, strict somewhere.
bool verify_destabilizer(const IntMatrix& a, const IndexSet& support, const IntVector& lambda);

/// Nonnegative relation through coordinate j: u >= 0, u_j >= 1, a u = 0.
struct RelationResult {
  std::optional<IntVector> relation;  // dense, primitive integer
  std::optional<IntVector> dual;      // <y,a_i> >= 0 for all i, <y,a_j> > 0
};
RelationResult nonnegative_relation_through(const IntMatrix& a, std::size_t j);

enum class VarDomain { NonnegativeInteger, FreeInteger };

struct FeasibilityQuery {
  IntMatrix matrix;
  IntVector target;
  std::vector<VarDomain> domains;  // empty means all nonnegative
  bool require_nonzero = false;    // only meaningful for a zero target
};

/// m with matrix * m = target and each m_i in its domain, or nothing. Exact:
/// completion over the homogenized system [matrix | -target], where the
/// homogenizing coordinate is capped at 1.
std::optional<IntVector> integer_point(const FeasibilityQuery& q);

}  // namespace torusobs
