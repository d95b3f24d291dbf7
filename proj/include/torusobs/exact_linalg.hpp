#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, kernel
// lattices, saturation and lattice comparison. Everything is over mpz.

#include "torusobs/types.hpp"

#include <initializer_list>
#include <span>

namespace torusobs {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  /// Rows must all have length `cols`.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_list() const;

  IntMatrix transpose() const;
  IntMatrix select_columns(const IndexSet& cols) const;
  bool is_zero() const;

  IntVector apply(std::span<const Integer> v) const;            // this * v
  IntVector apply(std::span<const std::int64_t> v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  // Elementary row operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

std::string format_matrix(const IntMatrix& m);

struct HermiteResult {
  IntMatrix h;
  IntMatrix transform;  // unimodular, h = transform * m
};

/// Row-style HNF: pivots strictly positive and moving right, entries above a
/// pivot reduced into [0, pivot), zero rows at the bottom.
HermiteResult hermite_normal_form(const IntMatrix& m);

bool is_hermite_normal_form(const IntMatrix& h);

struct SmithResult {
  IntMatrix d;          // diagonal, d_i | d_{i+1}, nonnegative
  IntMatrix left;       // u, with d = u * m * v
  IntMatrix right;      // v
  IntMatrix right_inverse;
};

/// Pivot choice: smallest nonzero absolute value, lowest (row, col) index on ties.
SmithResult smith_normal_form(const IntMatrix& m);

Integer determinant(const IntMatrix& m);  // Bareiss, square only
std::size_t rank(const IntMatrix& m);

/// Subgroup of Z^n stored as the nonzero rows of its canonical HNF, so equal
/// lattices have identical bases.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_dim = 0);
  static Lattice from_generators(std::size_t ambient_dim, const std::vector<IntVector>& gens);
  static Lattice full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }
  IntMatrix basis_matrix() const;

  bool contains(const IntVector& v) const;
  /// Representative of v + L with pivot entries reduced into [0, pivot).
  IntVector reduce(IntVector v) const;

  friend bool operator==(const Lattice& a, const Lattice& b) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<IntVector> basis_;
};

/// { v in Z^cols : m v = 0 }.
Lattice kernel_lattice(const IntMatrix& m);

/// Throws std::invalid_argument on ambient dimension mismatch.
bool lattice_equal(const Lattice& a, const Lattice& b);

/// { v : k v in l for some k >= 1 }, read off the Smith normal form.
Lattice saturate(const Lattice& l);

}  // namespace torusobs
