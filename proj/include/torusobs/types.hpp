#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace torusobs {

inline constexpr const char* kToolVersion = "0.1.0";

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Sorted, duplicate-free list of 0-based coordinate indices.
using IndexSet = std::vector<std::size_t>;

/// Raised when a computation would exceed a configured resource ceiling.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

IndexSet full_index_set(std::size_t n);
IndexSet normalize_index_set(IndexSet s);
bool is_subset(const IndexSet& a, const IndexSet& b);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);
bool contains_index(const IndexSet& s, std::size_t i);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);

/// Clears denominators and divides by the content, preserving signs.
IntVector primitive_integer_multiple(const RatVector& v);

std::string format_vector(const IntVector& v);
std::string format_vector(const std::vector<std::int64_t>& v);
std::string format_index_set(const IndexSet& s);  // 1-based, "{1,2}"

}  // namespace torusobs
