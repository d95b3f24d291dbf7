#pragma once

// Action descriptions: a JSON document with 1-based coordinate indices.
//
//   {
//     "weights": [[1, 1, -1, -1]],     // d rows of n entries
//     "n": 4,                          // optional; required when d = 0
//     "components": [[1, 2], [3, 4]],  // optional
//     "inverted": [1, 3],              // optional
//     "seed": 7,                       // optional
//     "degree_bound": 8                // optional
//   }
//
// Integers may be written as JSON numbers or as decimal strings.

#include "torusobs/action.hpp"
#include "torusobs/completion.hpp"

#include <cstdint>
#include <optional>

namespace torusobs {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ActionDescription {
  IntMatrix weights;
  std::optional<std::vector<IndexSet>> components;  // 0-based internally
  std::optional<IndexSet> inverted;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> degree_bound;

  WeightAction action() const;
  friend bool operator==(const ActionDescription&, const ActionDescription&) = default;
};

ActionDescription parse_description(const std::string& text);
std::string serialize_description(const ActionDescription& desc);

/// A single description, {"actions": [...]}, or {"random_corpus": {seed,
/// count, min_d, max_d, min_n, max_n, entry_bound}}.
std::vector<ActionDescription> parse_corpus(const std::string& text);

ActionDescription describe_action(const WeightAction& action);

/// Exponent vectors in the golden text format: '#' lines are skipped, every
/// other nonblank line holds n space-separated nonnegative integers.
std::vector<Exponents> parse_exponent_list(const std::string& text, std::size_t n);

}  // namespace torusobs
