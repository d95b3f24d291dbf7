#pragma once

// Seeded instance generators shared by the acceptance suite and the CLI.

#include "torusobs/action.hpp"

#include <cstdint>

namespace torusobs {

struct CorpusSpec {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t min_d = 1;
  std::size_t max_d = 3;
  std::size_t min_n = 1;
  std::size_t max_n = 5;
  long entry_bound = 4;  // entries drawn from [-entry_bound, entry_bound]
};

std::vector<WeightAction> random_corpus(const CorpusSpec& spec);

/// d = 1, every weight vector in {-1, 0, 1}^n for n = 1..max_n.
std::vector<WeightAction> sign_pattern_sweep(std::size_t max_n);

/// Random weights with 2-3 random antichain component supports.
std::vector<WeightAction> random_reducible_corpus(const CorpusSpec& spec);

/// The referee's standard corpus: d <= 3, n <= 5, entries in [-4, 4].
std::vector<WeightAction> standard_referee_corpus();

}  // namespace torusobs
