#include "torusobs/corpus.hpp"

#include "torusobs/quotient.hpp"

namespace torusobs {

namespace {

IntMatrix random_weights(PointSampler& rng, std::size_t d, std::size_t n, long bound) {
  IntMatrix w(d, n);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < n; ++c) w(r, c) = static_cast<long>(rng.uniform(-bound, bound));
  return w;
}

}  // namespace

std::vector<WeightAction> random_corpus(const CorpusSpec& spec) {
  PointSampler rng(spec.seed);
  std::vector<WeightAction> out;
  out.reserve(spec.count);
  for (std::size_t k = 0; k < spec.count; ++k) {
    const auto d = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(spec.min_d),
                                                        static_cast<std::int64_t>(spec.max_d)));
    const auto n = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(spec.min_n),
                                                        static_cast<std::int64_t>(spec.max_n)));
    out.emplace_back(random_weights(rng, d, n, spec.entry_bound));
  }
  return out;
}

std::vector<WeightAction> sign_pattern_sweep(std::size_t max_n) {
  std::vector<WeightAction> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      IntMatrix w(1, n);
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= 3) w(0, i) = static_cast<long>(c % 3) - 1;
      out.emplace_back(std::move(w));
    }
  }
  return out;
}

std::vector<WeightAction> random_reducible_corpus(const CorpusSpec& spec) {
  PointSampler rng(spec.seed);
  std::vector<WeightAction> out;
  while (out.size() < spec.count) {
    const auto d = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(spec.min_d),
                                                        static_cast<std::int64_t>(spec.max_d)));
    const auto n = static_cast<std::size_t>(rng.uniform(std::max<std::int64_t>(2, static_cast<std::int64_t>(spec.min_n)),
                                                        static_cast<std::int64_t>(spec.max_n)));
    IntMatrix w = random_weights(rng, d, n, spec.entry_bound);
    const auto wanted = static_cast<std::size_t>(rng.uniform(2, 3));
    std::vector<IndexSet> comps;
    for (int attempt = 0; attempt < 20 && comps.size() < wanted; ++attempt) {
      IndexSet s;
      for (std::size_t i = 0; i < n; ++i)
        if (rng.uniform(0, 1)) s.push_back(i);
      if (s.empty() || s.size() == n) continue;
      bool comparable = false;
      for (const auto& t : comps) comparable = comparable || is_subset(s, t) || is_subset(t, s);
      if (!comparable) comps.push_back(std::move(s));
    }
    if (comps.size() < 2) continue;
    out.emplace_back(std::move(w), std::move(comps));
  }
  return out;
}

std::vector<WeightAction> standard_referee_corpus() {
  auto corpus = random_corpus({.seed = 20240807, .count = 300, .min_d = 1, .max_d = 3, .min_n = 1, .max_n = 5,
                               .entry_bound = 4});
  for (auto& a : sign_pattern_sweep(4)) corpus.push_back(std::move(a));
  return corpus;
}

}  // namespace torusobs
