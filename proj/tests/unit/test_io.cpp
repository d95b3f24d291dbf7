#include "oracles.hpp"

#include "torusobs/corpus.hpp"
#include "torusobs/io.hpp"

#include <doctest.h>

using namespace torusobs;

namespace {

std::string parse_message(const std::string& text) {
  try {
    parse_description(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("parse a description") {
  const auto d = parse_description(R"({"weights": [[1, 1, -1, -1]], "inverted": [1, 3], "seed": 7})");
  CHECK(d.weights == IntMatrix::from_rows({{1, 1, -1, -1}}));
  REQUIRE(d.inverted);
  CHECK(*d.inverted == IndexSet{0, 2});
  CHECK(d.seed == 7u);
  CHECK_FALSE(d.components);

  const auto r = parse_description(R"({"weights": [[1, 1]], "components": [[1], [2]]})");
  const WeightAction a = r.action();
  CHECK(a.reducible());
  CHECK(*a.components() == std::vector<IndexSet>{{0}, {1}});

  const auto big = parse_description(R"({"weights": [["123456789012345678901234567890", -1]]})");
  CHECK(big.weights(0, 0) == Integer("123456789012345678901234567890"));

  const auto empty = parse_description(R"({"weights": [], "n": 3})");
  CHECK(empty.weights.cols() == 3);
  CHECK(empty.weights.rows() == 0);
}

TEST_CASE("parse errors name the problem") {
  CHECK(contains(parse_message(R"({"weights": [[1, 0, -1, 0], [0, 1, 0]]})"), "row 2"));
  CHECK(contains(parse_message("{\"weights\": [[1, 2]\n ,, }"), "line 2"));
  CHECK(contains(parse_message(R"({"weights": [[1, 2]], "colour": 1})"), "colour"));
  CHECK(contains(parse_message(R"({"weights": [[1, 2]], "inverted": [3]})"), "inverted"));
  CHECK(contains(parse_message(R"({"weights": [[1, 2]], "components": [[1], [1, 2]]})"), "antichain"));
  CHECK(contains(parse_message(R"({"weights": [[1, 2.5]]})"), "weights"));
  CHECK(contains(parse_message(R"({"n": 2})"), "weights"));
}

TEST_CASE("descriptions round-trip through serialization") {
  std::mt19937_64 rng(81);
  std::vector<ActionDescription> samples;
  for (const auto& a : random_corpus({.seed = 82, .count = 150, .min_d = 0, .max_d = 3, .min_n = 1, .max_n = 6,
                                      .entry_bound = 9}))
    samples.push_back(describe_action(a));
  for (const auto& a : random_reducible_corpus({.seed = 83, .count = 50, .min_d = 1, .max_d = 3, .min_n = 2,
                                                 .max_n = 6, .entry_bound = 3}))
    samples.push_back(describe_action(a));
  for (auto& d : samples) {
    if (rng() % 2) d.seed = rng();
    if (rng() % 2) d.degree_bound = rng() % 20;
    if (rng() % 3 == 0 && d.weights.cols() > 0) d.inverted = IndexSet{rng() % d.weights.cols()};
    if (rng() % 5 == 0 && d.weights.rows() > 0) d.weights(0, 0) = Integer("-98765432109876543210");
    const std::string text = serialize_description(d);
    CHECK(parse_description(text) == d);
    CHECK(serialize_description(parse_description(text)) == text);
  }
}

TEST_CASE("corpus documents") {
  const auto list = parse_corpus(R"({"actions": [{"weights": [[1, -1]]}, {"weights": [[1, 1, 0]]}]})");
  REQUIRE(list.size() == 2);
  CHECK(list[1].weights == IntMatrix::from_rows({{1, 1, 0}}));

  const auto random = parse_corpus(
      R"({"random_corpus": {"seed": 5, "count": 12, "min_d": 1, "max_d": 2, "min_n": 2, "max_n": 3, "entry_bound": 2}})");
  const auto direct = random_corpus({.seed = 5, .count = 12, .min_d = 1, .max_d = 2, .min_n = 2, .max_n = 3,
                                     .entry_bound = 2});
  REQUIRE(random.size() == direct.size());
  for (std::size_t k = 0; k < direct.size(); ++k) CHECK(random[k].action() == direct[k]);

  CHECK(parse_corpus(R"({"weights": [[2, -3]]})").size() == 1);
}

TEST_CASE("exponent lists") {
  const auto rows = parse_exponent_list("# header\n1 0 1\n\n0 2 0\n", 3);
  CHECK(rows == std::vector<Exponents>{{1, 0, 1}, {0, 2, 0}});
  CHECK_THROWS_AS(parse_exponent_list("1 0\n", 3), ParseError);
  CHECK_THROWS_AS(parse_exponent_list("1 -1 0\n", 3), ParseError);
  CHECK_THROWS_AS(parse_exponent_list("1 x 0\n", 3), ParseError);
}
