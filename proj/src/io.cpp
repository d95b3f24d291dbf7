#include "torusobs/io.hpp"

#include "torusobs/corpus.hpp"

#include <json.hpp>

#include <sstream>

namespace torusobs {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Integer parse_integer(const json& v, const std::string& field) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0) throw ParseError(field + ": \"" + s + "\" is not a decimal integer");
    return out;
  }
  throw ParseError(field + ": expected an integer, got " + std::string(v.type_name()));
}

std::size_t parse_count(const json& v, const std::string& field) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw ParseError(field + ": expected a nonnegative integer");
  return v.get<std::size_t>();
}

IndexSet parse_indices(const json& v, const std::string& field, std::size_t n) {
  if (!v.is_array()) throw ParseError(field + ": expected an array of 1-based indices");
  IndexSet s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string where = field + "[" + std::to_string(k + 1) + "]";
    const std::size_t i = parse_count(v[k], where);
    if (i < 1 || i > n) throw ParseError(where + ": index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    s.push_back(i - 1);
  }
  IndexSet sorted = normalize_index_set(s);
  if (sorted.size() != s.size()) throw ParseError(field + ": repeated index");
  return sorted;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
}

ActionDescription from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("action description must be a JSON object");
  static const std::vector<std::string> known = {"weights", "n", "components", "inverted", "seed", "degree_bound"};
  for (const auto& [key, _] : doc.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ParseError("unknown field \"" + key + "\"");
  if (!doc.contains("weights")) throw ParseError("missing field \"weights\"");
  const json& rows = doc["weights"];
  if (!rows.is_array()) throw ParseError("weights: expected an array of rows");

  std::optional<std::size_t> n;
  if (doc.contains("n")) n = parse_count(doc["n"], "n");
  std::vector<IntVector> parsed;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string where = "weights: row " + std::to_string(r + 1);
    if (!rows[r].is_array()) throw ParseError(where + " is not an array");
    if (!n) n = rows[r].size();
    if (rows[r].size() != *n)
      throw ParseError(where + " has " + std::to_string(rows[r].size()) + " entries, expected " + std::to_string(*n));
    IntVector row;
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      row.push_back(parse_integer(rows[r][c], where + ", entry " + std::to_string(c + 1)));
    parsed.push_back(std::move(row));
  }
  if (!n) throw ParseError("weights: no rows; give \"n\" for the trivial torus");

  ActionDescription desc;
  desc.weights = IntMatrix::from_rows(parsed, *n);
  if (doc.contains("components")) {
    const json& comps = doc["components"];
    if (!comps.is_array() || comps.empty()) throw ParseError("components: expected a nonempty array of index lists");
    std::vector<IndexSet> list;
    for (std::size_t k = 0; k < comps.size(); ++k)
      list.push_back(parse_indices(comps[k], "components[" + std::to_string(k + 1) + "]", *n));
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = 0; b < list.size(); ++b)
        if (a != b && is_subset(list[a], list[b]))
          throw ParseError("components: component " + std::to_string(a + 1) + " is contained in component " +
                           std::to_string(b + 1) + " (supports must form an antichain)");
    desc.components = std::move(list);
  }
  if (doc.contains("inverted")) desc.inverted = parse_indices(doc["inverted"], "inverted", *n);
  if (doc.contains("seed")) desc.seed = static_cast<std::uint64_t>(parse_count(doc["seed"], "seed"));
  if (doc.contains("degree_bound")) desc.degree_bound = parse_count(doc["degree_bound"], "degree_bound");
  return desc;
}

ordered_json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return ordered_json(x.get_si());
  return ordered_json(x.get_str());
}

ordered_json indices_json(const IndexSet& s) {
  ordered_json out = ordered_json::array();
  for (std::size_t i : s) out.push_back(i + 1);
  return out;
}

}  // namespace

WeightAction ActionDescription::action() const { return WeightAction(weights, components); }

ActionDescription parse_description(const std::string& text) { return from_json(parse_json(text)); }

std::string serialize_description(const ActionDescription& desc) {
  ordered_json doc;
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < desc.weights.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < desc.weights.cols(); ++c) row.push_back(integer_json(desc.weights(r, c)));
    rows.push_back(std::move(row));
  }
  doc["weights"] = std::move(rows);
  doc["n"] = desc.weights.cols();
  if (desc.components) {
    ordered_json comps = ordered_json::array();
    for (const auto& s : *desc.components) comps.push_back(indices_json(s));
    doc["components"] = std::move(comps);
  }
  if (desc.inverted) doc["inverted"] = indices_json(*desc.inverted);
  if (desc.seed) doc["seed"] = *desc.seed;
  if (desc.degree_bound) doc["degree_bound"] = *desc.degree_bound;
  return doc.dump();
}

std::vector<ActionDescription> parse_corpus(const std::string& text) {
  const json doc = parse_json(text);
  std::vector<ActionDescription> out;
  if (doc.is_object() && doc.contains("actions")) {
    const json& list = doc["actions"];
    if (!list.is_array()) throw ParseError("actions: expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      try {
        out.push_back(from_json(list[k]));
      } catch (const ParseError& e) {
        throw ParseError("actions[" + std::to_string(k + 1) + "]: " + e.what());
      }
    }
    return out;
  }
  if (doc.is_object() && doc.contains("random_corpus")) {
    const json& g = doc["random_corpus"];
    CorpusSpec spec;
    auto get = [&](const char* key, std::size_t& field) {
      if (g.contains(key)) field = parse_count(g[key], std::string("random_corpus.") + key);
    };
    std::size_t seed = spec.seed, bound = static_cast<std::size_t>(spec.entry_bound);
    get("seed", seed);
    get("count", spec.count);
    get("min_d", spec.min_d);
    get("max_d", spec.max_d);
    get("min_n", spec.min_n);
    get("max_n", spec.max_n);
    get("entry_bound", bound);
    spec.seed = seed;
    spec.entry_bound = static_cast<long>(bound);
    if (spec.min_d > spec.max_d || spec.min_n > spec.max_n) throw ParseError("random_corpus: empty size range");
    for (const auto& a : random_corpus(spec)) out.push_back(describe_action(a));
    if (g.contains("sign_patterns"))
      for (const auto& a : sign_pattern_sweep(parse_count(g["sign_patterns"], "random_corpus.sign_patterns")))
        out.push_back(describe_action(a));
    return out;
  }
  out.push_back(from_json(doc));
  return out;
}

ActionDescription describe_action(const WeightAction& action) {
  ActionDescription d;
  d.weights = action.weights();
  d.components = action.components();
  return d;
}

std::vector<Exponents> parse_exponent_list(const std::string& text, std::size_t n) {
  std::vector<Exponents> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    Exponents e;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || v < 0)
        throw ParseError("line " + std::to_string(line_no) + ": \"" + token + "\" is not a nonnegative integer");
      e.push_back(v);
    }
    if (e.size() != n)
      throw ParseError("line " + std::to_string(line_no) + ": " + std::to_string(e.size()) + " entries, expected " +
                       std::to_string(n));
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace torusobs
