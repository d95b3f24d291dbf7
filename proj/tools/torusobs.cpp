// torusobs: observability of diagonal torus actions on affine space.
//
// Exit codes: 0 success (verdicts are data), 1 referee discrepancies,
// 2 input or parse error, 3 resource ceiling exceeded.

#include "torusobs/observability.hpp"
#include "torusobs/oracle.hpp"
#include "torusobs/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace torusobs;

namespace {

constexpr int kExitDiscrepancy = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::string read_input(const std::string& source) {
  if (source == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return source;
  std::ifstream in(source, std::ios::binary);
  if (!in) throw ParseError("cannot open input file \"" + source + "\"");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

RationalPoint parse_point(const std::string& text, std::size_t n) {
  RationalPoint x;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational q;
    if (item.empty() || q.set_str(item, 10) != 0 || q.get_den() == 0)
      throw ParseError("--point: \"" + item + "\" is not a rational number");
    q.canonicalize();
    x.push_back(q);
  }
  if (x.size() != n)
    throw ParseError("--point: " + std::to_string(x.size()) + " coordinates given, expected " + std::to_string(n));
  return x;
}

void emit(const nlohmann::ordered_json& report, bool json) {
  if (json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << render_text(report);
}

bool referee_clean(const nlohmann::ordered_json& report) {
  if (report.contains("flagged")) {
    for (const auto& f : report["flagged"])
      if (!referee_clean(f)) return false;
    return true;
  }
  auto clean = [](const nlohmann::ordered_json& block) { return block["status"] != "discrepancies"; };
  if (report.contains("oracle")) return clean(report["oracle"]);
  bool ok = true;
  for (const auto& c : report["components"]) ok = ok && clean(c["oracle"]);
  return ok;
}

// Discrepancies outrank skipped checks: a skipped instance says nothing
// about the others.
int referee_exit(const nlohmann::ordered_json& report) {
  if (!referee_clean(report)) {
    std::cerr << "torusobs: referee found discrepancies\n";
    return kExitDiscrepancy;
  }
  const auto skipped = skipped_referee_reasons(report);
  if (!skipped.empty()) {
    std::cerr << "torusobs: resource limit: " << skipped.front() << "\n";
    return kExitResource;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Observability of diagonal torus actions on affine space"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  bool json = false;
  std::optional<std::size_t> degree_bound;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 100;
  bool no_sampling = false;
  std::size_t relation_degree = 2;
  std::string input;
  std::string point_text;
  std::string basis_path;
  bool with_oracle = false;
  bool golden = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", input, "action description: file path, '-' for stdin, or an inline JSON document")
        ->required();
    sub->add_flag("--json", json, "emit one machine-readable JSON document");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full report: verdict, socle, invariants, quotient, referee");
  common(analyze);
  analyze->add_option("--degree-bound", degree_bound, "referee degree bound (default 8)");
  analyze->add_option("--seed", seed, "seed for fiber sampling (default 1)");
  analyze->add_option("--trials", trials, "number of sampled point pairs");
  analyze->add_flag("--no-sampling", no_sampling, "skip fiber sampling");
  analyze->add_option("--relation-degree", relation_degree, "generators per side in listed relations");

  CLI::App* ref = app.add_subcommand("referee", "brute-force cross-check; exit 1 on any discrepancy");
  common(ref);
  ref->add_option("--degree-bound", degree_bound, "enumeration bound (default 8)");
  ref->add_option("--basis", basis_path, "referee this Hilbert basis (golden text format) instead of the computed one");

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert basis of the invariant monoid");
  common(hilbert);
  hilbert->add_flag("--oracle", with_oracle, "compare with bounded brute-force enumeration");
  hilbert->add_flag("--golden", golden, "print the frozen golden text format");
  hilbert->add_option("--degree-bound", degree_bound, "bound for --oracle and --golden (default 8)");

  CLI::App* soc = app.add_subcommand("socle", "socle support, witness and null ideal");
  common(soc);
  soc->add_flag("--golden", golden, "print the frozen golden text format");

  CLI::App* quot = app.add_subcommand("quotient", "quotient map, geometric locus and fiber sampling");
  common(quot);
  quot->add_option("--point", point_text, "comma-separated rational coordinates, e.g. 1,-2/3");
  quot->add_option("--seed", seed, "seed for fiber sampling (default 1)");
  quot->add_option("--trials", trials, "number of sampled point pairs");
  quot->add_flag("--no-sampling", no_sampling, "skip fiber sampling");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string text = read_input(input);
    if (ref->parsed() && is_corpus_document(text)) {
      if (!basis_path.empty()) throw ParseError("--basis needs a single action, not a corpus");
      const auto report = referee_corpus_report(parse_corpus(text), degree_bound.value_or(kDefaultOracleBound));
      emit(report, json);
      return referee_exit(report);
    }
    const ActionDescription desc = parse_description(text);
    WeightAction action;
    try {
      action = desc.action();
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    ReportOptions options = merge_options({}, desc);
    if (degree_bound) options.degree_bound = *degree_bound;
    if (seed) options.seed = *seed;
    options.trials = trials;
    options.sampling = !no_sampling;
    options.relation_degree = relation_degree;
    const IndexSet inverted = desc.inverted.value_or(IndexSet{});

    if (analyze->parsed()) {
      emit(analysis_report(desc, options), json);
      return 0;
    }
    if (ref->parsed()) {
      const auto report =
          basis_path.empty()
              ? referee_report(action, options.degree_bound)
              : referee_report(action, options.degree_bound,
                               parse_exponent_list(read_input(basis_path), action.dimension()));
      emit(report, json);
      return referee_exit(report);
    }
    if (hilbert->parsed()) {
      if (golden) {
        if (action.reducible()) throw ParseError("--golden needs an irreducible action");
        std::cout << golden_basis(action, options.degree_bound, hilbert_basis(action).elements);
        return 0;
      }
      auto report = hilbert_report(action, inverted);
      if (with_oracle) {
        if (action.reducible()) throw ParseError("--oracle needs an irreducible action");
        const auto table = enumerate(action, options.degree_bound);
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& m : bounded_irreducible_invariants(table)) list.push_back(m.entries);
        report["bounded_enumeration"] = {{"degree_bound", options.degree_bound}, {"irreducible_invariants", list}};
      }
      emit(report, json);
      return 0;
    }
    if (soc->parsed()) {
      if (golden) {
        if (action.reducible()) throw ParseError("--golden needs an irreducible action");
        std::cout << golden_socle(action, socle(action));
        return 0;
      }
      emit(socle_report(action), json);
      return 0;
    }
    if (quot->parsed()) {
      std::optional<RationalPoint> point;
      if (!point_text.empty()) point = parse_point(point_text, action.dimension());
      emit(quotient_report(action, point, options), json);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "torusobs: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "torusobs: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    std::cerr << "torusobs: resource limit: " << e.what() << "\n";
    return kExitResource;
  }
  return 0;
}
