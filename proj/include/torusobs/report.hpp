#pragma once

// Analysis reports for the command-line front end. The JSON form is the
// machine-readable contract; the text form is a rendering of the same data.

#include "torusobs/io.hpp"
#include "torusobs/orbit_geometry.hpp"

#include <json.hpp>

namespace torusobs {

inline constexpr const char* kReportSchema = "torusobs.report/1";

struct ReportOptions {
  std::size_t degree_bound = 8;     // referee bound
  std::size_t relation_degree = 2;  // generators per side in listed relations
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  bool sampling = true;
  bool referee = true;
};

/// Applies the optional seed and degree_bound fields of the description.
ReportOptions merge_options(ReportOptions base, const ActionDescription& desc);

nlohmann::ordered_json analysis_report(const ActionDescription& desc, const ReportOptions& options);
std::string render_text(const nlohmann::ordered_json& report);

nlohmann::ordered_json hilbert_report(const WeightAction& action, const IndexSet& inverted);
nlohmann::ordered_json socle_report(const WeightAction& action);
nlohmann::ordered_json referee_report(const WeightAction& action, std::size_t degree_bound);
/// Referees every action of a corpus; only the unclean ones are listed in full.
nlohmann::ordered_json referee_corpus_report(const std::vector<ActionDescription>& corpus, std::size_t degree_bound);
/// Referees a claimed Hilbert basis of an irreducible action instead of the computed one.
nlohmann::ordered_json referee_report(const WeightAction& action, std::size_t degree_bound,
                                      const std::vector<Exponents>& claimed_basis);
nlohmann::ordered_json quotient_report(const WeightAction& action, const std::optional<RationalPoint>& point,
                                       const ReportOptions& options);

/// True when the text is a corpus document ("actions" or "random_corpus") rather
/// than a single description.
bool is_corpus_document(const std::string& text);

/// Oracle blocks of a referee report whose status is "skipped", paired with the reason.
std::vector<std::string> skipped_referee_reasons(const nlohmann::ordered_json& report);

/// Wraps a block with the schema and tool version fields.
nlohmann::ordered_json envelope(const char* kind, nlohmann::ordered_json body);

/// Replaces the tool_version value so golden comparisons survive releases.
nlohmann::ordered_json mask_tool_version(nlohmann::ordered_json report);

}  // namespace torusobs
