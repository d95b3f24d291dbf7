#include "torusobs/report.hpp"

#include "torusobs/observability.hpp"
#include "torusobs/oracle.hpp"
#include "torusobs/quotient.hpp"

#include <functional>
#include <sstream>

namespace torusobs {

using nlohmann::ordered_json;

namespace {

ordered_json jint(const Integer& x) {
  if (x.fits_slong_p()) return ordered_json(x.get_si());
  return ordered_json(x.get_str());
}

ordered_json jvec(const IntVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(jint(x));
  return out;
}

ordered_json jexp(const Exponents& v) {
  ordered_json out = ordered_json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

ordered_json jset(const IndexSet& s) {
  ordered_json out = ordered_json::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

ordered_json jrows(const std::vector<IntVector>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rows) out.push_back(jvec(r));
  return out;
}

ordered_json jpoint(const RationalPoint& x) {
  ordered_json out = ordered_json::array();
  for (const auto& q : x) out.push_back(q.get_str());
  return out;
}

ordered_json action_block(const WeightAction& action) {
  ordered_json b;
  b["d"] = action.torus_rank();
  b["n"] = action.dimension();
  b["weights"] = jrows(action.weights().row_list());
  if (action.components()) {
    ordered_json comps = ordered_json::array();
    for (const auto& s : *action.components()) comps.push_back(jset(s));
    b["components"] = std::move(comps);
  }
  return b;
}

ordered_json positivity_block(const PositivityResult& r, std::size_t n) {
  ordered_json c;
  if (r.witness) {
    c["kind"] = "positive_relation";
    c["coefficients"] = jvec(r.witness->dense(n));
  } else if (r.dual) {
    c["kind"] = "destabilizer";
    c["lambda"] = jvec(*r.dual);
  }
  return c;
}

ordered_json routes_block(const RouteOutcomes& r) {
  ordered_json b;
  b["characterization"] = r.characterization;
  b["factorial"] = r.factorial;
  b["reductive"] = r.reductive;
  b["solvable"] = r.solvable;
  b["agree"] = r.agree();
  return b;
}

ordered_json verdict_block(const Verdict& v, std::size_t n) {
  ordered_json b;
  b["observable"] = v.observable;
  if (!v.per_component.empty()) {
    b["condition1"] = v.condition1;
    b["condition2"] = v.condition2;
    b["group_criterion"] = v.group_criterion;
    b["rule"] = "conjunction over components";
    b["routes"] = routes_block(v.routes);
    return b;
  }
  ordered_json c1;
  c1["holds"] = v.condition1;
  c1["certificate"] = {{"kernel_basis", jrows(v.kernel.basis())},
                       {"invariant_lattice_basis", jrows(v.invariants.basis())}};
  b["condition1"] = std::move(c1);
  ordered_json c2;
  c2["holds"] = v.condition2;
  c2["certificate"] = {{"socle_support", jset(v.socle_support)},
                       {"max_orbit_dim", v.max_orbit_dim},
                       {"socle_orbit_dim", v.socle_orbit_dim},
                       {"see", "socle"}};
  b["condition2"] = std::move(c2);
  ordered_json g;
  g["holds"] = v.group_criterion;
  g["certificate"] = positivity_block(v.group_certificate, n);
  b["group_criterion"] = std::move(g);
  b["routes"] = routes_block(v.routes);
  return b;
}

ordered_json socle_block(const WeightAction& action, const SocleData& s) {
  ordered_json b;
  b["support"] = jset(s.socle_support);
  b["full"] = s.socle_support.size() == action.dimension();
  b["witness"] = jvec(s.witness.dense(action.dimension()));
  ordered_json ideal = ordered_json::array();
  for (const auto& g : max_null_ideal(action).generators) ideal.push_back(jexp(g.entries));
  b["null_ideal"] = std::move(ideal);
  b["max_orbit_dim"] = s.max_orbit_dim;
  b["socle_orbit_dim"] = s.socle_orbit_dim;
  ordered_json excl = ordered_json::array();
  for (const auto& [j, y] : s.exclusion_certificates) excl.push_back({{"coordinate", j + 1}, {"functional", jvec(y)}});
  b["exclusion_certificates"] = std::move(excl);
  return b;
}

ordered_json basis_block(const HilbertBasis& hb) {
  ordered_json b;
  if (!hb.inverted.empty()) b["inverted"] = jset(hb.inverted);
  ordered_json units = ordered_json::array();
  for (const auto& u : hb.units) units.push_back(jexp(u.entries));
  if (!hb.inverted.empty()) b["units"] = std::move(units);
  ordered_json elems = ordered_json::array();
  for (const auto& e : hb.elements) elems.push_back(jexp(e.entries));
  b["hilbert_basis"] = std::move(elems);
  return b;
}

ordered_json invariants_block(const HilbertBasis& hb, const Verdict& v, std::size_t relation_degree) {
  ordered_json b = basis_block(hb);
  b["lattice_equal"] = lattice_equal(v.invariants, v.kernel);
  ordered_json rel;
  rel["max_generators_per_side"] = relation_degree;
  rel["truncated"] = true;
  ordered_json list = ordered_json::array();
  try {
    for (const auto& r : relations_up_to_degree(hb, relation_degree)) list.push_back({{"lhs", jexp(r.lhs)}, {"rhs", jexp(r.rhs)}});
    rel["list"] = std::move(list);
  } catch (const ResourceError& e) {
    rel["list"] = nullptr;
    rel["skipped"] = e.what();
  }
  b["relations"] = std::move(rel);
  return b;
}

ordered_json sampling_block(const FiberSampleReport& r, std::uint64_t seed) {
  ordered_json b;
  b["seed"] = seed;
  b["trials"] = r.trials;
  b["same_orbit_pairs"] = r.same_orbit_pairs;
  b["separated_pairs"] = r.separated_pairs;
  ordered_json viol = ordered_json::array();
  for (const auto& v : r.violations)
    viol.push_back({{"x", jpoint(v.x)}, {"y", jpoint(v.y)}, {"separated", v.separated}, {"same_orbit", v.equivalent}});
  b["violations"] = std::move(viol);
  return b;
}

ordered_json quotient_block(const WeightAction& action, const ReportOptions& o) {
  ordered_json b;
  const auto f = geometric_quotient_locus(action);
  b["geometric_quotient_f"] = f ? jexp(f->entries) : ordered_json(nullptr);
  if (!f) {
    b["sampling"] = nullptr;
  } else if (!o.sampling || o.trials == 0) {
    b["sampling"] = "skipped";
  } else {
    b["sampling"] = sampling_block(fibers_are_orbits_sample(action, *f, o.trials, o.seed), o.seed);
  }
  return b;
}

ordered_json oracle_block(const WeightAction& action, const HilbertBasis& hb, const ReportOptions& o) {
  ordered_json b;
  b["degree_bound"] = o.degree_bound;
  if (!o.referee) {
    b["status"] = "skipped";
    return b;
  }
  try {
    const RefereeReport r = referee_with_basis(action, o.degree_bound, hb);
    b["status"] = r.clean() ? "clean" : "discrepancies";
    b["discrepancies"] = r.discrepancies;
    b["provisional"] = r.provisional;
  } catch (const ResourceError& e) {
    b["status"] = "skipped";
    b["reason"] = e.what();
  }
  return b;
}

// Blocks for an irreducible action, appended to `out`.
void irreducible_blocks(ordered_json& out, const WeightAction& action, const ReportOptions& o) {
  const Verdict v = verdict(action);
  const SocleData s = socle(action);
  const HilbertBasis hb = hilbert_basis(action);
  out["verdict"] = verdict_block(v, action.dimension());
  out["socle"] = socle_block(action, s);
  out["invariants"] = invariants_block(hb, v, o.relation_degree);
  out["quotient"] = quotient_block(action, o);
  out["oracle"] = oracle_block(action, hb, o);
}

ordered_json localization_block(const WeightAction& action, const IndexSet& inverted) {
  ordered_json b;
  b["inverted"] = jset(inverted);
  const PositivityResult r = strict_positive_kernel(action.weights(), inverted);
  if (!r.witness) {
    b["valid"] = false;
    b["reason"] = "no invariant monomial has this support";
    b["certificate"] = positivity_block(r, action.dimension());
    return b;
  }
  const ExponentVector f = monomial([&] {
    Exponents e(action.dimension(), 0);
    const IntVector dense = r.witness->dense(action.dimension());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = dense[i].get_si();
    return e;
  }());
  b["valid"] = true;
  b["f"] = jexp(f.entries);
  const Verdict lv = verdict_localized(action, f);
  b["verdict"] = verdict_block(lv, action.dimension());
  b["invariants"] = basis_block(hilbert_basis(action, inverted));
  return b;
}

}  // namespace

ReportOptions merge_options(ReportOptions base, const ActionDescription& desc) {
  if (desc.seed) base.seed = *desc.seed;
  if (desc.degree_bound) base.degree_bound = *desc.degree_bound;
  return base;
}

ordered_json envelope(const char* kind, ordered_json body) {
  ordered_json out;
  out["schema"] = kReportSchema;
  out["tool_version"] = kToolVersion;
  out["kind"] = kind;
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

ordered_json mask_tool_version(ordered_json report) {
  if (report.contains("tool_version")) report["tool_version"] = "<masked>";
  return report;
}

ordered_json analysis_report(const ActionDescription& desc, const ReportOptions& options) {
  const WeightAction action = desc.action();
  ordered_json body;
  body["action"] = action_block(action);
  if (!action.reducible()) {
    irreducible_blocks(body, action, options);
    if (desc.inverted && !desc.inverted->empty()) body["localization"] = localization_block(action, *desc.inverted);
    return envelope("analysis", std::move(body));
  }
  const Verdict v = verdict(action);
  body["verdict"] = verdict_block(v, action.dimension());
  ordered_json comps = ordered_json::array();
  for (const auto& support : *action.components()) {
    const WeightAction part = action.restricted_to(support);
    ordered_json c;
    c["support"] = jset(support);
    c["action"] = action_block(part);
    irreducible_blocks(c, part, options);
    comps.push_back(std::move(c));
  }
  body["components"] = std::move(comps);
  return envelope("analysis", std::move(body));
}

ordered_json hilbert_report(const WeightAction& action, const IndexSet& inverted) {
  ordered_json body;
  body["action"] = action_block(action);
  if (!action.reducible()) {
    body["invariants"] = basis_block(hilbert_basis(action, inverted));
  } else {
    ordered_json comps = ordered_json::array();
    for (const auto& support : *action.components())
      comps.push_back({{"support", jset(support)}, {"invariants", basis_block(hilbert_basis(action.restricted_to(support)))}});
    body["components"] = std::move(comps);
  }
  return envelope("hilbert", std::move(body));
}

ordered_json socle_report(const WeightAction& action) {
  ordered_json body;
  body["action"] = action_block(action);
  if (!action.reducible()) {
    body["socle"] = socle_block(action, socle(action));
  } else {
    ordered_json comps = ordered_json::array();
    for (const auto& support : *action.components()) {
      const WeightAction part = action.restricted_to(support);
      comps.push_back({{"support", jset(support)}, {"socle", socle_block(part, socle(part))}});
    }
    body["components"] = std::move(comps);
  }
  return envelope("socle", std::move(body));
}

ordered_json referee_report(const WeightAction& action, std::size_t degree_bound) {
  ordered_json body;
  body["action"] = action_block(action);
  ReportOptions o;
  o.degree_bound = degree_bound;
  if (!action.reducible()) {
    body["oracle"] = oracle_block(action, hilbert_basis(action), o);
  } else {
    ordered_json comps = ordered_json::array();
    for (const auto& support : *action.components()) {
      const WeightAction part = action.restricted_to(support);
      comps.push_back({{"support", jset(support)}, {"oracle", oracle_block(part, hilbert_basis(part), o)}});
    }
    body["components"] = std::move(comps);
  }
  return envelope("referee", std::move(body));
}

ordered_json referee_report(const WeightAction& action, std::size_t degree_bound,
                             const std::vector<Exponents>& claimed_basis) {
  if (action.reducible()) throw std::invalid_argument("referee --basis needs an irreducible action");
  HilbertBasis basis{action, {}, {}, {}};
  for (const auto& e : claimed_basis) {
    if (e.size() != action.dimension()) throw std::invalid_argument("claimed basis element has the wrong length");
    basis.elements.push_back(monomial(e));
  }
  sort_graded_lex(basis.elements);
  ordered_json body;
  body["action"] = action_block(action);
  ReportOptions o;
  o.degree_bound = degree_bound;
  body["oracle"] = oracle_block(action, basis, o);
  return envelope("referee", std::move(body));
}

ordered_json referee_corpus_report(const std::vector<ActionDescription>& corpus, std::size_t degree_bound) {
  ordered_json body;
  body["degree_bound"] = degree_bound;
  body["instances"] = corpus.size();
  std::size_t clean = 0, skipped = 0;
  ordered_json flagged = ordered_json::array();
  for (const auto& desc : corpus) {
    const ordered_json single = referee_report(desc.action(), degree_bound);
    bool ok = true, skip = false;
    auto inspect = [&](const ordered_json& block) {
      ok = ok && block["status"] != "discrepancies";
      skip = skip || block["status"] == "skipped";
    };
    if (single.contains("oracle")) inspect(single["oracle"]);
    if (single.contains("components"))
      for (const auto& c : single["components"]) inspect(c["oracle"]);
    if (ok && !skip) ++clean;
    if (skip) ++skipped;
    if (!ok || skip) {
      ordered_json entry = single;
      entry.erase("schema");
      entry.erase("tool_version");
      entry.erase("kind");
      flagged.push_back(std::move(entry));
    }
  }
  body["clean"] = clean;
  body["skipped"] = skipped;
  body["flagged"] = std::move(flagged);
  return envelope("referee-corpus", std::move(body));
}

bool is_corpus_document(const std::string& text) {
  try {
    const auto j = ordered_json::parse(text);
    return j.is_object() && (j.contains("actions") || j.contains("random_corpus"));
  } catch (const ordered_json::exception&) {
    return false;
  }
}

std::vector<std::string> skipped_referee_reasons(const ordered_json& report) {
  std::vector<std::string> out;
  auto visit = [&](const ordered_json& block) {
    if (block.value("status", "") == "skipped") out.push_back(block.value("reason", "referee skipped"));
  };
  std::function<void(const ordered_json&)> walk = [&](const ordered_json& node) {
    if (node.contains("oracle")) visit(node["oracle"]);
    for (const char* key : {"components", "flagged"})
      if (node.contains(key))
        for (const auto& child : node[key]) walk(child);
  };
  walk(report);
  return out;
}

ordered_json quotient_report(const WeightAction& action, const std::optional<RationalPoint>& point,
                             const ReportOptions& options) {
  if (action.reducible()) throw std::invalid_argument("quotient: give an irreducible action (one component)");
  ordered_json body;
  body["action"] = action_block(action);
  const QuotientMap map(action);
  ordered_json gens = ordered_json::array();
  for (const auto& g : map.generators.elements) gens.push_back(jexp(g.entries));
  body["generators"] = std::move(gens);
  body["quotient"] = quotient_block(action, options);
  if (point) {
    if (point->size() != action.dimension())
      throw std::invalid_argument("quotient: point has " + std::to_string(point->size()) + " coordinates, expected " +
                                  std::to_string(action.dimension()));
    ordered_json p;
    p["x"] = jpoint(*point);
    p["image"] = jpoint(evaluate(map, *point));
    const IndexSet supp = support_of(*point);
    const ClosedOrbitResult c = is_closed_orbit(action, supp);
    p["orbit_dimension"] = orbit_dimension(action, supp);
    p["closed_orbit"] = c.closed;
    if (c.witness) p["certificate"] = {{"kind", "positive_relation"}, {"coefficients", jvec(c.witness->dense(action.dimension()))}};
    if (c.destabilizer) p["certificate"] = {{"kind", "destabilizer"}, {"lambda", jvec(*c.destabilizer)}};
    body["point"] = std::move(p);
  }
  return envelope("quotient", std::move(body));
}

namespace {

std::string show_json_vectors(const ordered_json& list) {
  std::string out;
  for (const auto& v : list) {
    if (!out.empty()) out += " ";
    out += v.dump();
  }
  return out.empty() ? "(none)" : out;
}

void render_irreducible(std::ostringstream& os, const ordered_json& r, const std::string& indent) {
  if (r.contains("verdict")) {
    const auto& v = r["verdict"];
    os << indent << "observable: " << (v["observable"].get<bool>() ? "yes" : "no") << "\n";
    auto holds = [](const ordered_json& x) { return x.is_boolean() ? x.get<bool>() : x["holds"].get<bool>(); };
    os << indent << "condition 1 (invariants generate the kernel lattice): " << (holds(v["condition1"]) ? "yes" : "no")
       << "\n";
    os << indent << "condition 2 (closed orbits of maximal dimension exist): " << (holds(v["condition2"]) ? "yes" : "no")
       << "\n";
    os << indent << "E_G(X) is a group: " << (holds(v["group_criterion"]) ? "yes" : "no") << "\n";
    os << indent << "routes agree: " << (v["routes"]["agree"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (r.contains("socle")) {
    const auto& s = r["socle"];
    os << indent << "socle support: " << s["support"].dump() << "  witness " << s["witness"].dump() << "\n";
    os << indent << "null ideal generators: " << show_json_vectors(s["null_ideal"]) << "\n";
    os << indent << "orbit dimensions: socle " << s["socle_orbit_dim"] << ", generic " << s["max_orbit_dim"] << "\n";
  }
  if (r.contains("invariants")) {
    const auto& i = r["invariants"];
    if (i.contains("units")) os << indent << "units: " << show_json_vectors(i["units"]) << "\n";
    os << indent << "hilbert basis: " << show_json_vectors(i["hilbert_basis"]) << "\n";
    if (i.contains("relations") && i["relations"]["list"].is_array()) {
      os << indent << "relations (at most " << i["relations"]["max_generators_per_side"] << " generators per side):";
      if (i["relations"]["list"].empty()) os << " (none)";
      os << "\n";
      for (const auto& rel : i["relations"]["list"])
        os << indent << "  " << rel["lhs"].dump() << " = " << rel["rhs"].dump() << "\n";
    }
  }
  if (r.contains("quotient")) {
    const auto& q = r["quotient"];
    os << indent << "geometric quotient on X_f, f = "
       << (q["geometric_quotient_f"].is_null() ? std::string("(none)") : q["geometric_quotient_f"].dump()) << "\n";
    if (q["sampling"].is_object())
      os << indent << "fiber sampling: " << q["sampling"]["trials"] << " pairs, " << q["sampling"]["violations"].size()
         << " violations\n";
  }
  if (r.contains("oracle")) {
    const auto& o = r["oracle"];
    os << indent << "referee (bound " << o["degree_bound"] << "): " << o["status"].get<std::string>() << "\n";
    if (o.contains("discrepancies"))
      for (const auto& d : o["discrepancies"]) os << indent << "  ! " << d.get<std::string>() << "\n";
  }
}

}  // namespace

std::string render_text(const ordered_json& report) {
  std::ostringstream os;
  os << "torusobs " << report.value("tool_version", "") << " " << report.value("kind", "") << "\n";
  if (report.contains("action")) {
    const auto& a = report["action"];
    os << "action: d=" << a["d"] << " n=" << a["n"] << " weights=" << a["weights"].dump();
    if (a.contains("components")) os << " components=" << a["components"].dump();
    os << "\n";
  }
  render_irreducible(os, report, "");
  if (report.contains("localization")) {
    const auto& l = report["localization"];
    os << "localization at " << l["inverted"].dump() << ": ";
    if (!l["valid"].get<bool>()) {
      os << l["reason"].get<std::string>() << "\n";
    } else {
      os << "f = " << l["f"].dump() << "\n";
      render_irreducible(os, l, "  ");
    }
  }
  if (report.contains("components")) {
    for (const auto& c : report["components"]) {
      os << "component " << c["support"].dump() << ":\n";
      render_irreducible(os, c, "  ");
    }
  }
  if (report.contains("bounded_enumeration")) {
    const auto& b = report["bounded_enumeration"];
    os << "irreducible invariants up to degree " << b["degree_bound"] << ": "
       << show_json_vectors(b["irreducible_invariants"]) << "\n";
  }
  if (report.contains("generators")) os << "generators: " << show_json_vectors(report["generators"]) << "\n";
  if (report.contains("point")) {
    const auto& p = report["point"];
    os << "point " << p["x"].dump() << " maps to " << p["image"].dump() << "; orbit dimension " << p["orbit_dimension"]
       << ", closed: " << (p["closed_orbit"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (report.value("kind", "") == "referee-corpus") {
    os << "referee (bound " << report["degree_bound"] << "): " << report["clean"] << " of " << report["instances"]
       << " instances clean, " << report["skipped"] << " skipped\n";
    for (const auto& f : report["flagged"]) {
      const auto& a = f["action"];
      os << "action: d=" << a["d"] << " n=" << a["n"] << " weights=" << a["weights"].dump() << "\n";
      render_irreducible(os, f, "  ");
      if (f.contains("components"))
        for (const auto& c : f["components"]) {
          os << "  component " << c["support"].dump() << ":\n";
          render_irreducible(os, c, "    ");
        }
    }
  }
  return os.str();
}

}  // namespace torusobs
