// Named invariants of an ideal as JSON values, the invariants report, golden
// record comparison, and the markdown renderings used by the command line.

#ifndef FIBERLAB_REPORT_HPP
#define FIBERLAB_REPORT_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fiberlab/crosschecks.hpp"
#include "fiberlab/parser.hpp"
#include "fiberlab/predicates.hpp"

namespace fiberlab {

/// Marker for a value that could not be computed within the bounds.
inline const json& unknown_value() {
  static const json u = "unknown";
  return u;
}

inline bool is_unknown(const json& v) { return v == unknown_value(); }

namespace detail {

template <class T>
json or_unknown(const std::optional<T>& v) {
  return v ? json(*v) : unknown_value();
}

inline json depth_json(const DepthResult* d) {
  if (!d) return unknown_value();
  return d->exact ? json(d->depth) : unknown_value();
}

inline json cm_json(const CMResult* c) {
  if (!c || !c->exact) return unknown_value();
  return c->cohen_macaulay;
}

inline json verdict_json(const PredicateReport& r) {
  return r.verdict == Verdict::unknown ? unknown_value() : json(r.verdict == Verdict::yes);
}

/// A per-seed value reported once when all seeds agree.
template <class Fn>
json agreed(const std::vector<std::uint64_t>& seeds, Fn&& per_seed) {
  json first;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    json v = per_seed(seeds[i]);
    if (i == 0) first = v;
    else if (v != first) return "unstable across seeds";
  }
  return first;
}

}  // namespace detail

/// Names accepted by evaluate_field, in report order.
inline const std::vector<std::string>& field_names() {
  static const std::vector<std::string> names{
      "mu", "degree", "height", "dimension", "hilbert_numerator", "multiplicity", "betti",
      "projective_dimension", "perfect", "linear_rank", "linearly_presented", "gen_ci", "gs2", "gs3", "gs4",
      "dim_symmetric_algebra", "analytic_spread", "fiber_relation_degrees", "fiber_multiplicity", "fiber_depth",
      "fiber_cm", "fiber_regularity", "indeg", "rees_cm", "rees_dimension", "gr_depth", "gr_plus_grade", "reduction_number",
      "vv", "vv_first_failure", "tight_n1", "adjusted", "mult_formulas", "map_degree"};
  return names;
}

/// One named invariant; "unknown" when a bound stopped it, null when it does
/// not apply to this ideal.
template <class F>
json evaluate_field(Analysis<F>& a, const std::string& name) {
  const auto& seeds = a.settings().seeds;
  const bool eq = a.equigenerated();
  if (name == "mu") return a.mu();
  if (name == "degree") return eq ? json(a.degree()) : json(nullptr);
  if (name == "height") return a.height();
  if (name == "dimension") return a.dimension();
  if (name == "hilbert_numerator") return int_poly_json(a.hilbert().reduced_numerator());
  if (name == "multiplicity") return to_json_number(a.multiplicity());
  if (name == "betti") return a.betti().complete ? betti_json(a.betti()) : unknown_value();
  if (name == "projective_dimension") return detail::or_unknown(a.projective_dimension());
  if (name == "perfect") return detail::verdict_json(check_perfect(a));
  if (name == "linear_rank") return detail::or_unknown(a.linear_rank_value());
  if (name == "linearly_presented") return detail::or_unknown(a.linearly_presented());
  if (name == "gen_ci") return a.height() == 2 ? detail::verdict_json(check_generically_ci(a)) : json(nullptr);
  if (name == "gs2" || name == "gs3" || name == "gs4") return detail::verdict_json(check_gs(a, name.back() - '0'));
  if (name == "dim_symmetric_algebra") return detail::or_unknown(symmetric_algebra_dimension(a));
  if (name == "mult_formulas" || name == "map_degree") {
    auto r = run_predicate(a, name == "mult_formulas" ? "mult-formulas" : "map-degree", {});
    return r.verdict == Verdict::unknown ? json(nullptr) : json(r.verdict == Verdict::yes);
  }
  // Everything below concerns blow-up algebras of equigenerated ideals.
  if (!eq) return nullptr;
  if (name == "analytic_spread") return detail::or_unknown(a.analytic_spread().value);
  if (name == "fiber_relation_degrees") return detail::or_unknown(a.fiber_relation_degrees());
  if (name == "fiber_multiplicity") {
    auto e = a.fiber_multiplicity();
    return e ? to_json_number(*e) : unknown_value();
  }
  if (name == "fiber_depth") return detail::depth_json(a.fiber_depth());
  if (name == "fiber_cm") return detail::cm_json(a.fiber_cm());
  if (name == "fiber_regularity") {
    const BettiTable* b = a.fiber_betti();
    return b && b->complete ? json(b->regularity()) : unknown_value();
  }
  if (name == "indeg") {
    auto r = check_indeg(a);
    return r.certificate.contains("indeg") && r.verdict != Verdict::unknown ? r.certificate["indeg"] : unknown_value();
  }
  if (name == "rees_cm") return detail::cm_json(a.rees_cm());
  if (name == "rees_dimension") return detail::or_unknown(a.rees_dimension());
  if (name == "gr_depth") return detail::depth_json(a.gr_depth());
  if (name == "gr_plus_grade") {
    // Generic combinations of the y's form a maximal regular sequence in gr_+.
    if (!a.rees()) return unknown_value();
    return detail::agreed(seeds, [&](std::uint64_t s) {
      json steps = json::array();
      if (!gr_regular_sequence(a, s, a.mu(), steps)) return unknown_value();
      int regular = 0;
      for (const auto& st : steps) regular += st["regular"].get<bool>();
      return json(regular);
    });
  }
  if (name == "reduction_number")
    return detail::agreed(seeds, [&](std::uint64_t s) { return detail::or_unknown(a.reduction(s).value); });
  if (name == "vv") return detail::verdict_json(check_vv(a));
  if (name == "vv_first_failure")
    return detail::agreed(seeds, [&](std::uint64_t s) {
      VVData d = valabrega_valla(a, s, a.n_max());
      return d.first_failure ? json(*d.first_failure) : json(nullptr);
    });
  if (name == "tight_n1") return detail::verdict_json(check_tight(a, 1));
  if (name == "adjusted") return detail::verdict_json(check_adjusted(a));
  throw std::invalid_argument("unknown field '" + name + "'");
}

// ---------------------------------------------------------------- inputs

struct LoadedText {
  std::string path, text;
};

inline LoadedText read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return {path, ss.str()};
}

/// Runs fn(analysis) over the field chosen by `field` (or the file's own).
template <class Fn>
auto with_analysis(const ParsedInput& parsed, const std::optional<FieldSpec>& field, const Settings& settings,
                   Fn&& fn) {
  FieldSpec spec = field ? *field : field_of(parsed);
  if (spec.kind == FieldKind::rationals) {
    auto in = build_input(parsed, RationalField());
    Analysis<RationalField> a(in.ring, in.generators, settings, in.matrix);
    return fn(a);
  }
  auto in = build_input(parsed, PrimeField(spec.characteristic));
  Analysis<PrimeField> a(in.ring, in.generators, settings, in.matrix);
  return fn(a);
}

template <class F>
json input_json(Analysis<F>& a, const std::string& path) {
  return {{"file", path},
          {"field", a.ring()->field().spec().to_string()},
          {"variables", a.ring()->names()},
          {"minimal_generators", polys_json(a.generators())},
          {"hash", a.hash()}};
}

template <class F>
json invariants_report(Analysis<F>& a, const std::string& path) {
  json values = json::object();
  for (const auto& name : field_names()) values[name] = evaluate_field(a, name);
  json cross = json::array();
  for (auto s : a.settings().seeds)
    for (const auto& c : theorem_crosschecks(a, s)) cross.push_back(c.to_json());
  return {{"command", "invariants"},
          {"input", input_json(a, path)},
          {"settings", a.settings().to_json()},
          {"n_max_used", a.n_max()},
          {"invariants", values},
          {"crosschecks", cross},
          {"bounds_hit", a.bounds_hit()}};
}

// ---------------------------------------------------------------- goldens

struct FieldComparison {
  std::string field, source;
  json expected, actual;
  std::string status;  // "match", "mismatch" or "bound-exceeded"
};

template <class F>
std::vector<FieldComparison> compare_golden(Analysis<F>& a, const json& expected) {
  std::vector<FieldComparison> out;
  for (auto it = expected.begin(); it != expected.end(); ++it) {
    FieldComparison c;
    c.field = it.key();
    c.expected = it.value().at("value");
    c.source = it.value().value("source", "computed");
    c.actual = evaluate_field(a, c.field);
    if (c.actual == c.expected) c.status = "match";
    else if (is_unknown(c.actual) && !a.bounds_hit().empty()) c.status = "bound-exceeded";
    else c.status = "mismatch";
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------- markdown

inline std::string cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

inline std::string markdown_table(const std::vector<std::string>& header, const std::vector<std::vector<json>>& rows) {
  std::string out = "|";
  for (const auto& h : header) out += " " + h + " |";
  out += "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& row : rows) {
    out += "|";
    for (const auto& v : row) out += " " + cell(v) + " |";
    out += "\n";
  }
  return out;
}

inline std::string invariants_markdown(const json& report) {
  std::string out = "## Invariants of " + report["input"]["file"].get<std::string>() + "\n\n";
  std::vector<std::vector<json>> rows;
  for (const auto& name : field_names()) rows.push_back({name, report["invariants"][name]});
  out += markdown_table({"invariant", "value"}, rows);
  std::vector<std::vector<json>> cross;
  for (const auto& c : report["crosschecks"])
    if (c["applicable"].get<bool>()) cross.push_back({c["check"], c["seed"], c["violated"].get<bool>() ? "VIOLATED" : "ok"});
  out += "\n### Cross-checks\n\n" + markdown_table({"check", "seed", "result"}, cross);
  out += "\n### Settings\n\n";
  std::vector<std::vector<json>> settings;
  for (auto it = report["settings"].begin(); it != report["settings"].end(); ++it) settings.push_back({it.key(), it.value()});
  out += markdown_table({"setting", "value"}, settings);
  if (!report["bounds_hit"].empty()) {
    out += "\n### Bounds hit\n\n";
    for (const auto& b : report["bounds_hit"]) out += "- " + b.get<std::string>() + "\n";
  }
  return out;
}

inline std::string check_markdown(const json& report) {
  std::string out = "## " + report["result"]["predicate"].get<std::string>() + " on " +
                    report["input"]["file"].get<std::string>() + "\n\n";
  const json& r = report["result"];
  out += markdown_table({"verdict", "scope", "stable across seeds", "reason"},
                        {{r["verdict"], r.value("scope", json("")), r.value("stable_across_seeds", json("")),
                          r.value("reason", json(""))}});
  out += "\nParameters: `" + r["parameters"].dump() + "`\n";
  return out;
}

inline std::string reproduce_markdown(const json& report) {
  std::vector<std::vector<json>> rows;
  for (const auto& e : report["entries"]) {
    if (e.contains("error")) {
      rows.push_back({e["id"], "", "", e["error"], "error"});
      continue;
    }
    for (const auto& f : e["fields"]) rows.push_back({e["id"], f["field"], f["expected"], f["actual"], f["status"]});
  }
  return "## Corpus reproduction\n\n" + markdown_table({"entry", "field", "expected", "actual", "status"}, rows) +
         "\nSummary: `" + report["summary"].dump() + "`\n";
}

}  // namespace fiberlab

#endif  // FIBERLAB_REPORT_HPP
