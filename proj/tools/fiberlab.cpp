#include <atomic>
#include <filesystem>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "fiberlab/report.hpp"

using namespace fiberlab;

namespace {

enum Exit { ok = 0, mismatch = 1, input_error = 2, bound_exceeded = 3, unknown = 4 };

struct Options {
  std::string field;
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::optional<int> n_max;
  int cutoff = Settings{}.cutoff;
  int trials = Settings{}.trials;
  long piece_limit = Settings{}.piece_limit;
  std::size_t gb_budget = Settings{}.gb_budget;
  int r_max = Settings{}.r_max;
  unsigned jobs = 1;
  bool markdown = false;
  std::string corpus = FIBERLAB_CORPUS_DIR;

  Settings settings() const {
    Settings s;
    s.seeds = seeds;
    s.n_max = n_max;
    s.cutoff = cutoff;
    s.trials = trials;
    s.piece_limit = piece_limit;
    s.gb_budget = gb_budget;
    s.r_max = r_max;
    return s;
  }

  std::optional<FieldSpec> field_spec() const {
    if (field.empty()) return std::nullopt;
    if (field == "QQ" || field == "0") return FieldSpec::rationals();
    return FieldSpec::prime(std::stoull(field));
  }
};

void emit(const json& report, bool markdown, const std::string& md) {
  if (markdown) std::cout << md;
  else std::cout << report.dump(2) << "\n";
}

int run_invariants(const Options& o, const std::string& path) {
  auto parsed = parse_ideal_text(read_text(path).text);
  return with_analysis(parsed, o.field_spec(), o.settings(), [&](auto& a) {
    json report = invariants_report(a, path);
    emit(report, o.markdown, invariants_markdown(report));
    return a.bounds_hit().empty() ? Exit::ok : Exit::bound_exceeded;
  });
}

int run_check(const Options& o, const std::string& predicate, const std::string& path, const PredicateParams& p) {
  const auto& names = predicate_names();
  if (std::find(names.begin(), names.end(), predicate) == names.end())
    throw std::invalid_argument("unknown predicate '" + predicate + "'");
  auto parsed = parse_ideal_text(read_text(path).text);
  return with_analysis(parsed, o.field_spec(), o.settings(), [&](auto& a) {
    PredicateReport r = run_predicate(a, predicate, p);
    json report{{"command", "check"},
                {"input", input_json(a, path)},
                {"settings", a.settings().to_json()},
                {"result", r.to_json()},
                {"bounds_hit", a.bounds_hit()}};
    static const std::set<std::string> seeded{"tight", "adjusted", "vv", "reg-in-gr"};
    if (seeded.count(predicate) && a.equigenerated()) {
      json forms = json::object();
      for (auto s : a.settings().seeds) forms[std::to_string(s)] = polys_json(a.forms(s).forms);
      report["forms_by_seed"] = forms;
    }
    emit(report, o.markdown, check_markdown(report));
    if (r.verdict == Verdict::yes) return Exit::ok;
    if (r.verdict == Verdict::no) return Exit::mismatch;
    return a.bounds_hit().empty() ? Exit::unknown : Exit::bound_exceeded;
  });
}

json reproduce_entry(const Options& o, const json& entry) {
  namespace fs = std::filesystem;
  json out{{"id", entry.at("id")}, {"input", entry.at("input")}};
  try {
    const fs::path dir(o.corpus);
    auto parsed = parse_ideal_text(read_text((dir / entry.at("input").get<std::string>()).string()).text);
    json golden = json::parse(read_text((dir / entry.at("golden").get<std::string>()).string()).text);
    with_analysis(parsed, o.field_spec(), o.settings(), [&](auto& a) {
      out["field"] = a.ring()->field().spec().to_string();
      out["hash"] = a.hash();
      json fields = json::array();
      std::string status = "match";
      for (const auto& c : compare_golden(a, golden.at("expected"))) {
        fields.push_back({{"field", c.field}, {"expected", c.expected}, {"actual", c.actual},
                          {"source", c.source}, {"status", c.status}});
        if (c.status == "mismatch") status = "mismatch";
        else if (c.status == "bound-exceeded" && status == "match") status = "bound-exceeded";
      }
      out["fields"] = fields;
      out["status"] = status;
      out["bounds_hit"] = a.bounds_hit();
      return 0;
    });
  } catch (const std::exception& e) {
    out["status"] = "error";
    out["error"] = e.what();
  }
  return out;
}

int run_reproduce(const Options& o, const std::optional<std::string>& id) {
  namespace fs = std::filesystem;
  json manifest = json::parse(read_text((fs::path(o.corpus) / "manifest.json").string()).text);
  std::vector<json> selected;
  for (const auto& e : manifest.at("entries"))
    if (!id || e.at("id") == *id) selected.push_back(e);
  if (selected.empty()) throw std::invalid_argument("no corpus entry named '" + id.value_or("") + "'");

  // Entries run in parallel; results land in manifest order.
  std::vector<json> results(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < selected.size();) results[i] = reproduce_entry(o, selected[i]);
  };
  std::vector<std::thread> pool;
  const unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(selected.size())));
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  json summary{{"entries", results.size()}, {"match", 0}, {"mismatch", 0}, {"bound-exceeded", 0}, {"error", 0}};
  for (const auto& r : results) summary[r["status"].get<std::string>()] = summary[r["status"].get<std::string>()].get<int>() + 1;
  json report{{"command", "reproduce"},
              {"settings", o.settings().to_json()},
              {"field_override", o.field.empty() ? json(nullptr) : json(o.field)},
              {"entries", results},
              {"summary", summary}};
  emit(report, o.markdown, reproduce_markdown(report));
  if (summary["mismatch"].get<int>() > 0 || summary["error"].get<int>() > 0) return Exit::mismatch;
  if (summary["bound-exceeded"].get<int>() > 0) return Exit::bound_exceeded;
  return Exit::ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blow-up algebra invariants of homogeneous ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "0 or QQ for the rationals, else an odd prime; default: the file's field");
  app.add_option("--seed", o.seeds, "seeds for generic choices")->delimiter(',')->expected(1, -1);
  app.add_option("--nmax", o.n_max, "largest power checked by bounded predicates; default max(r+2,5)");
  app.add_option("--cutoff", o.cutoff, "largest degree of any graded piece or resolution");
  app.add_option("--trials", o.trials, "random systems of parameters per Cohen-Macaulay test");
  app.add_option("--piece-limit", o.piece_limit, "largest number of monomials in a graded piece");
  app.add_option("--gb-budget", o.gb_budget, "S-pair reductions allowed per blow-up elimination");
  app.add_option("--rmax", o.r_max, "reduction number search limit");
  app.add_option("--jobs", o.jobs, "corpus entries computed in parallel");
  app.add_flag("--markdown", o.markdown, "render a table instead of JSON");
  app.add_option("--corpus", o.corpus, "corpus directory holding manifest.json");

  std::string file, predicate;
  PredicateParams params;
  std::optional<std::string> id;
  auto* inv = app.add_subcommand("invariants", "report every invariant of an ideal");
  inv->add_option("file", file, "ideal input file")->required();
  auto* chk = app.add_subcommand("check", "evaluate one predicate");
  chk->add_option("predicate", predicate, "one of: gs, valla-dim, indeg, tight, adjusted, vv, reg-in-gr, gen-ci, "
                                          "perfect, mult-formulas, map-degree")->required();
  chk->add_option("file", file, "ideal input file")->required();
  chk->add_option("--s", params.s, "s for gs and indeg");
  chk->add_option("--n", params.n, "power for tight");
  chk->add_option("--l", params.l, "number of forms for adjusted");
  auto* rep = app.add_subcommand("reproduce", "recompute corpus entries and compare with their golden records");
  rep->add_option("id", id, "corpus entry; all entries when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::input_error;
  }

  try {
    if (o.seeds.empty()) throw std::invalid_argument("at least one seed is required");
    if (o.cutoff < 1 || o.trials < 1 || o.piece_limit < 1) throw std::invalid_argument("bounds must be positive");
    o.field_spec();
    if (*inv) return run_invariants(o, file);
    if (*chk) return run_check(o, predicate, file, params);
    return run_reproduce(o, id);
  } catch (const ParseError& e) {
    std::cerr << "fiberlab: " << file << ": " << e.what() << "\n";
    return Exit::input_error;
  } catch (const std::invalid_argument& e) {
    std::cerr << "fiberlab: " << e.what() << "\n";
    return Exit::input_error;
  } catch (const std::out_of_range& e) {
    std::cerr << "fiberlab: " << e.what() << "\n";
    return Exit::input_error;
  } catch (const std::runtime_error& e) {
    std::cerr << "fiberlab: " << e.what() << "\n";
    return Exit::input_error;
  }
}
