// Acceptance run: one PASS/FAIL line per criterion, followed by the facts each
// verdict rests on. Exit status is the number of failed criteria.

#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include "fiberlab/report.hpp"

using namespace fiberlab;

namespace {

const std::vector<std::uint64_t> kSeeds{1, 2, 3};

struct Outcome {
  bool pass = true;
  std::vector<std::string> facts;

  void expect(bool ok, const std::string& fact) {
    pass = pass && ok;
    facts.push_back((ok ? "ok    " : "WRONG ") + fact);
  }
};

template <class T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string show(const json& v) { return v.dump(); }

ParsedInput corpus_input(const std::string& id) {
  return parse_ideal_text(read_text(std::string(FIBERLAB_CORPUS_DIR) + "/" + id + ".ideal").text);
}

template <class F>
std::unique_ptr<Analysis<F>> load(const std::string& id, const F& field, Settings s = {}) {
  auto in = build_input(corpus_input(id), field);
  return std::make_unique<Analysis<F>>(in.ring, in.generators, std::move(s), in.matrix);
}

std::vector<std::string> corpus_ids() {
  json manifest = json::parse(read_text(std::string(FIBERLAB_CORPUS_DIR) + "/manifest.json").text);
  std::vector<std::string> ids;
  for (const auto& e : manifest["entries"]) ids.push_back(e["id"]);
  return ids;
}

/// depth = number of variables - projective dimension, from a full resolution.
template <class F>
std::optional<int> depth_by_resolution(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
  BettiOptions opt;
  opt.ceiling = 60;
  BettiTable b = betti_table(ring, gens, opt);
  if (!b.complete) return std::nullopt;
  return static_cast<int>(ring->num_vars()) - b.projective_dimension();
}

// ---------------------------------------------------------------- criteria

template <class F>
Outcome criterion1(const F& field) {
  Outcome o;
  auto a = load("ex-1-intersection", field);
  o.expect(a->mu() == 4, "mu(I) = " + show(a->mu()) + ", expected 4");
  auto dim = symmetric_algebra_dimension(*a);
  o.expect(dim == 5, "dim S(I) = " + (dim ? show(*dim) : "unknown") + ", expected 5");
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (auto seed : kSeeds) {
    Settings s;
    s.seeds = {seed};
    auto a = load("ex-1-matrix6x5", PrimeField(), s);
    auto g3 = check_gs(*a, 3), g4 = check_gs(*a, 4);
    o.expect(g3.verdict == Verdict::yes, "seed " + show(seed) + ": G_3 " + verdict_name(g3.verdict));
    o.expect(g4.verdict == Verdict::no, "seed " + show(seed) + ": G_4 " + verdict_name(g4.verdict));
  }
  return o;
}

template <class F>
Outcome criterion3(const F& field, bool with_resolution) {
  Outcome o;
  auto a = load("ex-2.1-sixgen", field);
  o.expect(a->height() == 2, "ht I = " + show(a->height()));
  o.expect(check_perfect(*a).verdict == Verdict::yes, "perfect");
  auto fd = evaluate_field(*a, "fiber_depth"), gd = evaluate_field(*a, "gr_depth");
  o.expect(fd == 2, "depth F(I) = " + show(fd));
  o.expect(gd == 2, "depth gr_I(R) = " + show(gd) + " by regular forms and socle");
  if (with_resolution) {
    auto ab = depth_by_resolution(a->rees()->standard_ring, a->rees()->gr);
    o.expect(ab == 2, "depth gr_I(R) = " + (ab ? show(*ab) : "unknown") + " by Auslander-Buchsbaum");
  }
  for (auto seed : kSeeds) {
    VVData d = valabrega_valla(*a, seed, 3);
    o.expect(d.first_failure == 2, "seed " + show(seed) + ": (f1,f2) meet I^n differs from (f1,f2) I^(n-1) first at n = " +
                                       (d.first_failure ? show(*d.first_failure) : "none"));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto a = load("ex-2.2-sevengen", PrimeField());
  o.expect(a->analytic_spread().value == 3, "ell(I) = " + show(evaluate_field(*a, "analytic_spread")));
  auto reg = evaluate_field(*a, "fiber_regularity");
  for (auto seed : kSeeds) {
    auto t = tight_for_seed(*a, seed, 1);
    o.expect(t.verdict == Verdict::yes, "seed " + show(seed) + ": generic triple tight at n = 1");
    auto r = a->reduction(seed).value;
    o.expect(r == 2 && reg == 2, "seed " + show(seed) + ": r_J(I) = " + (r ? show(*r) : "unknown") +
                                     ", reg F(I) = " + show(reg));
  }
  o.expect(evaluate_field(*a, "fiber_cm") == false, "F(I) is not Cohen-Macaulay");
  auto gd = evaluate_field(*a, "gr_depth");
  auto ab = depth_by_resolution(a->rees()->standard_ring, a->rees()->gr);
  auto grade = evaluate_field(*a, "gr_plus_grade");
  o.expect(gd == 1, "depth gr_I(R) = " + show(gd) + " by regular forms and socle, expected 1");
  o.facts.push_back("note  depth gr_I(R) = " + (ab ? show(*ab) : "unknown") +
                    " by Auslander-Buchsbaum; grade of gr_+ = " + show(grade));
  return o;
}

template <class F>
Outcome criterion5(const F& field) {
  Outcome o;
  auto a = load("ex-3-monomial4", field);
  o.expect(check_perfect(*a).verdict == Verdict::no, "not perfect");
  auto indeg = evaluate_field(*a, "indeg");
  o.expect(indeg == 2, "indeg Q = " + show(indeg));
  o.expect(evaluate_field(*a, "rees_cm") == true, "Rees algebra Cohen-Macaulay");
  auto r = evaluate_field(*a, "reduction_number");
  o.expect(r == 1, "r(I) = " + show(r));
  return o;
}

template <class F>
Outcome criterion6(const F& field) {
  Outcome o;
  auto a = load("ex-3-binomial4", field);
  o.expect(check_perfect(*a).verdict == Verdict::no, "not perfect");
  o.expect(check_generically_ci(*a).verdict == Verdict::yes, "generically a complete intersection");
  auto lr = a->linear_rank_value();
  o.expect(lr == 3 && a->mu() - 1 == 3, "linear rank " + (lr ? show(*lr) : "unknown") + " = mu - 1");
  o.expect(a->linearly_presented() == false, "not linearly presented");
  o.expect(evaluate_field(*a, "rees_cm") == false, "Rees algebra not Cohen-Macaulay");
  auto r = evaluate_field(*a, "reduction_number");
  o.expect(r == 2, "r(I) = " + show(r));
  auto q = evaluate_field(*a, "fiber_relation_degrees");
  o.expect(q == json::array({3}), "minimal relations of F(I) in degrees " + show(q));
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto a = load("ex-3-matrix5x4", PrimeField());
  o.expect(check_generically_ci(*a).verdict == Verdict::no, "not generically a complete intersection");
  o.expect(check_gs(*a, 3).verdict == Verdict::no, "G_3 fails");
  o.expect(evaluate_field(*a, "fiber_cm") == true, "F(I) Cohen-Macaulay");
  auto q = evaluate_field(*a, "fiber_relation_degrees");
  o.expect(!q.empty() && q.is_array() && std::all_of(q.begin(), q.end(), [](const json& d) { return d == 3; }),
           "minimal relations of F(I) in degrees " + show(q));
  auto lr = a->linear_rank_value();
  o.expect(lr == 2, "linear rank " + (lr ? show(*lr) : "unknown"));
  o.expect(evaluate_field(*a, "rees_cm") == false, "Rees algebra not Cohen-Macaulay");
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t covered = 0, conditional = 0;
  for (const auto& id : corpus_ids()) {
    auto a = load(id, PrimeField());
    if (!a->equigenerated() || a->height() != 2 || a->projective_dimension() != 2) continue;
    ++covered;
    auto r = check_multiplicity_formulas(*a);
    const json& c = r.certificate;
    o.expect(r.verdict == Verdict::yes, id + ": " + c.dump());
    if (c["conditional"]["applicable"] == true) ++conditional;
  }
  o.expect(covered >= 4, show(covered) + " height two perfect equigenerated entries");
  o.expect(conditional >= 1, show(conditional) + " entries satisfy the conditional hypotheses");
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (const auto& id : corpus_ids()) {
    auto a = load(id, PrimeField());
    std::size_t applicable = 0, violated = 0;
    for (auto seed : kSeeds)
      for (const auto& c : theorem_crosschecks(*a, seed)) {
        applicable += c.applicable;
        if (c.violated) {
          ++violated;
          o.expect(false, id + " seed " + show(seed) + ": " + c.to_json().dump());
        }
      }
    o.facts.push_back("      " + id + ": " + show(applicable) + " applicable checks, " + show(violated) + " violations");
  }
  return o;
}

template <class F>
std::size_t membership_trials(Analysis<F>& a, std::mt19937_64& rng, std::size_t trials, Outcome& o) {
  const RingPtr<F>& R = a.ring();
  const F& K = R->field();
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Polynomial<F> combo(R);
    for (const auto& g : a.generators()) {
      int e = static_cast<int>(rng() % 3);
      const auto basis = monomial_basis(R, e);
      const auto& mons = basis->monomials();
      Polynomial<F> h(R);
      for (int k = 0; k < 3; ++k)
        h += Polynomial<F>::from_terms(R, {{mons[rng() % mons.size()], K.random_nonzero(rng)}});
      combo += h * g;
    }
    if (!a.ideal().contains(combo)) ++failures;
  }
  // Below the smallest generator degree nothing nonzero lies in I.
  int low = a.generators().front().degree();
  for (const auto& g : a.generators()) low = std::min(low, g.degree());
  if (low > 0) {
    const auto basis = monomial_basis(R, low - 1);
    const auto& mons = basis->monomials();
    auto outside = Polynomial<F>::from_terms(R, {{mons[rng() % mons.size()], K.one()}});
    if (a.ideal().contains(outside)) ++failures, o.expect(false, "a form of degree below indeg I was reported inside I");
  }
  return failures;
}

Outcome criterion10(bool with_rationals) {
  Outcome o;
  // Membership of random combinations.
  {
    auto rng = make_rng(1, Stream::ring_oracle, 10);
    std::size_t failures = 0, trials = 0;
    auto ids = corpus_ids();
    for (const auto& id : ids) {
      auto a = load(id, PrimeField());
      std::size_t count = 1000 / ids.size() + (id == ids.front() ? 1000 % ids.size() : 0);
      failures += membership_trials(*a, rng, count, o);
      trials += count;
    }
    o.expect(failures == 0, show(trials) + " random membership trials, " + show(failures) + " failures");
  }
  // Fiber pieces by truncated elimination against the power count.
  for (const auto& id : corpus_ids()) {
    auto a = load(id, PrimeField());
    if (!a->equigenerated()) {
      o.facts.push_back("      " + id + ": mixed degrees, no fiber");
      continue;
    }
    const auto* low = a->fiber_low_degrees();
    if (!low) {
      o.expect(false, id + ": truncated elimination exceeded its budget");
      continue;
    }
    HilbertSeries hs = low->ideal().hilbert_series();
    bool same = true;
    json rows = json::array();
    for (int n = 1; n <= 4; ++n) {
      auto c = a->relation_count_from_powers(n);
      long e = detail::binomial(static_cast<int>(a->mu()) + n - 1, n) - hs.hilbert_function(n).get_si();
      rows.push_back({n, e, c ? json(*c) : unknown_value()});
      same = same && c && *c == e;
    }
    o.expect(same, id + ": [n, dim Q_n by elimination, by powers] " + rows.dump());
  }
  // Euler characteristic of every complete resolution against the Hilbert series.
  std::size_t resolutions = 0;
  for (const auto& id : corpus_ids()) {
    auto a = load(id, PrimeField());
    auto euler = [&](const BettiTable& b, const HilbertSeries& hs, const std::string& what) {
      if (!b.complete) return;
      ++resolutions;
      IntPoly chi;
      for (const auto& [k, v] : b.entries) {
        if (chi.size() <= static_cast<std::size_t>(k.second)) chi.resize(static_cast<std::size_t>(k.second) + 1);
        chi[static_cast<std::size_t>(k.second)] += (k.first % 2 ? -1 : 1) * v;
      }
      detail::trim(chi);
      IntPoly num = hs.numerator();
      detail::trim(num);
      o.expect(chi == num, id + " " + what + ": alternating Betti sum equals the Hilbert numerator");
    };
    euler(a->betti(), a->hilbert(), "R/I");
    if (a->equigenerated() && a->mu() <= 7)
      if (const BettiTable* fb = a->fiber_betti()) euler(*fb, *a->fiber_hilbert(), "F(I)");
  }
  o.expect(resolutions >= 9, show(resolutions) + " complete resolutions certified");
  // The exact criteria over the rationals.
  if (with_rationals) {
    RationalField Q;
    o.expect(criterion1(Q).pass, "criterion 1 over QQ");
    o.expect(criterion3(Q, false).pass, "criterion 3 over QQ");
    o.expect(criterion5(Q).pass, "criterion 5 over QQ");
    o.expect(criterion6(Q).pass, "criterion 6 over QQ");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  // Arguments: optional --quick, then optional criterion numbers to run.
  bool quick = false;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--quick") quick = true;
    else only.insert(std::stoi(argv[i]));
  }
  struct Named {
    int number;
    std::string title;
    std::function<Outcome()> run;
  };
  std::vector<Named> all{
      {1, "intersection example: mu = 4, dim S(I) = 5", [] { return criterion1(PrimeField()); }},
      {2, "6x5 matrix example: G_3 holds, G_4 fails, for 3 seeds", criterion2},
      {3, "six-generator example: ht 2, perfect, depths 2, VV fails at n = 2", [=] { return criterion3(PrimeField(), !quick); }},
      {4, "seven-generator example: ell 3, tight, r = reg F = 2, F not CM, depth gr 1", criterion4},
      {5, "(x^2,xy,xz,yz): not perfect, indeg 2, Rees CM, r = 1", [] { return criterion5(PrimeField()); }},
      {6, "(x^2-y^2,xy,xz,yz): invariants as stated", [] { return criterion6(PrimeField()); }},
      {7, "5x4 matrix example: invariants as stated", criterion7},
      {8, "multiplicity formulas on height two perfect entries", criterion8},
      {9, "theorem cross-checks on every entry and seed", criterion9},
      {10, "kernel oracles and the rational cross-check", [=] { return criterion10(!quick); }},
  };
  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.number)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << "\n";
    for (const auto& f : o.facts) std::cout << "    " << f << "\n";
    std::cout.flush();
    failed += !o.pass;
  }
  return failed;
}
