// Named predicates on an analyzed ideal. Each returns a PredicateReport with a
// verdict and the numbers that decide it, so the verdict can be re-checked.

#ifndef FIBERLAB_PREDICATES_HPP
#define FIBERLAB_PREDICATES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fiberlab/analysis.hpp"

namespace fiberlab {

enum class Verdict { yes, no, unknown };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    default: return "unknown";
  }
}
inline Verdict verdict_of(bool b) { return b ? Verdict::yes : Verdict::no; }

struct PredicateReport {
  std::string name;
  Verdict verdict = Verdict::unknown;
  json parameters = json::object();
  json certificate = json::object();
  std::string scope;   // for statements over all powers: "all n" or "n <= N"
  std::string reason;  // why the verdict is unknown
  std::optional<bool> stable;  // agreement across seeds, for seeded predicates

  json to_json() const {
    json j;
    j["predicate"] = name;
    j["verdict"] = verdict_name(verdict);
    j["parameters"] = parameters;
    j["certificate"] = certificate;
    if (!scope.empty()) j["scope"] = scope;
    if (!reason.empty()) j["reason"] = reason;
    if (stable) j["stable_across_seeds"] = *stable;
    return j;
  }
};

inline PredicateReport unknown_report(const std::string& name, const std::string& reason, json parameters = json::object()) {
  PredicateReport r;
  r.name = name;
  r.reason = reason;
  r.parameters = std::move(parameters);
  return r;
}

/// Merges per-seed reports: the common verdict when all seeds agree, else unknown.
inline PredicateReport combine_seeds(const std::string& name, json parameters, const std::vector<std::uint64_t>& seeds,
                                     const std::vector<PredicateReport>& per_seed) {
  PredicateReport out;
  out.name = name;
  out.parameters = std::move(parameters);
  out.parameters["seeds"] = seeds;
  json runs = json::array();
  bool agree = true;
  for (std::size_t i = 0; i < per_seed.size(); ++i) {
    json run = per_seed[i].certificate;
    run["seed"] = seeds[i];
    run["verdict"] = verdict_name(per_seed[i].verdict);
    if (!per_seed[i].scope.empty()) run["scope"] = per_seed[i].scope;
    if (!per_seed[i].reason.empty()) run["reason"] = per_seed[i].reason;
    runs.push_back(std::move(run));
    if (per_seed[i].verdict != per_seed.front().verdict || per_seed[i].scope != per_seed.front().scope) agree = false;
  }
  out.certificate["per_seed"] = std::move(runs);
  out.stable = agree;
  if (per_seed.empty()) {
    out.reason = "no seeds";
  } else if (agree) {
    out.verdict = per_seed.front().verdict;
    out.scope = per_seed.front().scope;
    out.reason = per_seed.front().reason;
  } else {
    out.reason = "verdicts differ across seeds";
  }
  return out;
}

namespace detail {

inline long choose2(long l) { return l * (l - 1) / 2; }

}  // namespace detail

// ---------------------------------------------------------------- G_s

/// G_s through Fitting ideals: ht I_{mu-i}(phi) >= i + 1 for 1 <= i <= s - 1.
template <class F>
PredicateReport check_gs(Analysis<F>& a, int s) {
  json params{{"s", s}};
  if (!a.presentation()) return unknown_report("gs", "minimal presentation unavailable", params);
  PredicateReport r;
  r.name = "gs";
  r.parameters = params;
  const int m = static_cast<int>(a.mu());
  bool ok = true;
  json conditions = json::array();
  for (int i = 1; i <= s - 1; ++i) {
    const int k = m - i;
    int h = k <= 0 ? static_cast<int>(a.num_vars()) : *a.minors_height(k);
    bool holds = k <= 0 || h >= i + 1;
    conditions.push_back({{"i", i}, {"minor_size", k}, {"height", k <= 0 ? json("unit ideal") : json(h)},
                          {"required", i + 1}, {"holds", holds}});
    ok = ok && holds;
  }
  r.certificate["fitting_conditions"] = conditions;
  r.verdict = verdict_of(ok);
  return r;
}

// ---------------------------------------------------------------- Valla dimension

template <class F>
std::optional<int> symmetric_algebra_dimension(Analysis<F>& a) {
  const auto* p = a.presentation();
  if (!p) return std::nullopt;
  const RingPtr<F>& R = a.ring();
  const std::size_t n = R->num_vars(), m = a.mu();
  auto ynames = fresh_names("y", m, R->names());
  std::vector<std::string> names = R->names();
  names.insert(names.end(), ynames.begin(), ynames.end());
  std::vector<int> weights(n, 1);
  for (const auto& g : a.generators()) weights.push_back(g.degree());
  auto S = make_ring(R->field(), names, weights);
  std::vector<int> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<int>(i);
  std::vector<Polynomial<F>> relations;
  for (std::size_t c = 0; c < p->columns(); ++c) {
    Polynomial<F> l(S);
    for (std::size_t i = 0; i < m; ++i)
      if (!p->entries[i][c].is_zero()) l += Polynomial<F>::variable(S, n + i) * map_variables(p->entries[i][c], S, shift);
    relations.push_back(std::move(l));
  }
  return Ideal<F>(S, relations).dimension();
}

/// dim S(I) against max(dim R + 1, mu).
template <class F>
PredicateReport check_valla_dimension(Analysis<F>& a) {
  if (a.height() < 1) return unknown_report("valla-dim", "the ideal must have grade at least 1");
  auto dim_s = symmetric_algebra_dimension(a);
  if (!dim_s) return unknown_report("valla-dim", "minimal presentation unavailable");
  PredicateReport r;
  r.name = "valla-dim";
  const int bound = std::max(static_cast<int>(a.num_vars()) + 1, static_cast<int>(a.mu()));
  r.certificate = {{"dim_symmetric_algebra", *dim_s}, {"valla_bound", bound}, {"dim_R", a.num_vars()},
                   {"mu", a.mu()}};
  r.verdict = verdict_of(*dim_s == bound);
  return r;
}

// ---------------------------------------------------------------- indeg(Q)

struct IndegData {
  std::optional<int> value;  // least n with [Q]_n != 0, if found
  bool none_up_to_bound = false;
  bool q_is_zero = false;
  bool consistent = true;
  json certificate = json::object();
};

template <class F>
IndegData fiber_indeg(Analysis<F>& a, int up_to) {
  IndegData out;
  json from_powers = json::array(), from_elimination = json::array();
  const auto* low = a.fiber_low_degrees();
  std::optional<HilbertSeries> low_hs;
  if (low && up_to <= a.settings().indeg_up_to) low_hs = low->ideal().hilbert_series();
  for (int n = 1; n <= up_to; ++n) {
    auto c = a.relation_count_from_powers(n);
    if (!c) break;
    from_powers.push_back(*c);
    if (low_hs) {
      long e = detail::binomial(static_cast<int>(a.mu()) + n - 1, n) - low_hs->hilbert_function(n).get_si();
      from_elimination.push_back(e);
      if (e != *c) out.consistent = false;
    }
    if (*c > 0 && !out.value) out.value = n;
  }
  out.certificate["relation_counts_from_powers"] = from_powers;
  if (low_hs) out.certificate["relation_counts_from_elimination"] = from_elimination;
  out.certificate["consistent"] = out.consistent;
  if (!out.value && static_cast<int>(from_powers.size()) == up_to) out.none_up_to_bound = true;
  if (const auto* fp = a.fiber()) {
    auto exact = a.fiber_indeg_exact();
    out.q_is_zero = fp->relations.empty();
    out.certificate["indeg_from_fiber"] = exact ? json(*exact) : json("none");
    if (exact && out.value && *exact != *out.value) out.consistent = false;
    if (exact && !out.value && *exact <= up_to) out.consistent = false;
    if (!out.value && exact) out.value = exact;
  }
  out.certificate["consistent"] = out.consistent;
  return out;
}

/// indeg(Q); with s given, the verdict is indeg(Q) >= s.
template <class F>
PredicateReport check_indeg(Analysis<F>& a, std::optional<int> s = std::nullopt) {
  json params{{"up_to", a.settings().indeg_up_to}};
  if (s) params["s"] = *s;
  if (!a.equigenerated()) return unknown_report("indeg", "generators of different degrees", params);
  IndegData d = fiber_indeg(a, a.settings().indeg_up_to);
  PredicateReport r;
  r.name = "indeg";
  r.parameters = params;
  r.certificate = d.certificate;
  if (d.value) r.certificate["indeg"] = *d.value;
  else if (d.q_is_zero) r.certificate["indeg"] = "none (Q = 0)";
  else if (d.none_up_to_bound) r.certificate["indeg"] = ">= " + std::to_string(a.settings().indeg_up_to + 1);
  if (!d.consistent) {
    r.reason = "elimination and graded pieces disagree";
    return r;
  }
  if (s) {
    if (d.value) r.verdict = verdict_of(*d.value >= *s);
    else if (d.q_is_zero) r.verdict = Verdict::yes;
    else if (d.none_up_to_bound && *s <= a.settings().indeg_up_to + 1) r.verdict = Verdict::yes;
    else r.reason = "no relation found up to the inspected degree";
  } else {
    if (d.value || d.q_is_zero) r.verdict = Verdict::yes;
    else r.reason = "no relation found up to the inspected degree";
  }
  return r;
}

// ---------------------------------------------------------------- tightness

struct TightData {
  bool tight = false;
  std::size_t colon_meet_power = 0, ideal_meet_power = 0;
};

/// [((f_1..f_{l-1}) : f_l) ∩ I^n]_{nd} against [(f_1..f_{l-1}) ∩ I^n]_{nd}.
template <class F>
TightData tight_at(Analysis<F>& a, const std::vector<Polynomial<F>>& fs, int n) {
  TightData t;
  const int deg = n * a.degree();
  PowerTower<F>& tw = a.tower();
  GradedPiece<F> power = tw.piece(n);
  std::vector<Polynomial<F>> prefix(fs.begin(), fs.end() - 1);
  GradedPiece<F> colon = colon_piece(a.ring(), prefix, fs.back(), deg);
  GradedPiece<F> plain = graded_piece(a.ring(), prefix, deg);
  t.colon_meet_power = intersection_dimension(colon, power);
  t.ideal_meet_power = intersection_dimension(plain, power);
  t.tight = t.colon_meet_power == t.ideal_meet_power;
  return t;
}

template <class F>
PredicateReport tight_for_seed(Analysis<F>& a, std::uint64_t seed, int n) {
  PredicateReport r;
  r.name = "tight";
  auto spread = a.analytic_spread();
  if (!spread.value) {
    r.reason = "analytic spread unknown";
    return r;
  }
  if (!a.power_within_cutoff(n)) {
    r.reason = "degree n*d exceeds the cutoff";
    return r;
  }
  const auto& fs = a.forms(seed).forms;
  TightData t = tight_at(a, fs, n);
  r.certificate = {{"n", n}, {"colon_meet_power", t.colon_meet_power}, {"ideal_meet_power", t.ideal_meet_power}};
  r.verdict = verdict_of(t.tight);
  // Tightness in power n persists in every higher power.
  r.scope = t.tight ? (n == 1 ? "all n" : "n >= " + std::to_string(n)) : "n = " + std::to_string(n);
  return r;
}

template <class F>
PredicateReport check_tight(Analysis<F>& a, int n = 1) {
  if (!a.equigenerated()) return unknown_report("tight", "generators of different degrees", {{"n", n}});
  std::vector<PredicateReport> runs;
  for (auto s : a.settings().seeds) runs.push_back(tight_for_seed(a, s, n));
  return combine_seeds("tight", {{"n", n}}, a.settings().seeds, runs);
}

// ---------------------------------------------------------------- adjustment

struct AdjustData {
  bool independent = false;
  std::size_t product_dimension = 0;
  long expected = 0;
};

/// dim [J I]_{2d} for J spanned by the given forms, against l mu - C(l, 2).
template <class F>
AdjustData adjustment(Analysis<F>& a, const std::vector<Polynomial<F>>& fs) {
  AdjustData out;
  const long l = static_cast<long>(fs.size());
  out.expected = l * static_cast<long>(a.mu()) - detail::choose2(l);
  out.independent = span_piece(a.ring(), fs, a.degree()).dimension() == fs.size();
  std::vector<Polynomial<F>> products;
  for (const auto& f : fs)
    for (const auto& g : a.generators()) products.push_back(f * g);
  out.product_dimension = span_piece(a.ring(), products, 2 * a.degree()).dimension();
  return out;
}

template <class F>
PredicateReport adjusted_for_seed(Analysis<F>& a, std::uint64_t seed, std::size_t l) {
  PredicateReport r;
  r.name = "adjusted";
  auto fs = generic_forms(a.generators(), l, seed).forms;
  AdjustData d = adjustment(a, fs);
  r.certificate = {{"l", l}, {"mu_JI", d.product_dimension}, {"l_mu_minus_binomial", d.expected}};
  if (!d.independent) {
    r.reason = "the forms are linearly dependent";
    return r;
  }
  r.verdict = verdict_of(static_cast<long>(d.product_dimension) == d.expected);
  return r;
}

template <class F>
PredicateReport check_adjusted(Analysis<F>& a, std::optional<int> l = std::nullopt) {
  if (!a.equigenerated()) return unknown_report("adjusted", "generators of different degrees");
  std::size_t count;
  if (l) {
    count = static_cast<std::size_t>(*l);
  } else {
    auto spread = a.analytic_spread();
    if (!spread.value) return unknown_report("adjusted", "analytic spread unknown");
    count = static_cast<std::size_t>(*spread.value);
  }
  if (count < 1 || count > a.mu()) return unknown_report("adjusted", "l must lie between 1 and mu", {{"l", count}});
  std::vector<PredicateReport> runs;
  for (auto s : a.settings().seeds) runs.push_back(adjusted_for_seed(a, s, count));
  return combine_seeds("adjusted", {{"l", count}}, a.settings().seeds, runs);
}

// ---------------------------------------------------------------- Valabrega-Valla

struct VVData {
  bool prefix_regular = false;
  std::optional<bool> gr_regular;   // initial forms regular in gr, decided by Hilbert series
  json gr_steps = json::array();
  json powers = json::array();
  std::optional<int> first_failure;
  int checked_to = 0;
};

/// Whether the initial forms of the first g generic forms are a regular
/// sequence in gr_I(R): each cut must multiply the Hilbert series by (1 - t).
template <class F>
std::optional<bool> gr_regular_sequence(Analysis<F>& a, std::uint64_t seed, std::size_t g, json& steps) {
  if (!a.rees()) return std::nullopt;
  const auto* prev = &a.gr_cut_series(seed, 0);
  if (!*prev) return std::nullopt;
  for (std::size_t i = 1; i <= g && i <= a.mu(); ++i) {
    const auto& next = a.gr_cut_series(seed, i);
    if (!next) return std::nullopt;
    bool regular = *next == (*prev)->cut_by_regular(1);
    steps.push_back({{"form", i}, {"regular", regular}, {"hilbert_numerator", next->numerator_string()}});
    if (!regular) return false;
    prev = &next;
  }
  return true;
}

template <class F>
VVData valabrega_valla(Analysis<F>& a, std::uint64_t seed, int n_max) {
  VVData out;
  const std::size_t g = static_cast<std::size_t>(a.height());
  std::vector<Polynomial<F>> prefix = generic_forms(a.generators(), g, seed).forms;
  out.prefix_regular = Ideal<F>(a.ring(), prefix).height() == static_cast<int>(g);
  if (!out.prefix_regular) return out;
  out.gr_regular = gr_regular_sequence(a, seed, g, out.gr_steps);
  PowerTower<F>& tw = a.tower();
  Ideal<F> prefix_ideal(a.ring(), prefix);
  for (int n = 1; n <= n_max; ++n) {
    if (!a.degree_within_limits(n * a.degree())) break;
    const int deg = n * a.degree();
    std::size_t meet = intersection_dimension(graded_piece(a.ring(), prefix, deg), tw.piece(n));
    std::size_t product = product_piece_dimension(tw, prefix, n - 1);
    json entry{{"n", n}, {"meet_dimension", meet}, {"product_dimension", product}};
    bool equal = meet == product;
    if (equal && n <= a.settings().vv_groebner_max) {
      // All degrees: (f) ∩ I^n against (f) I^{n-1} as ideals.
      Ideal<F> meet_ideal = intersect(prefix_ideal, Ideal<F>(a.ring(), tw.basis(n)));
      std::vector<Polynomial<F>> products;
      for (const auto& f : prefix)
        for (const auto& b : tw.basis(n - 1)) products.push_back(f * b);
      equal = Ideal<F>(a.ring(), products).contains(meet_ideal);
      entry["compared_as_ideals"] = true;
    }
    entry["equal"] = equal;
    out.powers.push_back(entry);
    out.checked_to = n;
    if (!equal && !out.first_failure) out.first_failure = n;
  }
  return out;
}

template <class F>
PredicateReport vv_for_seed(Analysis<F>& a, std::uint64_t seed, int n_max, const std::string& name) {
  PredicateReport r;
  r.name = name;
  VVData d = valabrega_valla(a, seed, n_max);
  if (!d.prefix_regular) {
    r.reason = "the generic forms of length ht I are not a regular sequence";
    return r;
  }
  r.certificate["powers"] = d.powers;
  r.certificate["first_failure"] = d.first_failure ? json(*d.first_failure) : json(nullptr);
  if (d.gr_regular) {
    r.certificate["initial_forms_in_gr"] = d.gr_steps;
    if (*d.gr_regular && d.first_failure) {
      r.reason = "gr certificate and power checks disagree";
      return r;
    }
    r.verdict = verdict_of(*d.gr_regular);
    r.scope = d.first_failure ? "fails at n = " + std::to_string(*d.first_failure) : "all n";
    return r;
  }
  if (d.first_failure) {
    r.verdict = Verdict::no;
    r.scope = "fails at n = " + std::to_string(*d.first_failure);
  } else {
    r.verdict = Verdict::yes;
    r.scope = "n <= " + std::to_string(d.checked_to);
  }
  return r;
}

template <class F>
PredicateReport check_vv(Analysis<F>& a, const std::string& name = "vv") {
  if (!a.equigenerated()) return unknown_report(name, "generators of different degrees");
  const int n_max = a.n_max();
  std::vector<PredicateReport> runs;
  for (auto s : a.settings().seeds) runs.push_back(vv_for_seed(a, s, n_max, name));
  json params{{"n_max", n_max}, {"g", a.height()}};
  return combine_seeds(name, params, a.settings().seeds, runs);
}

template <class F>
PredicateReport check_regular_in_gr(Analysis<F>& a) {
  return check_vv(a, "reg-in-gr");
}

// ---------------------------------------------------------------- generic CI, perfection

template <class F>
PredicateReport check_generically_ci(Analysis<F>& a) {
  if (a.height() != 2) return unknown_report("gen-ci", "only height two ideals are handled");
  const auto* p = a.presentation();
  if (!p) return unknown_report("gen-ci", "minimal presentation unavailable");
  PredicateReport r;
  r.name = "gen-ci";
  const int k = static_cast<int>(a.mu()) - 2;
  std::vector<Polynomial<F>> gens = minors(p->entries, k, a.ring());
  for (const auto& g : a.generators()) gens.push_back(g);
  const int h = Ideal<F>(a.ring(), gens).height();
  r.certificate = {{"minor_size", k}, {"height_of_ideal_plus_minors", h}, {"required", 3}};
  r.verdict = verdict_of(h >= 3);
  return r;
}

/// Column degrees of the Hilbert-Burch matrix minus d, for height-2 perfect ideals.
template <class F>
std::optional<std::vector<int>> hilbert_burch_shifts(Analysis<F>& a) {
  if (!a.equigenerated() || a.height() != 2 || a.projective_dimension() != 2) return std::nullopt;
  std::vector<int> m;
  for (int j : a.betti().degrees(2)) m.push_back(j - a.degree());
  return m;
}

template <class F>
PredicateReport check_perfect(Analysis<F>& a) {
  auto pd = a.projective_dimension();
  if (!pd) return unknown_report("perfect", "the resolution is incomplete below the cutoff");
  PredicateReport r;
  r.name = "perfect";
  r.certificate = {{"projective_dimension", *pd}, {"height", a.height()}};
  r.verdict = verdict_of(*pd == a.height());
  if (auto m = hilbert_burch_shifts(a)) r.certificate["hilbert_burch"] = {{"d", a.degree()}, {"m", *m}};
  return r;
}

// ---------------------------------------------------------------- multiplicity formulas

template <class F>
PredicateReport check_multiplicity_formulas(Analysis<F>& a) {
  auto m = hilbert_burch_shifts(a);
  if (!m) return unknown_report("mult-formulas", "needs a height two perfect equigenerated ideal");
  PredicateReport r;
  r.name = "mult-formulas";
  const long d = a.degree();
  long sum = 0, squares = 0;
  for (int v : *m) sum += v, squares += static_cast<long>(v) * v;
  mpz_class e = a.multiplicity();
  mpz_class closed = mpz_class(d * d + squares);
  bool ok = true;
  json part1{{"e_from_hilbert_series", to_json_number(e)}, {"sum_m", sum}};
  if (closed % 2 != 0) {
    part1["closed_form_numerator"] = to_json_number(closed);
    ok = false;
  } else {
    closed /= 2;
    part1["e_closed_form"] = to_json_number(closed);
    ok = ok && closed == e;
  }
  part1["sum_m_equals_d"] = sum == d;
  ok = ok && sum == d;
  r.certificate["perfect_height_two"] = part1;

  // Conditional part: three variables, mu >= 4, ell = 3, Rees CM, indeg(Q) >= 3.
  json hyp;
  json part2;
  hyp["three_variables"] = a.num_vars() == 3;
  if (a.num_vars() != 3) {
    r.certificate["conditional"] = {{"hypotheses", hyp}, {"applicable", false}};
    r.verdict = verdict_of(ok);
    return r;
  }
  hyp["mu_at_least_4"] = a.mu() >= 4;
  auto spread = a.analytic_spread();
  hyp["ell_equals_3"] = spread.value ? json(*spread.value == 3) : json("unknown");
  const CMResult* rees_cm = a.mu() >= 4 ? a.rees_cm() : nullptr;
  hyp["rees_cm"] = rees_cm ? json(rees_cm->cohen_macaulay && rees_cm->exact) : json("unknown");
  IndegData indeg = fiber_indeg(a, 2);
  bool indeg3 = indeg.consistent && indeg.none_up_to_bound;
  hyp["indeg_Q_at_least_3"] = indeg3;
  bool applicable = a.mu() >= 4 && spread.value == 3 && rees_cm && rees_cm->cohen_macaulay && rees_cm->exact && indeg3;
  part2 = {{"hypotheses", hyp}, {"applicable", applicable}};
  if (applicable) {
    auto eF = a.fiber_multiplicity();
    long expected = detail::binomial(static_cast<int>(a.mu()) - 1, 2);
    part2["e_fiber_expected"] = expected;
    if (eF) {
      part2["e_fiber"] = to_json_number(*eF);
      ok = ok && *eF == expected;
    } else {
      part2["e_fiber"] = "unknown";
    }
    json rs = json::array();
    bool all_two = true;
    for (auto s : a.settings().seeds) {
      const auto& red = a.reduction(s);
      rs.push_back(red.value ? json(*red.value) : json("unknown"));
      all_two = all_two && red.value == 2;
    }
    part2["reduction_numbers"] = rs;
    ok = ok && all_two;
    if (const BettiTable* b = a.fiber_betti(); b && b->complete) {
      bool linear = true;
      for (const auto& [k, v] : b->entries)
        if (k.first >= 1 && k.second != k.first + 2) linear = false;
      part2["fiber_resolution_3_linear"] = linear;
      ok = ok && linear;
    } else {
      part2["fiber_resolution_3_linear"] = "unknown";
      ok = false;
    }
  }
  r.certificate["conditional"] = part2;
  r.verdict = verdict_of(ok);
  return r;
}

// ---------------------------------------------------------------- degree of the map

template <class F>
PredicateReport check_map_degree(Analysis<F>& a) {
  auto m = hilbert_burch_shifts(a);
  if (!m || a.num_vars() != 3)
    return unknown_report("map-degree", "needs a height two perfect equigenerated ideal in three variables");
  if (a.mu() <= 2) return unknown_report("map-degree", "complete intersections are excluded");
  PredicateReport gci = check_generically_ci(a);
  if (gci.verdict != Verdict::yes) return unknown_report("map-degree", "the ideal is not generically a complete intersection");
  auto eF = a.fiber_multiplicity();
  if (!eF) return unknown_report("map-degree", "fiber multiplicity unavailable");
  PredicateReport r;
  r.name = "map-degree";
  const long d = a.degree();
  mpz_class numerator = mpz_class(d * d) - a.multiplicity();
  long pairs = 0;
  for (std::size_t i = 0; i < m->size(); ++i)
    for (std::size_t j = i + 1; j < m->size(); ++j) pairs += static_cast<long>((*m)[i]) * (*m)[j];
  r.certificate = {{"d_squared_minus_e", to_json_number(numerator)},
                   {"e_fiber", to_json_number(*eF)},
                   {"sum_of_pairwise_m_products", pairs}};
  bool integral = numerator % *eF == 0;
  r.certificate["integral"] = integral;
  if (!integral) {
    r.verdict = Verdict::no;
    r.reason = "non-integral degree";
    return r;
  }
  mpz_class deg = numerator / *eF;
  r.certificate["degree"] = to_json_number(deg);
  bool ok = numerator == pairs;
  if (const CMResult* rc = a.rees_cm(); rc && rc->exact) {
    r.certificate["rees_cm"] = rc->cohen_macaulay;
    if (rc->cohen_macaulay) {
      bool linear = *a.linearly_presented();
      r.certificate["linearly_presented"] = linear;
      r.certificate["linear_iff_birational"] = linear == (deg == 1);
      ok = ok && linear == (deg == 1);
    }
  }
  r.verdict = verdict_of(ok);
  return r;
}

// ---------------------------------------------------------------- dispatch

inline const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names{"gs",     "valla-dim", "indeg",   "tight",         "adjusted",  "vv",
                                              "reg-in-gr", "gen-ci", "perfect", "mult-formulas", "map-degree"};
  return names;
}

struct PredicateParams {
  std::optional<int> s, n, l;
};

template <class F>
PredicateReport run_predicate(Analysis<F>& a, const std::string& name, const PredicateParams& p) {
  if (name == "gs") return check_gs(a, p.s.value_or(3));
  if (name == "valla-dim") return check_valla_dimension(a);
  if (name == "indeg") return check_indeg(a, p.s);
  if (name == "tight") return check_tight(a, p.n.value_or(1));
  if (name == "adjusted") return check_adjusted(a, p.l);
  if (name == "vv") return check_vv(a);
  if (name == "reg-in-gr") return check_regular_in_gr(a);
  if (name == "gen-ci") return check_generically_ci(a);
  if (name == "perfect") return check_perfect(a);
  if (name == "mult-formulas") return check_multiplicity_formulas(a);
  if (name == "map-degree") return check_map_degree(a);
  throw std::invalid_argument("unknown predicate '" + name + "'");
}

}  // namespace fiberlab

#endif  // FIBERLAB_PREDICATES_HPP
