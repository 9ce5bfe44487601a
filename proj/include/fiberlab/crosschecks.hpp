// Consistency checks between proved implications: each check evaluates the
// hypotheses and both sides on one ideal and one seed. A violation means a
// computation is wrong, since the implications themselves are theorems.

#ifndef FIBERLAB_CROSSCHECKS_HPP
#define FIBERLAB_CROSSCHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fiberlab/predicates.hpp"

namespace fiberlab {

struct CrossCheck {
  std::string name;
  std::uint64_t seed = 0;
  bool applicable = false;
  bool violated = false;
  json detail = json::object();

  json to_json() const {
    return {{"check", name}, {"seed", seed}, {"applicable", applicable}, {"violated", violated}, {"detail", detail}};
  }
};

namespace detail {

/// Whether the first g generic forms are a regular sequence on k[I_d]: exactly
/// through the fiber presentation, or degreewise for n <= n_max.
template <class F>
json fiber_regular_prefix(Analysis<F>& a, std::uint64_t seed, std::size_t g, int n_max, bool& regular) {
  json out;
  if (const auto* fp = a.fiber()) {
    auto ls = a.forms_in_y(seed, g, fp->fiber_ring, 0);
    std::vector<Polynomial<F>> cur = fp->relations;
    HilbertSeries prev = Ideal<F>(fp->fiber_ring, cur).hilbert_series();
    regular = true;
    for (const auto& l : ls) {
      cur.push_back(l);
      HilbertSeries next = Ideal<F>(fp->fiber_ring, cur).hilbert_series();
      if (!(next == prev.cut_by_regular(1))) regular = false;
      prev = next;
    }
    out["method"] = "Hilbert series of the fiber cut by the forms";
    return out;
  }
  // dim [I^n / (f) I^{n-1}]_{nd} must equal the n-th coefficient of (1-t)^g H_F(t).
  PowerTower<F>& tw = a.tower();
  std::vector<Polynomial<F>> prefix = generic_forms(a.generators(), g, seed).forms;
  regular = true;
  json rows = json::array();
  for (int n = 1; n <= n_max && a.degree_within_limits(n * a.degree()); ++n) {
    long quotient = static_cast<long>(tw.dimension(n)) - static_cast<long>(product_piece_dimension(tw, prefix, n - 1));
    long expected = 0;
    for (int k = 0; k <= static_cast<int>(g) && k <= n; ++k)
      expected += (k % 2 ? -1 : 1) * binomial(static_cast<int>(g), k) * static_cast<long>(tw.dimension(n - k));
    rows.push_back({n, quotient, expected});
    if (quotient != expected) regular = false;
  }
  out["method"] = "graded pieces [n, dim quotient, expected]";
  out["pieces"] = rows;
  return out;
}

/// Forms to test adjustment on: generic combinations and random subsets of the
/// minimal generators, one of each size.
template <class F>
std::vector<std::vector<Polynomial<F>>> adjustment_samples(Analysis<F>& a, std::uint64_t seed) {
  std::vector<std::vector<Polynomial<F>>> out;
  auto rng = make_rng(seed, Stream::subsets);
  const std::size_t m = a.mu();
  for (std::size_t l = 1; l <= m; ++l) {
    out.push_back(generic_forms(a.generators(), l, seed, l).forms);
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    for (std::size_t i = 0; i < l; ++i) std::swap(idx[i], idx[i + rng() % (m - i)]);
    std::vector<Polynomial<F>> subset;
    for (std::size_t i = 0; i < l; ++i) subset.push_back(a.generators()[idx[i]]);
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace detail

template <class F>
std::vector<CrossCheck> theorem_crosschecks(Analysis<F>& a, std::uint64_t seed) {
  std::vector<CrossCheck> out;
  if (!a.equigenerated()) return out;
  const int g = a.height();
  const int n_max = a.n_max();
  auto spread = a.analytic_spread();
  const auto& red = a.reduction(seed);
  const CMResult* fiber_cm = a.fiber_cm();
  const bool cm_known = fiber_cm && fiber_cm->exact;
  PredicateReport vv = vv_for_seed(a, seed, n_max, "vv");

  // Analytic deviation one: tight  <=>  fiber CM, given gr-regularity of the
  // first g forms and that all ell forms generate a reduction.
  {
    CrossCheck c{"tight_iff_fiber_cm", seed};
    bool deviation_one = spread.value && *spread.value == g + 1;
    bool gr_regular = vv.verdict == Verdict::yes && vv.scope == "all n";
    c.detail = {{"deviation_one", deviation_one}, {"initial_forms_regular_in_gr", gr_regular},
                {"forms_generate_reduction", red.is_reduction}, {"fiber_cm_known", cm_known}};
    c.applicable = deviation_one && gr_regular && red.is_reduction && cm_known && a.power_within_cutoff(1);
    if (c.applicable) {
      bool tight = tight_at(a, a.forms(seed).forms, 1).tight;
      c.detail["tight"] = tight;
      c.detail["fiber_cm"] = fiber_cm->cohen_macaulay;
      c.violated = tight != fiber_cm->cohen_macaulay;
    }
    out.push_back(c);
  }

  // Fiber CM and a minimal reduction  =>  the reduction forms are adjusted.
  {
    CrossCheck c{"fiber_cm_implies_adjusted", seed};
    c.applicable = cm_known && fiber_cm->cohen_macaulay && red.is_reduction;
    c.detail = {{"fiber_cm", cm_known ? json(fiber_cm->cohen_macaulay) : json("unknown")},
                {"forms_generate_reduction", red.is_reduction}};
    if (c.applicable) {
      AdjustData d = adjustment(a, a.forms(seed).forms);
      c.detail["mu_JI"] = d.product_dimension;
      c.detail["l_mu_minus_binomial"] = d.expected;
      c.violated = static_cast<long>(d.product_dimension) != d.expected;
    }
    out.push_back(c);
  }

  // VV for the first g forms  =>  they are regular on the fiber.
  {
    CrossCheck c{"vv_implies_fiber_regular", seed};
    c.applicable = vv.verdict == Verdict::yes;
    c.detail = {{"vv", verdict_name(vv.verdict)}, {"vv_scope", vv.scope}};
    if (c.applicable) {
      bool regular = false;
      c.detail["fiber_check"] = detail::fiber_regular_prefix(a, seed, static_cast<std::size_t>(g), n_max, regular);
      c.detail["regular_on_fiber"] = regular;
      c.violated = !regular;
    }
    out.push_back(c);
  }

  // No quadratic fiber relations  =>  every independent set is adjusted; and
  // mu(JI) <= l mu - C(l, 2) always.
  {
    CrossCheck adj{"no_quadrics_implies_adjusted", seed};
    CrossCheck bound{"adjustment_upper_bound", seed};
    bound.applicable = true;
    IndegData indeg = fiber_indeg(a, 2);
    adj.applicable = indeg.consistent && indeg.none_up_to_bound;
    adj.detail["no_relations_in_degrees_1_2"] = adj.applicable;
    json samples = json::array();
    for (const auto& fs : detail::adjustment_samples(a, seed)) {
      AdjustData d = adjustment(a, fs);
      if (!d.independent) continue;
      samples.push_back({fs.size(), d.product_dimension, d.expected});
      if (static_cast<long>(d.product_dimension) > d.expected) bound.violated = true;
      if (adj.applicable && static_cast<long>(d.product_dimension) != d.expected) adj.violated = true;
    }
    adj.detail["samples"] = samples;
    bound.detail["samples_l_dim_bound"] = samples;
    out.push_back(adj);
    out.push_back(bound);
  }

  // Tightness in power n persists in power n + 1.
  {
    CrossCheck c{"tightness_monotone", seed};
    if (spread.value && *spread.value >= 1) {
      json seq = json::array();
      bool prev = false;
      for (int n = 1; n <= n_max && a.power_within_cutoff(n); ++n) {
        bool t = tight_at(a, a.forms(seed).forms, n).tight;
        seq.push_back(t);
        if (prev && !t) c.violated = true;
        prev = t;
      }
      c.applicable = seq.size() >= 2;
      c.detail["tight_by_power"] = seq;
    }
    out.push_back(c);
  }

  // ht gr_+ <= dim gr - dim gr/gr_+ must not exceed ht I.
  {
    CrossCheck c{"height_gr_plus_at_most_height", seed};
    if (const auto* rp = a.rees()) {
      auto gens = rp->gr;
      for (auto& y : a.rees_y_variables()) gens.push_back(y);
      int dim_gr = *a.gr_dimension();
      int dim_quotient = Ideal<F>(rp->standard_ring, gens).dimension();
      int bound = dim_gr - dim_quotient;
      c.applicable = true;
      c.detail = {{"dim_gr", dim_gr}, {"dim_gr_mod_gr_plus", dim_quotient}, {"height_upper_bound", bound},
                  {"height_I", g}};
      c.violated = bound > g || dim_gr != static_cast<int>(a.num_vars()) || dim_quotient != a.dimension();
    }
    out.push_back(c);
  }

  // Q R[y] is contained in the Rees ideal.
  {
    CrossCheck c{"fiber_ideal_inside_rees_ideal", seed};
    const auto* rp = a.rees();
    const auto* fp = rp ? a.fiber() : nullptr;
    if (rp && fp) {
      Ideal<F> rees_ideal(rp->standard_ring, rp->rees);
      std::vector<int> shift(a.mu());
      for (std::size_t i = 0; i < a.mu(); ++i) shift[i] = static_cast<int>(rp->num_x + i);
      std::size_t outside = 0;
      for (const auto& q : fp->relations)
        if (!rees_ideal.contains(map_variables(q, rp->standard_ring, shift))) ++outside;
      c.applicable = true;
      c.detail = {{"relations", fp->relations.size()}, {"outside", outside}};
      c.violated = outside > 0;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace fiberlab

#endif  // FIBERLAB_CROSSCHECKS_HPP
