// Lazily computed invariants of one homogeneous ideal: the ideal itself, its
// resolution data, and its blow-up algebras. Every expensive step is bounded
// by Settings; a step that exceeds its bound is recorded instead of failing.

#ifndef FIBERLAB_ANALYSIS_HPP
#define FIBERLAB_ANALYSIS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "fiberlab/blowup.hpp"
#include "fiberlab/graded.hpp"
#include "fiberlab/ideal.hpp"
#include "fiberlab/minors.hpp"
#include "fiberlab/resolution.hpp"

namespace fiberlab {

using json = nlohmann::json;

struct Settings {
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::optional<int> n_max;          // default: max(reduction number + 2, 5)
  int cutoff = 60;                   // largest degree of any graded piece or resolution bound
  long piece_limit = 3000;           // largest number of monomials in a graded piece
  int trials = 3;                    // random systems of parameters per CM test
  int r_max = 12;                    // reduction number search limit
  int indeg_up_to = 4;               // fiber degrees inspected for indeg(Q)
  int vv_groebner_max = 2;           // powers checked by full ideal comparison in VV
  std::size_t gb_budget = 2000;      // S-pair reductions per blow-up elimination

  json to_json() const {
    json j;
    j["seeds"] = seeds;
    j["n_max"] = n_max ? json(*n_max) : json("max(r+2,5)");
    j["cutoff"] = cutoff;
    j["piece_limit"] = piece_limit;
    j["trials"] = trials;
    j["r_max"] = r_max;
    j["indeg_up_to"] = indeg_up_to;
    j["vv_groebner_max"] = vv_groebner_max;
    j["gb_budget"] = gb_budget;
    return j;
  }
};

inline json to_json_number(const mpz_class& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

inline json betti_json(const BettiTable& b) {
  json rows = json::array();
  for (const auto& [k, v] : b.entries) rows.push_back({k.first, k.second, v});
  return rows;
}

inline json int_poly_json(const IntPoly& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(to_json_number(c));
  return out;
}

/// FNV-1a over a canonical text, for labelling inputs in reports.
inline std::string text_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 15];
  return out;
}

template <class F>
json polys_json(const std::vector<Polynomial<F>>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

struct SpreadResult {
  std::optional<int> value;
  int lower_bound = 0;
  std::string method;
};

struct ReductionResult {
  std::optional<int> value;       // least r with J I^r = I^{r+1}
  bool is_reduction = false;      // J generates a reduction (decided or found)
  bool decided = false;           // false when bounds stopped the search
  std::string method;
  int searched_to = -1;
};

template <class F>
class Analysis {
 public:
  Analysis(RingPtr<F> ring, std::vector<Polynomial<F>> generators, Settings settings,
           PolyMatrix<F> given_matrix = {})
      : ring_(std::move(ring)),
        input_(std::move(generators)),
        matrix_(std::move(given_matrix)),
        settings_(std::move(settings)) {
    if (input_.empty()) throw std::invalid_argument("the input defines the zero ideal");
    for (const auto& g : input_)
      if (!g.is_homogeneous()) throw std::invalid_argument("generator " + g.to_string() + " is not homogeneous");
    mingens_ = minimal_generators(input_);
    degree_ = common_degree(mingens_);
    ideal_ = Ideal<F>(ring_, mingens_);
  }

  const RingPtr<F>& ring() const { return ring_; }
  const Settings& settings() const { return settings_; }
  const std::vector<Polynomial<F>>& input_generators() const { return input_; }
  const PolyMatrix<F>& given_matrix() const { return matrix_; }
  const std::vector<Polynomial<F>>& generators() const { return mingens_; }
  std::size_t mu() const { return mingens_.size(); }
  std::size_t num_vars() const { return ring_->num_vars(); }
  /// Common degree of the minimal generators, or -1.
  int degree() const { return degree_; }
  bool equigenerated() const { return degree_ > 0; }
  const Ideal<F>& ideal() const { return ideal_; }
  std::string hash() const {
    std::string text = ring_->field().spec().to_string();
    for (const auto& n : ring_->names()) text += "," + n;
    for (const auto& g : mingens_) text += ";" + g.to_string();
    return text_hash(text);
  }

  /// Reasons for every bound that stopped a computation, in order of occurrence.
  const std::vector<std::string>& bounds_hit() const { return bounds_hit_; }

  // ---- the ideal and R/I ----

  int height() { return memo(height_, [&] { return ideal_.height(); }); }
  int dimension() { return memo(dimension_, [&] { return ideal_.dimension(); }); }
  const HilbertSeries& hilbert() { return memo(hilbert_, [&] { return ideal_.hilbert_series(); }); }
  mpz_class multiplicity() { return hilbert().multiplicity(); }

  const BettiTable& betti() {
    return memo(betti_, [&] {
      BettiOptions opt;
      opt.seed = settings_.seeds.front();
      opt.ceiling = settings_.cutoff;
      return betti_table(ring_, mingens_, opt);
    });
  }
  std::optional<int> projective_dimension() {
    if (!betti().complete) return std::nullopt;
    return betti().projective_dimension();
  }

  const PresentationMatrix<F>* presentation() {
    if (!presentation_) {
      if (!betti().complete) {
        note_bound("the resolution of R/I is incomplete below degree " + std::to_string(settings_.cutoff));
        presentation_ = PresentationMatrix<F>{};
      } else {
        presentation_ = minimal_presentation(ring_, mingens_, betti());
      }
    }
    return presentation_->complete ? &*presentation_ : nullptr;
  }

  /// Height of the ideal of k x k minors of the minimal presentation.
  std::optional<int> minors_height(int k) {
    auto it = minors_heights_.find(k);
    if (it != minors_heights_.end()) return it->second;
    const PresentationMatrix<F>* p = presentation();
    if (!p) return std::nullopt;
    auto gens = minors(p->entries, k, ring_);
    int h = gens.empty() ? 0 : Ideal<F>(ring_, gens).height();
    minors_heights_.emplace(k, h);
    return h;
  }

  std::optional<std::size_t> linear_rank_value() {
    const PresentationMatrix<F>* p = presentation();
    if (!p) return std::nullopt;
    if (!linear_rank_) linear_rank_ = linear_rank(*p, ring_, settings_.seeds.front(), 5);
    return linear_rank_;
  }
  std::optional<bool> linearly_presented() {
    const PresentationMatrix<F>* p = presentation();
    if (!p || !equigenerated()) return std::nullopt;
    for (int c : p->column_degrees)
      if (c != degree_ + 1) return false;
    return true;
  }

  // ---- powers and the fiber ----

  PowerTower<F>& tower() {
    require_equigenerated();
    if (!tower_) tower_.emplace(mingens_);
    return *tower_;
  }
  /// Whether pieces of this degree respect the degree cutoff and the piece limit.
  bool degree_within_limits(int deg) const {
    if (deg > settings_.cutoff) return false;
    const int n = static_cast<int>(num_vars());
    return detail::binomial(deg + n - 1, n - 1) <= settings_.piece_limit;
  }
  /// Whether [I^n]_{nd} and the pieces one power up can be formed.
  bool power_within_cutoff(int n) const { return equigenerated() && degree_within_limits((n + 1) * degree_); }

  /// The full fiber presentation, or nullptr when the S-pair budget ran out.
  const FiberPresentation<F>* fiber() {
    require_equigenerated();
    if (!fiber_attempted_) {
      fiber_attempted_ = true;
      try {
        fiber_ = fiber_presentation(mingens_, -1, settings_.gb_budget);
      } catch (const BoundExceeded& e) {
        note_bound(std::string("fiber presentation: ") + e.what());
      }
    }
    return fiber_ ? &*fiber_ : nullptr;
  }
  /// Relations of the fiber up to degree indeg_up_to (always computed by a
  /// truncated elimination, independent of the full one).
  const FiberPresentation<F>* fiber_low_degrees() {
    require_equigenerated();
    if (!fiber_low_attempted_) {
      fiber_low_attempted_ = true;
      try {
        fiber_low_ = fiber_presentation(mingens_, settings_.indeg_up_to, settings_.gb_budget);
      } catch (const BoundExceeded& e) {
        note_bound(std::string("truncated fiber presentation: ") + e.what());
      }
    }
    return fiber_low_ ? &*fiber_low_ : nullptr;
  }

  /// dim [Q]_n = C(m+n-1, n) - dim [I^n]_{nd}.
  std::optional<long> relation_count_from_powers(int n) {
    if (!equigenerated() || !degree_within_limits(n * degree_)) return std::nullopt;
    long all = detail::binomial(static_cast<int>(mu()) + n - 1, n);
    return all - static_cast<long>(tower().dimension(n));
  }

  SpreadResult analytic_spread() {
    if (spread_) return *spread_;
    SpreadResult out;
    const int ceiling = static_cast<int>(std::min(mu(), num_vars()));
    out.lower_bound = jacobian_rank();
    if (out.lower_bound == ceiling) {
      out.value = ceiling;
      out.method = "jacobian rank reaches min(mu, dim R)";
    } else if (const auto* fp = fiber()) {
      out.value = fp->ideal().dimension();
      out.method = "dimension of the fiber presentation";
    } else {
      out.method = "jacobian rank lower bound only";
    }
    spread_ = out;
    return out;
  }

  std::optional<HilbertSeries> fiber_hilbert() {
    const auto* fp = fiber();
    if (!fp) return std::nullopt;
    return memo(fiber_hilbert_, [&] { return fp->ideal().hilbert_series(); });
  }
  std::optional<mpz_class> fiber_multiplicity() {
    auto hs = fiber_hilbert();
    if (!hs) return std::nullopt;
    return hs->multiplicity();
  }
  /// Degrees of a minimal generating set of Q.
  std::optional<std::vector<int>> fiber_relation_degrees() {
    const auto* fp = fiber();
    if (!fp) return std::nullopt;
    if (!fiber_rel_degrees_) {
      std::vector<int> ds;
      for (const auto& q : minimal_generators(fp->relations)) ds.push_back(q.degree());
      std::sort(ds.begin(), ds.end());
      fiber_rel_degrees_ = ds;
    }
    return fiber_rel_degrees_;
  }
  /// Least degree of a nonzero element of Q; nullopt when Q = 0 or unknown.
  std::optional<int> fiber_indeg_exact() {
    auto ds = fiber_relation_degrees();
    if (!ds || ds->empty()) return std::nullopt;
    return ds->front();
  }
  const BettiTable* fiber_betti() {
    const auto* fp = fiber();
    if (!fp) return nullptr;
    return &memo(fiber_betti_, [&] {
      BettiOptions opt;
      opt.seed = settings_.seeds.front();
      opt.ceiling = settings_.cutoff;
      return betti_table(fp->fiber_ring, fp->relations, opt);
    });
  }
  const DepthResult* fiber_depth() {
    const auto* fp = fiber();
    if (!fp) return nullptr;
    return &memo(fiber_depth_, [&] {
      return bounded("fiber depth", [&] { return depth(fp->fiber_ring, fp->relations, depth_options()); });
    });
  }
  const CMResult* fiber_cm() {
    const auto* fp = fiber();
    if (!fp) return nullptr;
    return &memo(fiber_cm_, [&] {
      return bounded("fiber Cohen-Macaulay test", [&] {
        return cohen_macaulay_test(fp->fiber_ring, fp->relations, settings_.seeds.front(), settings_.trials, true,
                                   settings_.gb_budget);
      });
    });
  }

  // ---- Rees algebra and associated graded ring ----

  const ReesPresentation<F>* rees() {
    require_equigenerated();
    if (!rees_attempted_) {
      rees_attempted_ = true;
      try {
        rees_ = rees_presentation(mingens_, settings_.gb_budget);
      } catch (const BoundExceeded& e) {
        note_bound(std::string("Rees presentation: ") + e.what());
      }
    }
    return rees_ ? &*rees_ : nullptr;
  }
  const CMResult* rees_cm() {
    const auto* rp = rees();
    if (!rp) return nullptr;
    return &memo(rees_cm_, [&] {
      return bounded("Rees Cohen-Macaulay test", [&] {
        return cohen_macaulay_test(rp->standard_ring, rp->rees, settings_.seeds.front(), settings_.trials, true,
                                   settings_.gb_budget);
      });
    });
  }
  std::optional<int> rees_dimension() {
    const auto* rp = rees();
    if (!rp) return std::nullopt;
    return memo(rees_dim_, [&] { return Ideal<F>(rp->standard_ring, rp->rees).dimension(); });
  }
  std::optional<int> gr_dimension() {
    const auto* rp = rees();
    if (!rp) return std::nullopt;
    return memo(gr_dim_, [&] { return Ideal<F>(rp->standard_ring, rp->gr).dimension(); });
  }
  const DepthResult* gr_depth() {
    const auto* rp = rees();
    if (!rp) return nullptr;
    return &memo(gr_depth_, [&] {
      return bounded("depth of gr", [&] { return depth(rp->standard_ring, rp->gr, depth_options()); });
    });
  }
  /// The y-variables of the Rees ring, i.e. the generators of gr_+.
  std::vector<Polynomial<F>> rees_y_variables() {
    const auto* rp = rees();
    std::vector<Polynomial<F>> ys;
    if (!rp) return ys;
    for (std::size_t i = 0; i < mu(); ++i) ys.push_back(Polynomial<F>::variable(rp->standard_ring, rp->num_x + i));
    return ys;
  }

  // ---- generic forms and reductions ----

  /// ell(I) generic forms for a seed (or mu forms when ell is unknown, so that
  /// prefixes stay usable); the forms of smaller counts are prefixes.
  const GenericForms<F>& forms(std::uint64_t seed) {
    auto it = forms_.find(seed);
    if (it != forms_.end()) return it->second;
    require_equigenerated();
    auto spread = analytic_spread();
    std::size_t count = spread.value ? static_cast<std::size_t>(*spread.value) : mu();
    return forms_.emplace(seed, generic_forms(mingens_, count, seed)).first->second;
  }

  /// Linear forms of the fiber ring (or any ring whose variables start at
  /// `offset` with the y's) matching the first `count` generic forms.
  std::vector<Polynomial<F>> forms_in_y(std::uint64_t seed, std::size_t count, const RingPtr<F>& ring,
                                        std::size_t offset) {
    const auto& gf = forms(seed);
    std::vector<Polynomial<F>> out;
    for (std::size_t k = 0; k < count && k < gf.coefficients.size(); ++k) {
      Polynomial<F> l(ring);
      for (std::size_t j = 0; j < mu(); ++j) l += Polynomial<F>::variable(ring, offset + j).scaled(gf.coefficients[k][j]);
      out.push_back(std::move(l));
    }
    return out;
  }

  /// Hilbert series of gr modulo the first k generic forms of a seed (as
  /// degree one elements of gr_+); nullopt when a bound stopped it.
  const std::optional<HilbertSeries>& gr_cut_series(std::uint64_t seed, std::size_t k) {
    auto key = std::make_pair(seed, k);
    auto it = gr_cuts_.find(key);
    if (it != gr_cuts_.end()) return it->second;
    std::optional<HilbertSeries> hs;
    if (const auto* rp = rees()) {
      std::vector<Polynomial<F>> gens = rp->gr;
      for (auto& l : forms_in_y(seed, k, rp->standard_ring, rp->num_x)) gens.push_back(std::move(l));
      try {
        hs = Ideal<F>(rp->standard_ring, gens, settings_.gb_budget).hilbert_series();
      } catch (const BoundExceeded& e) {
        note_bound(std::string("gr modulo generic forms: ") + e.what());
      }
    }
    return gr_cuts_.emplace(key, std::move(hs)).first->second;
  }

  const ReductionResult& reduction(std::uint64_t seed) {
    auto it = reductions_.find(seed);
    if (it != reductions_.end()) return it->second;
    ReductionResult out;
    auto spread = analytic_spread();
    if (!spread.value) {
      out.method = "analytic spread unknown";
      return reductions_.emplace(seed, out).first->second;
    }
    const std::size_t ell = static_cast<std::size_t>(*spread.value);
    if (const auto* fp = fiber()) {
      // F/JF = k[y]/(Q + L) is Artinian iff J is a reduction; its top degree is r_J(I).
      auto gens = fp->relations;
      for (auto& l : forms_in_y(seed, ell, fp->fiber_ring, 0)) gens.push_back(std::move(l));
      HilbertSeries hs = Ideal<F>(fp->fiber_ring, gens).hilbert_series();
      out.decided = true;
      out.method = "top degree of the fiber modulo the reduction";
      if (hs.dimension() == 0) {
        out.is_reduction = true;
        out.value = static_cast<int>(hs.reduced_numerator().size()) - 1;
        out.searched_to = *out.value;
      }
    } else {
      out.method = "graded pieces J I^r against I^(r+1)";
      PowerTower<F>& tw = tower();
      const auto& fs = forms(seed).forms;
      for (int r = 0; r <= settings_.r_max; ++r) {
        if (!power_within_cutoff(r)) {
          note_bound("reduction search stopped by the degree cutoff or piece limit");
          break;
        }
        out.searched_to = r;
        if (product_piece_dimension(tw, fs, r) == tw.dimension(r + 1)) {
          out.value = r;
          out.is_reduction = out.decided = true;
          break;
        }
      }
      if (!out.value && out.searched_to == settings_.r_max) note_bound("no reduction number up to r_max");
    }
    return reductions_.emplace(seed, out).first->second;
  }

  /// Largest reduction number over the seeds, when all are known.
  std::optional<int> reduction_number_max() {
    std::optional<int> best;
    for (auto s : settings_.seeds) {
      const auto& r = reduction(s);
      if (!r.value) return std::nullopt;
      best = std::max(best.value_or(0), *r.value);
    }
    return best;
  }

  int n_max() {
    if (settings_.n_max) return *settings_.n_max;
    if (!equigenerated()) return 5;
    auto r = reduction_number_max();
    return std::max(r ? *r + 2 : 0, 5);
  }

  DepthOptions depth_options() const {
    DepthOptions o;
    o.seed = settings_.seeds.front();
    o.attempts = settings_.trials;
    o.socle_ceiling = settings_.cutoff;
    o.pair_budget = settings_.gb_budget;
    return o;
  }

  /// fn(), or a default (inexact) result recorded as a bound hit.
  template <class Fn>
  auto bounded(const std::string& what, Fn&& fn) -> decltype(fn()) {
    try {
      return fn();
    } catch (const BoundExceeded& e) {
      note_bound(what + ": " + e.what());
      return {};
    }
  }

  void note_bound(const std::string& what) {
    if (std::find(bounds_hit_.begin(), bounds_hit_.end(), what) == bounds_hit_.end()) bounds_hit_.push_back(what);
  }

  void require_equigenerated() const {
    if (!equigenerated()) throw std::invalid_argument("the minimal generators do not share one degree");
  }

 private:
  template <class T, class Fn>
  const T& memo(std::optional<T>& slot, Fn&& fn) {
    if (!slot) slot.emplace(fn());
    return *slot;
  }

  /// Rank of the Jacobian matrix of the generators at random points: a lower
  /// bound for the transcendence degree of k[I_d], i.e. for ell(I).
  int jacobian_rank() {
    const F& K = ring_->field();
    auto rng = make_rng(settings_.seeds.front(), Stream::ring_oracle, 1);
    std::size_t best = 0;
    for (int t = 0; t < settings_.trials; ++t) {
      std::vector<typename F::Element> point;
      for (std::size_t i = 0; i < num_vars(); ++i) point.push_back(K.random_nonzero(rng));
      std::vector<Vec<F>> rows;
      for (const auto& f : mingens_) {
        Vec<F> row(num_vars(), K.zero());
        for (const auto& term : f.terms())
          for (std::size_t i = 0; i < num_vars(); ++i) {
            int e = term.monomial[i];
            if (e == 0) continue;
            auto v = K.mul(term.coeff, K.from_int(e));
            for (std::size_t k = 0; k < num_vars(); ++k)
              for (int p = 0; p < term.monomial[k] - (k == i ? 1 : 0); ++p) v = K.mul(v, point[k]);
            row[i] = K.add(row[i], v);
          }
        rows.push_back(std::move(row));
      }
      best = std::max(best, rank(K, rows, num_vars()));
    }
    return static_cast<int>(best);
  }

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> input_;
  PolyMatrix<F> matrix_;
  Settings settings_;
  std::vector<Polynomial<F>> mingens_;
  int degree_ = -1;
  Ideal<F> ideal_;
  std::vector<std::string> bounds_hit_;

  std::optional<int> height_, dimension_;
  std::optional<HilbertSeries> hilbert_;
  std::optional<BettiTable> betti_;
  std::optional<PresentationMatrix<F>> presentation_;
  std::map<int, int> minors_heights_;
  std::optional<std::size_t> linear_rank_;
  std::optional<PowerTower<F>> tower_;
  bool fiber_attempted_ = false, fiber_low_attempted_ = false, rees_attempted_ = false;
  std::optional<FiberPresentation<F>> fiber_, fiber_low_;
  std::optional<SpreadResult> spread_;
  std::optional<HilbertSeries> fiber_hilbert_;
  std::optional<std::vector<int>> fiber_rel_degrees_;
  std::optional<BettiTable> fiber_betti_;
  std::optional<DepthResult> fiber_depth_, gr_depth_;
  std::optional<CMResult> fiber_cm_, rees_cm_;
  std::optional<ReesPresentation<F>> rees_;
  std::optional<int> rees_dim_, gr_dim_;
  std::map<std::uint64_t, GenericForms<F>> forms_;
  std::map<std::uint64_t, ReductionResult> reductions_;
  std::map<std::pair<std::uint64_t, std::size_t>, std::optional<HilbertSeries>> gr_cuts_;
};

}  // namespace fiberlab

#endif  // FIBERLAB_ANALYSIS_HPP
