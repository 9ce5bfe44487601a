// Buchberger's algorithm with the sugar strategy and Gebauer–Möller pair
// elimination, normal forms, and block elimination.

#ifndef FIBERLAB_GROEBNER_HPP
#define FIBERLAB_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fiberlab/polynomial.hpp"

namespace fiberlab {

namespace detail {

/// rest[start..] - c * m * g, where the first terms are known to cancel.
template <class F>
std::vector<Term<F>> subtract_multiple(const Ring<F>& R, const std::vector<Term<F>>& rest, std::size_t start,
                                       const typename F::Element& c, const Monomial& m,
                                       const std::vector<Term<F>>& g) {
  const F& K = R.field();
  std::vector<Term<F>> out;
  out.reserve(rest.size() - start + g.size());
  std::size_t i = start + 1, j = 1;  // leading terms cancel by construction
  while (i < rest.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(rest[i++]);
      continue;
    }
    Monomial gm = g[j].monomial * m;
    int cmp = i == rest.size() ? -1 : R.compare(rest[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(rest[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, K.neg(K.mul(c, g[j].coeff))});
      ++j;
    } else {
      auto s = K.sub(rest[i].coeff, K.mul(c, g[j].coeff));
      if (!K.is_zero(s)) out.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
int find_reducer(const Monomial& m, const std::vector<const Polynomial<F>*>& reducers) {
  int best = -1;
  for (std::size_t k = 0; k < reducers.size(); ++k) {
    if (!divides(reducers[k]->leading_monomial(), m)) continue;
    if (best < 0 || reducers[k]->size() < reducers[best]->size()) best = static_cast<int>(k);
  }
  return best;
}

}  // namespace detail

/// Remainder of f modulo the (monic-or-not) reducers; with `full` false only
/// the leading term is reduced.
template <class F>
Polynomial<F> reduce(const Polynomial<F>& f, const std::vector<const Polynomial<F>*>& reducers, bool full = true,
                     std::size_t* work = nullptr) {
  const Ring<F>& R = *f.ring();
  const F& K = R.field();
  std::vector<Term<F>> rest = f.terms();
  std::vector<Term<F>> done;
  std::size_t start = 0;
  while (start < rest.size()) {
    const Term<F>& lt = rest[start];
    int k = detail::find_reducer(lt.monomial, reducers);
    if (k < 0) {
      if (!full) break;
      done.push_back(lt);
      ++start;
      continue;
    }
    const Polynomial<F>& g = *reducers[k];
    auto c = K.div(lt.coeff, g.leading_coefficient());
    Monomial m = lt.monomial / g.leading_monomial();
    if (work) *work += rest.size() - start + g.terms().size();
    rest = detail::subtract_multiple(R, rest, start, c, m, g.terms());
    start = 0;
  }
  for (std::size_t i = start; i < rest.size(); ++i) done.push_back(std::move(rest[i]));
  return Polynomial<F>::from_sorted_terms(f.ring(), std::move(done));
}

template <class F>
Polynomial<F> reduce(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis, bool full = true) {
  std::vector<const Polynomial<F>*> ptrs;
  for (const auto& g : basis) ptrs.push_back(&g);
  return reduce(f, ptrs, full);
}

/// Thrown when a computation would exceed a configured work or degree bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t zero_reductions = 0;
  std::size_t product_criterion = 0;
  std::size_t term_operations = 0;
};

/// Reduced Gröbner basis of the ideal generated by `source`, with respect to
/// the term order of the ring the polynomials live in.
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr<F> ring, std::vector<Polynomial<F>> elements, std::vector<Polynomial<F>> source)
      : ring_(std::move(ring)), elements_(std::move(elements)), source_(std::move(source)) {}

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& elements() const { return elements_; }
  const std::vector<Polynomial<F>>& source() const { return source_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero(); }
  bool is_zero() const { return elements_.empty(); }

  Polynomial<F> normal_form(const Polynomial<F>& f) const {
    if (!same_ring(f.ring(), ring_)) throw std::invalid_argument("normal form requested in a different ring or order");
    return reduce(f, elements_);
  }
  bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : elements_) out.push_back(g.leading_monomial());
    return out;
  }
  int max_degree() const {
    int d = 0;
    for (const auto& g : elements_) d = std::max(d, g.degree());
    return d;
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> elements_;
  std::vector<Polynomial<F>> source_;
};

namespace detail {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
  std::size_t serial;
};

}  // namespace detail

/// Interreduces a set whose leading terms already generate the lead ideal.
template <class F>
std::vector<Polynomial<F>> interreduce(const RingPtr<F>& ring, std::vector<Polynomial<F>> polys) {
  std::vector<Polynomial<F>> minimal;
  for (std::size_t a = 0; a < polys.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < polys.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& ma = polys[a].leading_monomial();
      const Monomial& mb = polys[b].leading_monomial();
      if (divides(mb, ma) && (!(ma == mb) || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(polys[a].monic());
  }
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<const Polynomial<F>*> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(&minimal[b]);
    // Leading term is irreducible by minimality, so only the tail changes.
    minimal[a] = reduce(minimal[a], others).monic();
  }
  const Ring<F>& R = *ring;
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial<F>& x, const Polynomial<F>& y) {
    return R.compare(x.leading_monomial(), y.leading_monomial()) < 0;
  });
  return minimal;
}

/// With degree_bound >= 0, S-pairs of degree above the bound are skipped; for
/// homogeneous input the result is then a Gröbner basis in degrees <= bound.
/// A nonzero pair_budget caps the number of S-pairs reduced, and the term
/// operations of all reductions at terms_per_pair per allowed pair
/// (BoundExceeded).
inline constexpr std::size_t terms_per_pair = 2500000;

template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& generators,
                            BuchbergerStats* stats = nullptr, int degree_bound = -1, std::size_t pair_budget = 0) {
  const Ring<F>& R = *ring;
  std::vector<Polynomial<F>> source;
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) throw std::invalid_argument("generators must live in the basis ring");
    if (!g.is_zero()) source.push_back(g);
  }

  std::vector<Polynomial<F>> basis;
  std::vector<int> sugar;
  std::vector<bool> active;
  std::vector<detail::Pair> pairs;
  std::size_t serial = 0;
  std::size_t reduced_pairs = 0;
  std::size_t work = 0;
  auto charge = [&] {
    if (pair_budget && work > pair_budget * terms_per_pair)
      throw BoundExceeded("Groebner basis needs more than " + std::to_string(pair_budget * terms_per_pair) +
                          " term operations");
  };

  auto weighted = [&](const Monomial& m) { return m.degree(); };

  auto update = [&](Polynomial<F> h, int h_sugar) {
    h = h.monic();
    const std::size_t hi = basis.size();
    const Monomial hm = h.leading_monomial();
    std::vector<detail::Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active[g]) continue;
      Monomial l = R.lcm(basis[g].leading_monomial(), hm);
      int s = std::max(sugar[g] + weighted(l) - weighted(basis[g].leading_monomial()),
                       h_sugar + weighted(l) - weighted(hm));
      candidates.push_back({g, hi, l, s, 0});
    }
    // Chain criterion among the new pairs.
    std::vector<detail::Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto& p = candidates[c];
      bool coprime_lead = coprime(basis[p.i].leading_monomial(), hm);
      bool dominated = false;
      if (!coprime_lead) {
        for (std::size_t e = c + 1; e < candidates.size() && !dominated; ++e)
          dominated = divides(candidates[e].lcm, p.lcm);
        for (std::size_t e = 0; e < kept.size() && !dominated; ++e) dominated = divides(kept[e].lcm, p.lcm);
      }
      if (!dominated) kept.push_back(p);
    }
    // Product criterion.
    std::vector<detail::Pair> fresh;
    for (auto& p : kept) {
      if (coprime(basis[p.i].leading_monomial(), hm)) {
        if (stats) ++stats->product_criterion;
        continue;
      }
      p.serial = serial++;
      fresh.push_back(p);
    }
    // Old pairs made redundant by the new leading monomial.
    std::vector<detail::Pair> survivors;
    for (const auto& p : pairs) {
      if (divides(hm, p.lcm)) {
        Monomial li = R.lcm(basis[p.i].leading_monomial(), hm);
        Monomial lj = R.lcm(basis[p.j].leading_monomial(), hm);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      survivors.push_back(p);
    }
    for (auto& p : fresh) survivors.push_back(std::move(p));
    pairs = std::move(survivors);
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && divides(hm, basis[g].leading_monomial())) active[g] = false;
    basis.push_back(std::move(h));
    sugar.push_back(h_sugar);
    active.push_back(true);
  };

  auto reducers = [&]() {
    std::vector<const Polynomial<F>*> out;
    for (std::size_t g = 0; g < basis.size(); ++g)
      if (active[g]) out.push_back(&basis[g]);
    return out;
  };

  // Seed with the generators in increasing order, each reduced by the previous.
  std::vector<std::size_t> order(source.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return R.compare(source[a].leading_monomial(), source[b].leading_monomial()) < 0;
  });
  for (std::size_t idx : order) {
    Polynomial<F> h = reduce(source[idx], reducers(), true, &work);
    charge();
    if (h.is_zero()) continue;
    if (h.is_constant()) {
      auto one = Polynomial<F>::one(ring);
      return GroebnerBasis<F>(ring, {one}, source);
    }
    int s = 0;
    for (const auto& t : source[idx].terms()) s = std::max(s, weighted(t.monomial));
    update(std::move(h), s);
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto& a = pairs[k];
      const auto& b = pairs[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      int c = compare_monomials(a.lcm, b.lcm, TermOrder::lex(), R.weights(), R.num_vars());
      if (c != 0) {
        if (c < 0) best = k;
        continue;
      }
      if (a.serial < b.serial) best = k;
    }
    detail::Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (degree_bound >= 0 && p.lcm.degree() > degree_bound) continue;
    if (pair_budget && ++reduced_pairs > pair_budget)
      throw BoundExceeded("Groebner basis needs more than " + std::to_string(pair_budget) + " S-pair reductions");
    if (stats) ++stats->pairs_considered;

    const auto& gi = basis[p.i];
    const auto& gj = basis[p.j];
    Polynomial<F> s = gi.times_term(p.lcm / gi.leading_monomial(), R.field().one()) -
                      gj.times_term(p.lcm / gj.leading_monomial(), R.field().one());
    Polynomial<F> h = reduce(s, reducers(), true, &work);
    charge();
    if (h.is_zero()) {
      if (stats) ++stats->zero_reductions;
      continue;
    }
    if (h.is_constant()) {
      auto one = Polynomial<F>::one(ring);
      return GroebnerBasis<F>(ring, {one}, source);
    }
    update(std::move(h), p.sugar);
  }

  if (stats) stats->term_operations = work;
  std::vector<Polynomial<F>> live;
  for (std::size_t g = 0; g < basis.size(); ++g)
    if (active[g]) live.push_back(basis[g]);
  return GroebnerBasis<F>(ring, interreduce(ring, std::move(live)), std::move(source));
}

/// Computes a Gröbner basis in `ring` of polynomials given in another ring on
/// the same variables (e.g. a different term order).
template <class F>
GroebnerBasis<F> groebner_in(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& generators,
                             int degree_bound = -1, std::size_t pair_budget = 0) {
  std::vector<Polynomial<F>> moved;
  for (const auto& g : generators) moved.push_back(change_ring(g, ring));
  return buchberger(ring, moved, nullptr, degree_bound, pair_budget);
}

/// The ring on the variables [k, n) of `ring`, same weights, graded reverse
/// lexicographic order.
template <class F>
RingPtr<F> tail_ring(const RingPtr<F>& ring, std::size_t k) {
  std::vector<std::string> names(ring->names().begin() + static_cast<std::ptrdiff_t>(k), ring->names().end());
  std::vector<int> weights(ring->weights().begin() + static_cast<std::ptrdiff_t>(k), ring->weights().end());
  return make_ring(ring->field(), std::move(names), std::move(weights));
}

/// Generators of (gens) ∩ k[x_k, ..., x_{n-1}] as polynomials of `tail`,
/// read off a Gröbner basis for the block order eliminating x_0..x_{k-1}.
template <class F>
std::vector<Polynomial<F>> eliminate(const std::vector<Polynomial<F>>& gens, std::size_t k, const RingPtr<F>& tail,
                                     int degree_bound = -1, std::size_t pair_budget = 0) {
  if (gens.empty()) return {};
  const RingPtr<F>& ring = gens.front().ring();
  if (k > ring->num_vars()) throw std::invalid_argument("cannot eliminate more variables than the ring has");
  if (tail->num_vars() + k != ring->num_vars()) throw std::invalid_argument("target ring has the wrong size");
  auto elim_ring = ring->with_order(TermOrder::elimination(k));
  GroebnerBasis<F> gb = groebner_in(elim_ring, gens, degree_bound, pair_budget);
  std::uint32_t head_mask = k >= 32 ? ~0u : ((1u << k) - 1u);
  std::vector<int> var_map(ring->num_vars(), -1);
  for (std::size_t i = k; i < ring->num_vars(); ++i) var_map[i] = static_cast<int>(i - k);
  std::vector<Polynomial<F>> out;
  for (const auto& g : gb.elements())
    if ((g.support() & head_mask) == 0) out.push_back(map_variables(g, tail, var_map));
  return out;
}

}  // namespace fiberlab

#endif  // FIBERLAB_GROEBNER_HPP
