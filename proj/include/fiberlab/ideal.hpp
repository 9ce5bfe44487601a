// Ideals with cached Gröbner bases: sums, products, powers, intersections,
// colons, saturation, Hilbert series, dimension and height.

#ifndef FIBERLAB_IDEAL_HPP
#define FIBERLAB_IDEAL_HPP

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fiberlab/groebner.hpp"
#include "fiberlab/hilbert.hpp"

namespace fiberlab {

template <class F>
class Ideal {
 public:
  Ideal() = default;
  /// A nonzero pair_budget caps the S-pair reductions of the Gröbner basis.
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens, std::size_t pair_budget = 0)
      : ring_(std::move(ring)), pair_budget_(pair_budget), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("ideal generators must live in the ideal's ring");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }
  static Ideal unit(const RingPtr<F>& ring) { return Ideal(ring, {Polynomial<F>::one(ring)}); }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  /// Reduced Gröbner basis for the graded reverse lexicographic order of the
  /// ring's grading (computed once and shared between copies).
  const GroebnerBasis<F>& groebner() const {
    std::call_once(cache_->once, [this] {
      RingPtr<F> target = ring_->order().kind == TermOrder::Kind::grevlex ? ring_ : ring_->with_order(TermOrder::grevlex());
      cache_->gb = groebner_in(target, gens_, -1, pair_budget_);
    });
    return cache_->gb;
  }
  const RingPtr<F>& groebner_ring() const { return groebner().ring(); }

  bool is_unit() const { return groebner().is_unit(); }
  bool is_homogeneous() const {
    for (const auto& g : gens_)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  bool contains(const Polynomial<F>& f) const { return groebner().contains(change_ring(f, groebner_ring())); }
  bool contains(const Ideal& other) const {
    for (const auto& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

  HilbertSeries hilbert_series() const {
    if (!is_homogeneous()) throw std::invalid_argument("Hilbert series needs a homogeneous ideal");
    return monomial_hilbert_series(groebner().leading_monomials(), ring_->weights());
  }
  /// Krull dimension of R/I; -1 for the unit ideal.
  int dimension() const { return is_unit() ? -1 : hilbert_series().dimension(); }
  /// Codimension in the polynomial ring; the unit ideal gets #vars.
  int height() const {
    int d = dimension();
    return d < 0 ? static_cast<int>(ring_->num_vars()) : static_cast<int>(ring_->num_vars()) - d;
  }

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis<F> gb;
  };
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  std::size_t pair_budget_ = 0;
  std::shared_ptr<Cache> cache_;
};

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("ring mismatch in ideal sum");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<F>(a.ring(), gens);
}

template <class F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("ring mismatch in ideal product");
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal<F>(a.ring(), gens);
}

/// I^n by repeated multiplication, without minimalization; I^0 = (1).
template <class F>
Ideal<F> ideal_power(const Ideal<F>& a, int n) {
  if (n < 0) throw std::invalid_argument("negative ideal power");
  Ideal<F> p = Ideal<F>::unit(a.ring());
  for (int k = 0; k < n; ++k) p = ideal_product(p, a);
  return p;
}

/// Fresh variable names that avoid the existing ones.
inline std::vector<std::string> fresh_names(const std::string& base, std::size_t count,
                                            const std::vector<std::string>& taken) {
  std::string prefix = base;
  auto clashes = [&](const std::string& p) {
    for (std::size_t i = 1; i <= count; ++i) {
      std::string candidate = count == 1 ? p : p + std::to_string(i);
      for (const auto& t : taken)
        if (t == candidate) return true;
    }
    return false;
  };
  while (clashes(prefix)) prefix += "_";
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(count == 1 ? prefix : prefix + std::to_string(i));
  return out;
}

/// a ∩ b by eliminating t from t·a + (1 - t)·b.
template <class F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("ring mismatch in intersection");
  const auto& R = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal<F>(R, {});
  std::vector<std::string> names = fresh_names("t", 1, R->names());
  names.insert(names.end(), R->names().begin(), R->names().end());
  std::vector<int> weights = {1};
  weights.insert(weights.end(), R->weights().begin(), R->weights().end());
  auto big = make_ring(R->field(), names, weights, TermOrder::elimination(1));
  std::vector<int> shift(R->num_vars());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = static_cast<int>(i + 1);
  auto t = Polynomial<F>::variable(big, 0);
  auto one_minus_t = Polynomial<F>::one(big) - t;
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.generators()) gens.push_back(t * map_variables(f, big, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * map_variables(g, big, shift));
  return Ideal<F>(R, eliminate(gens, 1, R));
}

/// (a : f) = (a ∩ (f)) / f.
template <class F>
Ideal<F> colon(const Ideal<F>& a, const Polynomial<F>& f) {
  if (f.is_zero()) throw std::domain_error("colon by the zero polynomial");
  Ideal<F> meet = intersect(a, Ideal<F>(a.ring(), {f}));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : meet.generators()) gens.push_back(divide_exact(g, f));
  return Ideal<F>(a.ring(), gens);
}

/// (a : b) = ∩_j (a : b_j).
template <class F>
Ideal<F> colon_ideal(const Ideal<F>& a, const Ideal<F>& b) {
  if (b.is_zero()) return Ideal<F>::unit(a.ring());
  Ideal<F> out = colon(a, b.generators().front());
  for (std::size_t j = 1; j < b.size(); ++j) out = intersect(out, colon(a, b.generators()[j]));
  return out;
}

/// (a : f^∞), iterating colons until the ideal stabilizes.
template <class F>
Ideal<F> saturate(const Ideal<F>& a, const Polynomial<F>& f) {
  Ideal<F> cur = a;
  while (true) {
    Ideal<F> next = colon(cur, f);
    if (cur.contains(next)) return cur;
    cur = next;
  }
}

}  // namespace fiberlab

#endif  // FIBERLAB_IDEAL_HPP
