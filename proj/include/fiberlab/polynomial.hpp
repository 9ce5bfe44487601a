// Sparse multivariate polynomials over an exact field.

#ifndef FIBERLAB_POLYNOMIAL_HPP
#define FIBERLAB_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fiberlab/ring.hpp"

namespace fiberlab {

template <class F>
struct Term {
  Monomial monomial;
  typename F::Element coeff;
};

/// Terms are kept strictly decreasing in the ring's term order with nonzero
/// coefficients, so structural equality is polynomial equality.
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;
  using TermT = Term<F>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, Element c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({Monomial(), std::move(c)});
    return p;
  }
  static Polynomial integer(RingPtr<F> ring, std::int64_t c) {
    auto e = ring->field().from_int(c);
    return constant(std::move(ring), std::move(e));
  }
  static Polynomial one(RingPtr<F> ring) { return integer(std::move(ring), 1); }
  static Polynomial variable(RingPtr<F> ring, std::size_t i) {
    Polynomial p(ring);
    p.terms_.push_back({ring->variable(i), ring->field().one()});
    return p;
  }
  static Polynomial monomial(RingPtr<F> ring, const Monomial& m, Element c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  /// Sorts and merges an arbitrary list of terms.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<TermT> terms) {
    Polynomial p(std::move(ring));
    const Ring<F>& R = *p.ring_;
    std::sort(terms.begin(), terms.end(),
              [&](const TermT& a, const TermT& b) { return R.compare(a.monomial, b.monomial) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coeff = R.field().add(p.terms_.back().coeff, t.coeff);
        if (R.field().is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!R.field().is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }
  /// Trusted constructor: terms already sorted, nonzero, distinct.
  static Polynomial from_sorted_terms(RingPtr<F> ring, std::vector<TermT> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<TermT>& terms() const { return terms_; }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading monomial of the zero polynomial");
    return terms_.front().monomial;
  }
  const Element& leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return terms_.front().coeff;
  }

  /// Maximum weighted degree of a term; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
    return true;
  }
  /// Homogeneity with respect to an arbitrary weight vector.
  bool is_homogeneous_for(std::span<const int> weights) const {
    long first = 0;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      long d = 0;
      for (std::size_t i = 0; i < weights.size(); ++i) d += long{terms_[k].monomial[i]} * weights[i];
      if (k == 0) first = d;
      else if (d != first) return false;
    }
    return true;
  }
  /// Variables occurring in some term, as a bit mask.
  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (const auto& t : terms_) s |= t.monomial.support();
    return s;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
      if (!a.field().equal(a.terms_[i].coeff, b.terms_[i].coeff)) return false;
    }
    return true;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    return axpy(a, a.field().one(), Monomial(), b);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    return axpy(a, a.field().neg(a.field().one()), Monomial(), b);
  }
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(a.field().neg(a.field().one())); }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& large = a.size() <= b.size() ? b : a;
    if (small.size() == 1) return large.times_term(small.terms_[0].monomial, small.terms_[0].coeff);
    // Pairwise merging keeps the intermediate sums sorted.
    std::vector<Polynomial> parts;
    parts.reserve(small.size());
    for (const auto& t : small.terms_) parts.push_back(large.times_term(t.monomial, t.coeff));
    while (parts.size() > 1) {
      std::vector<Polynomial> next;
      for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
        next.push_back(axpy(parts[i], a.field().one(), Monomial(), parts[i + 1]));
      if (parts.size() % 2) next.push_back(std::move(parts.back()));
      parts = std::move(next);
    }
    return std::move(parts.front());
  }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial, field().mul(t.coeff, c)});
    return r;
  }
  /// c * m * this; multiplication by a monomial preserves the term order.
  Polynomial times_term(const Monomial& m, const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, field().mul(t.coeff, c)});
    return r;
  }
  Polynomial monic() const {
    if (is_zero() || field().is_one(leading_coefficient())) return *this;
    return scaled(field().inv(leading_coefficient()));
  }

  /// a + c * m * b, merged in one pass.
  static Polynomial axpy(const Polynomial& a, const Element& c, const Monomial& m, const Polynomial& b) {
    const Ring<F>& R = *a.ring_;
    const F& K = R.field();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    const bool shift = !m.is_one();
    const bool unit = K.is_one(c);
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size()) {
        r.terms_.push_back(a.terms_[i++]);
        continue;
      }
      Monomial bm = shift ? b.terms_[j].monomial * m : b.terms_[j].monomial;
      int cmp = i == a.terms_.size() ? -1 : R.compare(a.terms_[i].monomial, bm);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({bm, unit ? b.terms_[j].coeff : K.mul(b.terms_[j].coeff, c)});
        ++j;
      } else {
        auto s = K.add(a.terms_[i].coeff, unit ? b.terms_[j].coeff : K.mul(b.terms_[j].coeff, c));
        if (!K.is_zero(s)) r.terms_.push_back({bm, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  /// The homogeneous component of weighted degree d.
  Polynomial component(int d) const {
    Polynomial r(ring_);
    for (const auto& t : terms_)
      if (t.monomial.degree() == d) r.terms_.push_back(t);
    return r;
  }

  Element coefficient_of(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coeff;
    return field().zero();
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    const F& K = field();
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      std::string c = K.to_string(terms_[k].coeff);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (k == 0) {
        if (negative) s += '-';
      } else {
        s += negative ? " - " : " + ";
      }
      const Monomial& m = terms_[k].monomial;
      if (m.is_one()) {
        s += c;
      } else {
        if (c != "1") s += c + "*";
        s += ring_->monomial_to_string(m);
      }
    }
    return s;
  }

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw std::invalid_argument("ring mismatch in polynomial arithmetic");
  }

  RingPtr<F> ring_;
  std::vector<TermT> terms_;
};

/// Re-expresses f in `target`, sending variable i of f's ring to variable
/// var_map[i] of the target (var_map[i] = -1 requires x_i not to occur).
template <class F>
Polynomial<F> map_variables(const Polynomial<F>& f, const RingPtr<F>& target, const std::vector<int>& var_map) {
  std::vector<Term<F>> terms;
  terms.reserve(f.size());
  const std::size_t n = f.ring()->num_vars();
  std::vector<int> e(target->num_vars());
  for (const auto& t : f.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!t.monomial[i]) continue;
      if (var_map[i] < 0) throw std::invalid_argument("variable has no image in target ring");
      e[var_map[i]] += t.monomial[i];
    }
    terms.push_back({target->monomial(e), t.coeff});
  }
  return Polynomial<F>::from_terms(target, std::move(terms));
}

/// Same variables, possibly different order/weights: re-sorts the terms.
template <class F>
Polynomial<F> change_ring(const Polynomial<F>& f, const RingPtr<F>& target) {
  if (same_ring(f.ring(), target)) return f;
  std::vector<int> id(f.ring()->num_vars());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  return map_variables(f, target, id);
}

/// Ring homomorphism: x_i -> images[i] (all images in one target ring).
template <class F>
Polynomial<F> substitute(const Polynomial<F>& f, const std::vector<Polynomial<F>>& images,
                         const RingPtr<F>& target) {
  const std::size_t n = f.ring()->num_vars();
  if (images.size() != n) throw std::invalid_argument("substitution needs one image per variable");
  std::vector<std::vector<Polynomial<F>>> powers(n);
  auto power = [&](std::size_t i, int e) -> const Polynomial<F>& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(Polynomial<F>::one(target));
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * images[i]);
    return v[e];
  };
  Polynomial<F> result(target);
  for (const auto& t : f.terms()) {
    Polynomial<F> term = Polynomial<F>::constant(target, t.coeff);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i)
      if (t.monomial[i]) term = term * power(i, t.monomial[i]);
    result += term;
  }
  return result;
}

/// Exact division g / f; throws if f does not divide g.
template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& g, const Polynomial<F>& f) {
  if (f.is_zero()) throw std::domain_error("division by the zero polynomial");
  const F& K = g.field();
  Polynomial<F> rest = g;
  std::vector<Term<F>> quotient;
  const auto lcinv = K.inv(f.leading_coefficient());
  while (!rest.is_zero()) {
    const Monomial& lm = rest.leading_monomial();
    if (!divides(f.leading_monomial(), lm)) throw std::domain_error("polynomial division is not exact");
    Monomial q = lm / f.leading_monomial();
    auto c = K.mul(rest.leading_coefficient(), lcinv);
    quotient.push_back({q, c});
    rest = Polynomial<F>::axpy(rest, K.neg(c), q, f);
  }
  return Polynomial<F>::from_sorted_terms(g.ring(), std::move(quotient));
}

}  // namespace fiberlab

#endif  // FIBERLAB_POLYNOMIAL_HPP
