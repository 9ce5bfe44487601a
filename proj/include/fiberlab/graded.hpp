// Finite-dimensional linear algebra on graded pieces: monomial bases of S_e,
// coordinates, spans [I]_e, minimal generators and bases of powers.

#ifndef FIBERLAB_GRADED_HPP
#define FIBERLAB_GRADED_HPP

#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "fiberlab/ideal.hpp"
#include "fiberlab/linalg.hpp"

namespace fiberlab {

/// The monomials of weighted degree e, indexed.
template <class F>
class MonomialBasis {
 public:
  MonomialBasis(const RingPtr<F>& ring, int degree) : ring_(ring), degree_(degree) {
    if (degree < 0) return;
    enumerate(std::vector<int>(ring->num_vars(), 0), 0, degree);
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }
  const RingPtr<F>& ring() const { return ring_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  long index(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
  }

  Vec<F> coordinates(const Polynomial<F>& f) const {
    const F& K = ring_->field();
    Vec<F> v(size(), K.zero());
    for (const auto& t : f.terms()) {
      long i = index(t.monomial);
      if (i < 0) throw std::invalid_argument("polynomial has a term outside degree " + std::to_string(degree_));
      v[static_cast<std::size_t>(i)] = t.coeff;
    }
    return v;
  }
  Polynomial<F> polynomial(const Vec<F>& v) const {
    const F& K = ring_->field();
    std::vector<Term<F>> terms;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!K.is_zero(v[i])) terms.push_back({monomials_[i], v[i]});
    return Polynomial<F>::from_terms(ring_, std::move(terms));
  }

 private:
  void enumerate(std::vector<int> e, std::size_t i, int rest) {
    const auto& w = ring_->weights();
    if (i + 1 == w.size()) {
      if (rest % w[i] != 0) return;
      e[i] = rest / w[i];
      monomials_.push_back(ring_->monomial(e));
      return;
    }
    for (int k = rest / w[i]; k >= 0; --k) {
      e[i] = k;
      enumerate(e, i + 1, rest - k * w[i]);
    }
  }

  RingPtr<F> ring_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// A subspace of S_e together with the monomial basis it is written in.
template <class F>
class GradedPiece {
 public:
  explicit GradedPiece(std::shared_ptr<const MonomialBasis<F>> basis)
      : basis_(std::move(basis)), space_(basis_->ring()->field(), basis_->size()) {}

  int degree() const { return basis_->degree(); }
  const MonomialBasis<F>& monomials() const { return *basis_; }
  const std::shared_ptr<const MonomialBasis<F>>& monomials_ptr() const { return basis_; }
  const EchelonSpace<F>& space() const { return space_; }
  std::size_t dimension() const { return space_.dimension(); }
  std::size_t codimension() const { return basis_->size() - space_.dimension(); }

  bool insert(const Polynomial<F>& f) { return space_.insert(basis_->coordinates(f)); }
  bool contains(const Polynomial<F>& f) const { return space_.contains(basis_->coordinates(f)); }
  std::vector<Polynomial<F>> basis() const {
    std::vector<Polynomial<F>> out;
    for (const auto& r : space_.reduced_basis()) out.push_back(basis_->polynomial(r));
    return out;
  }

 private:
  std::shared_ptr<const MonomialBasis<F>> basis_;
  EchelonSpace<F> space_;
};

template <class F>
std::shared_ptr<const MonomialBasis<F>> monomial_basis(const RingPtr<F>& ring, int degree) {
  return std::make_shared<const MonomialBasis<F>>(ring, degree);
}

/// [ (gens) ]_e: the span of all m * g with deg m + deg g = e. Generators must
/// be homogeneous.
template <class F>
GradedPiece<F> graded_piece(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, int degree,
                            std::shared_ptr<const MonomialBasis<F>> basis = nullptr) {
  if (!basis) basis = monomial_basis(ring, degree);
  GradedPiece<F> piece(basis);
  const F& K = ring->field();
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("graded pieces need homogeneous generators");
    int rest = degree - g.degree();
    if (rest < 0) continue;
    MonomialBasis<F> multipliers(ring, rest);
    for (const auto& m : multipliers.monomials()) {
      piece.insert(g.times_term(m, K.one()));
      if (piece.codimension() == 0) return piece;
    }
  }
  return piece;
}

/// The span of the given forms, all of degree e.
template <class F>
GradedPiece<F> span_piece(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& forms, int degree,
                          std::shared_ptr<const MonomialBasis<F>> basis = nullptr) {
  if (!basis) basis = monomial_basis(ring, degree);
  GradedPiece<F> piece(basis);
  for (const auto& f : forms)
    if (!f.is_zero()) piece.insert(f);
  return piece;
}

template <class F>
std::size_t intersection_dimension(const GradedPiece<F>& a, const GradedPiece<F>& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("pieces of different degrees");
  return intersection_dimension(a.space(), b.space());
}

/// A minimal homogeneous generating set chosen among the inputs (in order of
/// increasing degree, first come first kept).
template <class F>
std::vector<Polynomial<F>> minimal_generators(const std::vector<Polynomial<F>>& gens) {
  std::vector<Polynomial<F>> input;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("minimal generators need homogeneous input");
    input.push_back(g);
  }
  if (input.empty()) return {};
  const RingPtr<F>& ring = input.front().ring();
  std::stable_sort(input.begin(), input.end(),
                   [](const Polynomial<F>& a, const Polynomial<F>& b) { return a.degree() < b.degree(); });
  std::vector<Polynomial<F>> kept;
  std::size_t i = 0;
  while (i < input.size()) {
    int e = input[i].degree();
    GradedPiece<F> piece = graded_piece(ring, kept, e);
    for (; i < input.size() && input[i].degree() == e; ++i)
      if (piece.insert(input[i])) kept.push_back(input[i]);
  }
  return kept;
}

/// Whether all generators share one degree; returns it (or -1).
template <class F>
int common_degree(const std::vector<Polynomial<F>>& gens) {
  int d = -1;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) return -1;
    if (d >= 0 && g.degree() != d) return -1;
    d = g.degree();
  }
  return d;
}

/// Vector space bases of [I^n]_{nd} for an ideal generated in one degree d,
/// built incrementally and cached: basis(n) spans I^n minimally.
template <class F>
class PowerTower {
 public:
  explicit PowerTower(std::vector<Polynomial<F>> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw std::invalid_argument("power tower of the zero ideal");
    degree_ = common_degree(gens_);
    if (degree_ < 0) throw std::invalid_argument("power tower needs forms of a single degree");
    ring_ = gens_.front().ring();
    levels_.push_back({Polynomial<F>::one(ring_)});
  }
  const RingPtr<F>& ring() const { return ring_; }
  int generator_degree() const { return degree_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }

  const std::vector<Polynomial<F>>& basis(int n) {
    if (n < 0) throw std::invalid_argument("negative power");
    while (static_cast<int>(levels_.size()) <= n) extend();
    return levels_[static_cast<std::size_t>(n)];
  }
  std::size_t dimension(int n) { return basis(n).size(); }
  GradedPiece<F> piece(int n) { return span_piece(ring_, basis(n), n * degree_); }

 private:
  void extend() {
    const int n = static_cast<int>(levels_.size());
    GradedPiece<F> piece(monomial_basis(ring_, n * degree_));
    std::vector<Polynomial<F>> next;
    for (const auto& b : levels_.back())
      for (const auto& g : gens_) {
        Polynomial<F> p = b * g;
        if (piece.insert(p)) next.push_back(std::move(p));
      }
    levels_.push_back(std::move(next));
  }

  std::vector<Polynomial<F>> gens_;
  int degree_ = -1;
  RingPtr<F> ring_;
  std::vector<std::vector<Polynomial<F>>> levels_;
};

/// [ (gens) : f ]_e computed by linear algebra alone: the g in S_e with
/// g * f in [ (gens) ]_{e + deg f}.
template <class F>
GradedPiece<F> colon_piece(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, const Polynomial<F>& f,
                           int degree) {
  auto source = monomial_basis(ring, degree);
  const int target_degree = degree + f.degree();
  GradedPiece<F> target = graded_piece(ring, gens, target_degree);
  const MonomialBasis<F>& tb = target.monomials();
  const F& K = ring->field();
  // Reduce each m*f modulo the target piece; the left kernel of the reduced
  // images is exactly the colon piece.
  std::vector<Vec<F>> rows;
  for (const auto& m : source->monomials()) {
    Vec<F> v = tb.coordinates(f.times_term(m, K.one()));
    target.space().reduce(v);
    rows.push_back(std::move(v));
  }
  GradedPiece<F> out(source);
  for (const auto& k : left_kernel(K, rows, tb.size())) out.insert(source->polynomial(k));
  return out;
}

}  // namespace fiberlab

#endif  // FIBERLAB_GRADED_HPP
