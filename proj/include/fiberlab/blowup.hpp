// Blow-up algebras of an equigenerated ideal I = (f_1..f_m) of degree d:
// special fiber k[I_d] = k[y]/Q, Rees algebra R[y]/J and associated graded
// ring R[y]/(J + I), with minimal reductions and reduction numbers.

#ifndef FIBERLAB_BLOWUP_HPP
#define FIBERLAB_BLOWUP_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fiberlab/graded.hpp"
#include "fiberlab/ideal.hpp"
#include "fiberlab/resolution.hpp"

namespace fiberlab {

template <class F>
struct FiberPresentation {
  RingPtr<F> fiber_ring;                   // k[y_1..y_m], standard grading
  std::vector<Polynomial<F>> relations;    // Groebner basis of Q
  std::vector<Polynomial<F>> source;       // f_1..f_m
  int generator_degree = 0;
  int degree_bound = -1;                   // >= 0: relations only known up to this fiber degree
  bool complete() const { return degree_bound < 0; }

  Ideal<F> ideal() const { return Ideal<F>(fiber_ring, relations); }
};

namespace detail {

template <class F>
int require_equigenerated(const std::vector<Polynomial<F>>& gens) {
  if (gens.empty()) throw std::invalid_argument("the zero ideal has no blow-up presentation");
  int d = common_degree(gens);
  if (d <= 0) throw std::invalid_argument("blow-up presentations need forms of one positive degree");
  return d;
}

}  // namespace detail

/// Q = ker(k[y] -> R, y_i -> f_i), by eliminating x from (y_i - f_i) with deg y_i = d.
/// A nonnegative degree_bound truncates the computation: the relations are
/// then a Gröbner basis of Q in fiber degrees <= degree_bound.
template <class F>
FiberPresentation<F> fiber_presentation(const std::vector<Polynomial<F>>& gens, int degree_bound = -1,
                                        std::size_t pair_budget = 0) {
  const int d = detail::require_equigenerated(gens);
  const RingPtr<F>& R = gens.front().ring();
  const std::size_t n = R->num_vars(), m = gens.size();
  auto ynames = fresh_names("y", m, R->names());
  std::vector<std::string> names = R->names();
  names.insert(names.end(), ynames.begin(), ynames.end());
  std::vector<int> weights(n, 1);
  weights.insert(weights.end(), m, d);
  auto big = make_ring(R->field(), names, weights, TermOrder::elimination(n));
  std::vector<int> keep(n);
  for (std::size_t i = 0; i < n; ++i) keep[i] = static_cast<int>(i);
  std::vector<Polynomial<F>> system;
  for (std::size_t i = 0; i < m; ++i)
    system.push_back(Polynomial<F>::variable(big, n + i) - map_variables(gens[i], big, keep));
  auto weighted_tail = tail_ring(big, n);
  FiberPresentation<F> out;
  out.fiber_ring = make_ring(R->field(), ynames);
  out.source = gens;
  out.generator_degree = d;
  out.degree_bound = degree_bound;
  for (const auto& q : eliminate(system, n, weighted_tail, degree_bound < 0 ? -1 : degree_bound * d, pair_budget)) {
    auto rel = change_ring(q, out.fiber_ring);
    if (degree_bound < 0 || rel.degree() <= degree_bound) out.relations.push_back(std::move(rel));
  }
  // Each relation must vanish under y_i -> f_i.
  for (const auto& q : out.relations)
    if (!substitute(q, gens, R).is_zero()) throw std::logic_error("fiber relation does not vanish on the generators");
  return out;
}

template <class F>
struct ReesPresentation {
  RingPtr<F> ring;           // k[x, y] with deg x = 1, deg y = d
  RingPtr<F> standard_ring;  // the same variables, all of degree 1
  std::vector<Polynomial<F>> rees;  // generators of J, in standard_ring
  std::vector<Polynomial<F>> gr;    // J + I R[y], in standard_ring
  std::size_t num_x = 0;
};

/// J = ker(R[y] -> R[t], y_i -> f_i t), by eliminating t from (y_i - t f_i).
template <class F>
ReesPresentation<F> rees_presentation(const std::vector<Polynomial<F>>& gens, std::size_t pair_budget = 0) {
  const int d = detail::require_equigenerated(gens);
  const RingPtr<F>& R = gens.front().ring();
  const std::size_t n = R->num_vars(), m = gens.size();
  auto ynames = fresh_names("y", m, R->names());
  std::vector<std::string> xy = R->names();
  xy.insert(xy.end(), ynames.begin(), ynames.end());
  auto tname = fresh_names("t", 1, xy);
  std::vector<std::string> names = tname;
  names.insert(names.end(), xy.begin(), xy.end());
  // deg t = 1 and deg y = d + 1 keep y_i - t f_i homogeneous with positive weights.
  std::vector<int> weights(1 + n, 1);
  weights.insert(weights.end(), m, d + 1);
  auto big = make_ring(R->field(), names, weights, TermOrder::elimination(1));
  std::vector<int> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<int>(i + 1);
  auto t = Polynomial<F>::variable(big, 0);
  std::vector<Polynomial<F>> system;
  for (std::size_t i = 0; i < m; ++i)
    system.push_back(Polynomial<F>::variable(big, 1 + n + i) - t * map_variables(gens[i], big, shift));
  auto tail = tail_ring(big, 1);
  auto elim = eliminate(system, 1, tail, -1, pair_budget);

  ReesPresentation<F> out;
  out.num_x = n;
  std::vector<int> bigraded(n, 1);
  bigraded.insert(bigraded.end(), m, d);
  out.ring = make_ring(R->field(), xy, bigraded);
  out.standard_ring = make_ring(R->field(), xy);
  std::vector<int> x_only(n + m, 0), y_only(n + m, 0);
  for (std::size_t i = 0; i < n; ++i) x_only[i] = 1;
  for (std::size_t i = 0; i < m; ++i) y_only[n + i] = 1;
  std::vector<Polynomial<F>> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial<F>::variable(big, 1 + i));
  for (std::size_t i = 0; i < m; ++i) images.push_back(t * map_variables(gens[i], big, shift));
  for (const auto& g : elim) {
    if (!g.is_homogeneous_for(x_only) || !g.is_homogeneous_for(y_only))
      throw std::logic_error("Rees relation is not bihomogeneous");
    if (!substitute(g, images, big).is_zero()) throw std::logic_error("Rees relation does not vanish on f_i t");
    out.rees.push_back(change_ring(g, out.standard_ring));
  }
  out.gr = out.rees;
  for (const auto& f : gens) out.gr.push_back(change_ring(f, out.standard_ring));
  return out;
}

/// Random k-linear combinations of the generators.
template <class F>
struct GenericForms {
  std::uint64_t seed = 0;
  std::vector<std::vector<typename F::Element>> coefficients;  // one row per form
  std::vector<Polynomial<F>> forms;
};

template <class F>
GenericForms<F> generic_forms(const std::vector<Polynomial<F>>& gens, std::size_t count, std::uint64_t seed,
                              std::uint64_t salt = 0) {
  GenericForms<F> out;
  out.seed = seed;
  if (gens.empty()) return out;
  const RingPtr<F>& R = gens.front().ring();
  auto rng = make_rng(seed, Stream::forms, salt);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<typename F::Element> row;
    Polynomial<F> f(R);
    for (const auto& g : gens) {
      row.push_back(R->field().random_nonzero(rng));
      f += g.scaled(row.back());
    }
    out.coefficients.push_back(std::move(row));
    out.forms.push_back(std::move(f));
  }
  return out;
}

/// dim [J I^r]_{(r+1)d} for J generated by forms of degree d.
template <class F>
std::size_t product_piece_dimension(PowerTower<F>& tower, const std::vector<Polynomial<F>>& forms, int r) {
  const int d = tower.generator_degree();
  GradedPiece<F> piece(monomial_basis(tower.ring(), (r + 1) * d));
  for (const auto& b : tower.basis(r))
    for (const auto& f : forms) piece.insert(f * b);
  return piece.dimension();
}

struct ReductionNumber {
  std::optional<int> value;  // least r <= r_max with J I^r = I^{r+1}
  int r_max = 12;
  std::vector<std::size_t> product_dims, power_dims;  // per r = 0..checked
};

template <class F>
ReductionNumber reduction_number(PowerTower<F>& tower, const std::vector<Polynomial<F>>& forms, int r_max = 12) {
  ReductionNumber out;
  out.r_max = r_max;
  for (int r = 0; r <= r_max; ++r) {
    std::size_t lhs = product_piece_dimension(tower, forms, r), rhs = tower.dimension(r + 1);
    out.product_dims.push_back(lhs);
    out.power_dims.push_back(rhs);
    if (lhs == rhs) {
      out.value = r;
      break;
    }
  }
  return out;
}

/// Lifts B_n of bases of [I^n / J I^{n-1}]_{nd} for n = 1..r, so that
/// {1} with all B_n has e(F) elements when the fiber is Cohen-Macaulay.
template <class F>
std::vector<std::vector<Polynomial<F>>> free_basis_over_reduction(PowerTower<F>& tower,
                                                                  const std::vector<Polynomial<F>>& forms, int r) {
  std::vector<std::vector<Polynomial<F>>> out;
  const int d = tower.generator_degree();
  for (int n = 1; n <= r; ++n) {
    GradedPiece<F> piece(monomial_basis(tower.ring(), n * d));
    for (const auto& b : tower.basis(n - 1))
      for (const auto& f : forms) piece.insert(f * b);
    std::vector<Polynomial<F>> lifted;
    for (const auto& b : tower.basis(n))
      if (piece.insert(b)) lifted.push_back(b);
    out.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace fiberlab

#endif  // FIBERLAB_BLOWUP_HPP
