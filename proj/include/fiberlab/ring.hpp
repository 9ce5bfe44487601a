// Polynomial rings k[x_1..x_n] with positive integer weights and a term order.

#ifndef FIBERLAB_RING_HPP
#define FIBERLAB_RING_HPP

#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fiberlab/coeffs.hpp"
#include "fiberlab/monomial.hpp"

namespace fiberlab {

template <class F>
class Ring {
 public:
  Ring(F field, std::vector<std::string> names, std::vector<int> weights = {},
       TermOrder order = TermOrder::grevlex())
      : field_(std::move(field)), names_(std::move(names)), weights_(std::move(weights)),
        order_(std::move(order)) {
    if (names_.empty()) throw std::invalid_argument("a ring needs at least one variable");
    if (names_.size() > kMaxVariables)
      throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables are supported");
    std::set<std::string> seen;
    for (const auto& n : names_)
      if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size()) throw std::invalid_argument("one weight per variable is required");
    for (int w : weights_)
      if (w <= 0) throw std::invalid_argument("variable weights must be positive");
  }

  const F& field() const { return field_; }
  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const TermOrder& order() const { return order_; }
  bool is_standard_graded() const {
    for (int w : weights_)
      if (w != 1) return false;
    return true;
  }

  int compare(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b, order_, weights_, names_.size());
  }

  Monomial monomial(std::span<const int> exps) const {
    if (exps.size() != names_.size()) throw std::invalid_argument("exponent vector length mismatch");
    return Monomial(exps, weights_);
  }
  Monomial one() const { return Monomial(); }
  Monomial variable(std::size_t i, int power = 1) const {
    std::vector<int> e(names_.size(), 0);
    e.at(i) = power;
    return monomial(e);
  }
  Monomial lcm(const Monomial& a, const Monomial& b) const { return fiberlab::lcm(a, b, weights_); }
  Monomial gcd(const Monomial& a, const Monomial& b) const { return fiberlab::gcd(a, b, weights_); }

  /// Weighted degree of exponent vector `m` restricted to variables [lo, hi).
  int partial_degree(const Monomial& m, std::size_t lo, std::size_t hi) const {
    int d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += m[i] * weights_[i];
    return d;
  }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  std::string monomial_to_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!m[i]) continue;
      if (!s.empty()) s += '*';
      s += names_[i];
      if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
  }

  bool same_as(const Ring& o) const {
    return field_.spec() == o.field_.spec() && names_ == o.names_ && weights_ == o.weights_ &&
           order_ == o.order_;
  }

  std::shared_ptr<const Ring> with_order(TermOrder order) const {
    return std::make_shared<const Ring>(field_, names_, weights_, std::move(order));
  }
  std::shared_ptr<const Ring> with_weights(std::vector<int> weights) const {
    return std::make_shared<const Ring>(field_, names_, std::move(weights), order_);
  }

 private:
  F field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  TermOrder order_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> names, std::vector<int> weights = {},
                     TermOrder order = TermOrder::grevlex()) {
  return std::make_shared<const Ring<F>>(std::move(field), std::move(names), std::move(weights),
                                         std::move(order));
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && a->same_as(*b));
}

}  // namespace fiberlab

#endif  // FIBERLAB_RING_HPP
