// Exponent-vector monomials and term orders.

#ifndef FIBERLAB_MONOMIAL_HPP
#define FIBERLAB_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fiberlab {

inline constexpr std::size_t kMaxVariables = 24;
using Exponent = std::uint16_t;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

/// A monomial x^e stored as a fixed-width exponent vector. The weighted
/// degree is cached; it is always computed with the weights of the ring the
/// monomial was created in. Unused trailing slots are zero.
class Monomial {
 public:
  Monomial() = default;

  Monomial(std::span<const int> exponents, std::span<const int> weights) {
    if (exponents.size() > kMaxVariables) throw std::length_error("too many variables");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      int e = exponents[i];
      if (e < 0 || static_cast<std::uint32_t>(e) > kMaxExponent)
        throw std::overflow_error("exponent out of range: " + std::to_string(e));
      exp_[i] = static_cast<Exponent>(e);
      degree_ += e * (weights.empty() ? 1 : weights[i]);
      if (e) mask_ |= 1u << i;
    }
  }

  Exponent operator[](std::size_t i) const { return exp_[i]; }
  std::int32_t degree() const { return degree_; }
  std::uint32_t support() const { return mask_; }
  bool is_one() const { return mask_ == 0; }
  int total_degree() const {
    int s = 0;
    for (auto e : exp_) s += e;
    return s;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

  /// True when a divides b.
  friend bool divides(const Monomial& a, const Monomial& b) {
    if (a.mask_ & ~b.mask_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (a.exp_[i] > b.exp_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      std::uint32_t e = std::uint32_t{a.exp_[i]} + b.exp_[i];
      if (e > kMaxExponent) throw std::overflow_error("exponent overflow in monomial product");
      r.exp_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }

  /// b / a, requires divides(a, b).
  friend Monomial operator/(const Monomial& b, const Monomial& a) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a.exp_[i] > b.exp_[i]) throw std::domain_error("monomial division is not exact");
      r.exp_[i] = static_cast<Exponent>(b.exp_[i] - a.exp_[i]);
      if (r.exp_[i]) r.mask_ |= 1u << i;
    }
    r.degree_ = b.degree_ - a.degree_;
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) { return (a.mask_ & b.mask_) == 0; }

  /// Least common multiple; the degree needs the ring weights.
  friend Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
      if (r.exp_[i]) {
        r.mask_ |= 1u << i;
        r.degree_ += r.exp_[i] * (i < weights.size() ? weights[i] : 1);
      }
    }
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b, std::span<const int> weights) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
      if (r.exp_[i]) {
        r.mask_ |= 1u << i;
        r.degree_ += r.exp_[i] * (i < weights.size() ? weights[i] : 1);
      }
    }
    return r;
  }

  std::vector<int> exponents(std::size_t nvars) const {
    return std::vector<int>(exp_.begin(), exp_.begin() + static_cast<std::ptrdiff_t>(nvars));
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exp_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::int32_t degree_ = 0;
  std::uint32_t mask_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights);
Monomial gcd(const Monomial& a, const Monomial& b, std::span<const int> weights);
bool divides(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial orders. Degrees inside grevlex and the elimination blocks are the
/// ring's weighted degrees.
struct TermOrder {
  enum class Kind { grevlex, lex, elimination, weight_then };

  Kind kind = Kind::grevlex;
  /// elimination: number of leading variables in the first block.
  std::size_t block_size = 0;
  /// weight_then: the weight vector compared first, then `base`.
  std::vector<int> weight;
  std::shared_ptr<const TermOrder> base;

  static TermOrder grevlex() { return {}; }
  static TermOrder lex() { return {Kind::lex, 0, {}, nullptr}; }
  /// Block grevlex: the first k variables are eliminated.
  static TermOrder elimination(std::size_t k) { return {Kind::elimination, k, {}, nullptr}; }
  static TermOrder weight_then(std::vector<int> w, TermOrder base_order) {
    return {Kind::weight_then, 0, std::move(w), std::make_shared<const TermOrder>(std::move(base_order))};
  }

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    if (a.kind != b.kind || a.block_size != b.block_size || a.weight != b.weight) return false;
    if (!a.base || !b.base) return a.base == b.base;
    return *a.base == *b.base;
  }

  std::string name() const {
    switch (kind) {
      case Kind::grevlex: return "grevlex";
      case Kind::lex: return "lex";
      case Kind::elimination: return "elimination(" + std::to_string(block_size) + ")";
      case Kind::weight_then: return "weight_then(" + (base ? base->name() : std::string("?")) + ")";
    }
    return "?";
  }
};

namespace detail {

inline int revlex_block(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

inline int grevlex_block(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                         std::span<const int> weights) {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    int w = weights.empty() ? 1 : weights[i];
    da += long{a[i]} * w;
    db += long{b[i]} * w;
  }
  if (da != db) return da < db ? -1 : 1;
  return revlex_block(a, b, lo, hi);
}

}  // namespace detail

/// Three-way comparison: -1, 0, 1 for a < b, a == b, a > b.
inline int compare_monomials(const Monomial& a, const Monomial& b, const TermOrder& order,
                             std::span<const int> weights, std::size_t nvars) {
  switch (order.kind) {
    case TermOrder::Kind::grevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      return detail::revlex_block(a, b, 0, nvars);
    case TermOrder::Kind::lex:
      for (std::size_t i = 0; i < nvars; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case TermOrder::Kind::elimination: {
      std::size_t k = std::min(order.block_size, nvars);
      if (int c = detail::grevlex_block(a, b, 0, k, weights)) return c;
      return detail::grevlex_block(a, b, k, nvars, weights);
    }
    case TermOrder::Kind::weight_then: {
      long wa = 0, wb = 0;
      for (std::size_t i = 0; i < nvars && i < order.weight.size(); ++i) {
        wa += long{a[i]} * order.weight[i];
        wb += long{b[i]} * order.weight[i];
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      return compare_monomials(a, b, order.base ? *order.base : TermOrder{}, weights, nvars);
    }
  }
  return 0;
}

/// All exponent vectors of weighted degree `degree` in `nvars` variables, in
/// lexicographically decreasing order.
inline std::vector<std::vector<int>> exponent_vectors_of_degree(std::size_t nvars, int degree,
                                                                std::span<const int> weights) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
    if (i + 1 == nvars) {
      int w = weights.empty() ? 1 : weights[i];
      if (rest % w == 0) {
        cur[i] = rest / w;
        out.push_back(cur);
      }
      cur[i] = 0;
      return;
    }
    int w = weights.empty() ? 1 : weights[i];
    for (int e = rest / w; e >= 0; --e) {
      cur[i] = e;
      rec(i + 1, rest - e * w);
    }
    cur[i] = 0;
  };
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  if (degree >= 0) rec(0, degree);
  return out;
}

}  // namespace fiberlab

#endif  // FIBERLAB_MONOMIAL_HPP
