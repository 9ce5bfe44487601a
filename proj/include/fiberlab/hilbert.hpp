// Hilbert series of monomial ideals (pivot recursion) and the invariants read
// off them: Krull dimension and multiplicity.

#ifndef FIBERLAB_HILBERT_HPP
#define FIBERLAB_HILBERT_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fiberlab/monomial.hpp"

namespace fiberlab {

/// Integer polynomial in one variable t, coefficient k at index k.
using IntPoly = std::vector<mpz_class>;

namespace detail {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline IntPoly shift(const IntPoly& a, int k) {
  if (a.empty()) return {};
  IntPoly r(a.size() + static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < a.size(); ++i) r[i + static_cast<std::size_t>(k)] = a[i];
  return r;
}

/// 1 - t^k
inline IntPoly one_minus_power(int k) {
  IntPoly r(static_cast<std::size_t>(k) + 1);
  r[0] = 1;
  r[static_cast<std::size_t>(k)] -= 1;
  trim(r);
  return r;
}

inline mpz_class evaluate_at_one(const IntPoly& p) {
  mpz_class s = 0;
  for (const auto& c : p) s += c;
  return s;
}

/// p / (1 - t), assuming p(1) = 0.
inline IntPoly divide_one_minus_t(const IntPoly& p) {
  IntPoly q(p.size() > 0 ? p.size() - 1 : 0);
  mpz_class acc = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    acc += p[k];
    q[k] = acc;
  }
  trim(q);
  return q;
}

inline void minimize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

inline bool is_pure_power(const Monomial& m) { return m.support() && (m.support() & (m.support() - 1)) == 0; }

inline IntPoly numerator_rec(std::vector<Monomial> gens, std::span<const int> weights) {
  minimize(gens);
  if (gens.empty()) return {mpz_class(1)};
  for (const auto& g : gens)
    if (g.is_one()) return {};
  std::uint32_t seen = 0;
  bool coprime_all = true;
  for (const auto& g : gens) {
    if (seen & g.support()) {
      coprime_all = false;
      break;
    }
    seen |= g.support();
  }
  if (coprime_all) {
    IntPoly r{mpz_class(1)};
    for (const auto& g : gens) r = mul(r, one_minus_power(g.degree()));
    return r;
  }
  // Pivot on the variable occurring in the most mixed generators.
  std::vector<int> count(kMaxVariables, 0);
  for (const auto& g : gens)
    if (!is_pure_power(g))
      for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (g[i]) ++count[i];
  std::size_t x = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  int e = 0;
  for (const auto& g : gens)
    if (!is_pure_power(g) && g[x] && (e == 0 || g[x] < e)) e = g[x];
  std::vector<int> exps(weights.size(), 0);
  exps[x] = e;
  Monomial p(exps, weights);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(p);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) quotient.push_back(g / gcd(g, p, weights));
  return add(numerator_rec(std::move(with_pivot), weights), shift(numerator_rec(std::move(quotient), weights), p.degree()));
}

}  // namespace detail

/// H(t) = numerator(t) / prod_i (1 - t^{w_i}).
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(IntPoly numerator, std::vector<int> weights)
      : numerator_(std::move(numerator)), weights_(std::move(weights)) {
    detail::trim(numerator_);
  }

  const IntPoly& numerator() const { return numerator_; }
  const std::vector<int>& weights() const { return weights_; }
  std::size_t num_vars() const { return weights_.size(); }
  bool is_zero() const { return numerator_.empty(); }
  bool standard() const {
    return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
  }

  /// Order of the zero of the numerator at t = 1.
  int cancelled_factors() const {
    if (numerator_.empty()) return 0;
    IntPoly p = numerator_;
    int s = 0;
    while (detail::evaluate_at_one(p) == 0) {
      p = detail::divide_one_minus_t(p);
      ++s;
    }
    return s;
  }
  /// Krull dimension; -1 for the zero module (unit ideal).
  int dimension() const {
    if (numerator_.empty()) return -1;
    return static_cast<int>(weights_.size()) - cancelled_factors();
  }
  IntPoly reduced_numerator() const {
    IntPoly p = numerator_;
    if (p.empty()) return p;
    while (detail::evaluate_at_one(p) == 0) p = detail::divide_one_minus_t(p);
    return p;
  }
  /// Degree (multiplicity); defined here for standard gradings only.
  mpz_class multiplicity() const {
    if (!standard()) throw std::logic_error("multiplicity is only defined for standard gradings here");
    if (numerator_.empty()) return 0;
    return detail::evaluate_at_one(reduced_numerator());
  }
  /// Coefficient of t^j in the series expansion.
  mpz_class hilbert_function(int j) const {
    if (j < 0) return 0;
    std::vector<mpz_class> series(static_cast<std::size_t>(j) + 1);
    for (std::size_t k = 0; k < numerator_.size() && k <= static_cast<std::size_t>(j); ++k) series[k] = numerator_[k];
    for (int w : weights_)
      for (std::size_t k = static_cast<std::size_t>(w); k < series.size(); ++k) series[k] += series[k - w];
    return series.back();
  }

  /// (1 - t^k) * H, i.e. the series expected after cutting by a regular form of degree k.
  HilbertSeries cut_by_regular(int k) const {
    std::vector<int> w = weights_;
    auto it = std::find(w.begin(), w.end(), k);
    if (it != w.end()) {
      w.erase(it);
      return HilbertSeries(numerator_, w);
    }
    return HilbertSeries(detail::mul(numerator_, detail::one_minus_power(k)), w);
  }

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    if (a.weights_ == b.weights_) return a.numerator_ == b.numerator_;
    // Same series written over different denominators: cross-multiply.
    IntPoly lhs = a.numerator_, rhs = b.numerator_;
    for (int w : b.weights_) lhs = detail::mul(lhs, detail::one_minus_power(w));
    for (int w : a.weights_) rhs = detail::mul(rhs, detail::one_minus_power(w));
    return lhs == rhs;
  }

  std::string numerator_string() const { return poly_string(numerator_); }
  static std::string poly_string(const IntPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] == 0) continue;
      mpz_class c = p[k];
      bool neg = c < 0;
      if (neg) c = -c;
      if (s.empty()) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      bool show_coeff = k == 0 || c != 1;
      if (show_coeff) s += c.get_str();
      if (k == 0) continue;
      s += show_coeff ? "*t" : "t";
      if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
  }

 private:
  IntPoly numerator_;
  std::vector<int> weights_;
};

/// Hilbert series of k[x]/(gens) for a monomial ideal with the given weights.
inline HilbertSeries monomial_hilbert_series(std::vector<Monomial> gens, std::vector<int> weights) {
  IntPoly num = detail::numerator_rec(std::move(gens), weights);
  return HilbertSeries(std::move(num), std::move(weights));
}

}  // namespace fiberlab

#endif  // FIBERLAB_HILBERT_HPP
