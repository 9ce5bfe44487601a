// Determinants and ideals of minors of polynomial matrices.

#ifndef FIBERLAB_MINORS_HPP
#define FIBERLAB_MINORS_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "fiberlab/polynomial.hpp"

namespace fiberlab {

template <class F>
using PolyMatrix = std::vector<std::vector<Polynomial<F>>>;

namespace detail {

// Laplace expansion down the chosen rows; memoized on the set of columns
// still available, which determines the remaining subdeterminant.
template <class F>
Polynomial<F> expand(const PolyMatrix<F>& m, const std::vector<std::size_t>& rows, std::size_t pos,
                     std::uint32_t cols, std::map<std::uint32_t, Polynomial<F>>& memo, const RingPtr<F>& ring) {
  if (pos == rows.size()) return Polynomial<F>::one(ring);
  auto it = memo.find(cols);
  if (it != memo.end()) return it->second;
  Polynomial<F> det(ring);
  int sign = 1;
  for (std::size_t c = 0; c < 32; ++c) {
    if (!(cols >> c & 1u)) continue;
    const Polynomial<F>& entry = m[rows[pos]][c];
    if (!entry.is_zero()) {
      Polynomial<F> sub = expand(m, rows, pos + 1, cols & ~(1u << c), memo, ring);
      if (!sub.is_zero()) {
        Polynomial<F> term = entry * sub;
        det = sign > 0 ? det + term : det - term;
      }
    }
    sign = -sign;
  }
  memo.emplace(cols, det);
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  if (k <= n) detail::subsets(n, k, 0, cur, out);
  return out;
}

template <class F>
Polynomial<F> determinant(const PolyMatrix<F>& m, const RingPtr<F>& ring) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n > 31) throw std::invalid_argument("matrix too large for determinant expansion");
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  std::map<std::uint32_t, Polynomial<F>> memo;
  return detail::expand(m, rows, 0, n == 0 ? 0u : ((1u << n) - 1u), memo, ring);
}

/// All nonzero k x k minors. k <= 0 gives the unit ideal's generator 1; k
/// larger than either dimension gives no generators (the zero ideal).
template <class F>
std::vector<Polynomial<F>> minors(const PolyMatrix<F>& m, int k, const RingPtr<F>& ring) {
  if (k <= 0) return {Polynomial<F>::one(ring)};
  const std::size_t nr = m.size();
  const std::size_t nc = nr ? m[0].size() : 0;
  if (nc > 31) throw std::invalid_argument("matrix too wide for minor expansion");
  std::vector<Polynomial<F>> out;
  if (static_cast<std::size_t>(k) > nr || static_cast<std::size_t>(k) > nc) return out;
  for (const auto& rows : k_subsets(nr, static_cast<std::size_t>(k))) {
    // One memo per row choice serves every column choice.
    std::map<std::uint32_t, Polynomial<F>> memo;
    for (const auto& cols : k_subsets(nc, static_cast<std::size_t>(k))) {
      std::uint32_t mask = 0;
      for (auto c : cols) mask |= 1u << c;
      Polynomial<F> d = detail::expand(m, rows, 0, mask, memo, ring);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace fiberlab

#endif  // FIBERLAB_MINORS_HPP
