// Dense exact linear algebra over a field policy: incremental echelon spaces,
// rank and left kernels.

#ifndef FIBERLAB_LINALG_HPP
#define FIBERLAB_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fiberlab {

template <class F>
using Vec = std::vector<typename F::Element>;

/// A subspace of K^n kept in semi-echelon form: every stored row has a
/// distinct leading column (its pivot) carrying the coefficient 1.
template <class F>
class EchelonSpace {
 public:
  using Element = typename F::Element;

  EchelonSpace(F field, std::size_t ncols)
      : field_(std::move(field)), ncols_(ncols), row_of_pivot_(ncols, -1) {}

  std::size_t ambient_dimension() const { return ncols_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<Vec<F>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const F& field() const { return field_; }

  /// Reduces v in place against the stored rows; returns true if v became zero.
  bool reduce(Vec<F>& v) const {
    check(v);
    bool zero = true;
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (field_.is_zero(v[c])) continue;
      int r = row_of_pivot_[c];
      if (r < 0) {
        zero = false;
        continue;
      }
      Element f = v[c];
      const Vec<F>& row = rows_[r];
      for (std::size_t k = c; k < ncols_; ++k)
        if (!field_.is_zero(row[k])) v[k] = field_.sub(v[k], field_.mul(f, row[k]));
    }
    return zero;
  }

  bool contains(Vec<F> v) const { return reduce(v); }

  /// Adds v to the space; returns false when v was already contained.
  bool insert(Vec<F> v) {
    if (reduce(v)) return false;
    std::size_t p = 0;
    while (field_.is_zero(v[p])) ++p;
    Element inv = field_.inv(v[p]);
    for (std::size_t k = p; k < ncols_; ++k)
      if (!field_.is_zero(v[k])) v[k] = field_.mul(v[k], inv);
    row_of_pivot_[p] = static_cast<int>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
  }

  /// Fully reduced row basis (reduced row echelon form), sorted by pivot.
  std::vector<Vec<F>> reduced_basis() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<Vec<F>> out;
    for (std::size_t i : order) out.push_back(rows_[i]);
    for (std::size_t i = out.size(); i-- > 0;) {
      std::size_t p = pivots_[order[i]];
      for (std::size_t j = 0; j < i; ++j) {
        Element f = out[j][p];
        if (field_.is_zero(f)) continue;
        for (std::size_t k = p; k < ncols_; ++k)
          if (!field_.is_zero(out[i][k])) out[j][k] = field_.sub(out[j][k], field_.mul(f, out[i][k]));
      }
    }
    return out;
  }

 private:
  void check(const Vec<F>& v) const {
    if (v.size() != ncols_) throw std::invalid_argument("vector length does not match the echelon space");
  }

  F field_;
  std::size_t ncols_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<int> row_of_pivot_;
};

template <class F>
std::size_t rank(const F& field, const std::vector<Vec<F>>& rows, std::size_t ncols) {
  EchelonSpace<F> space(field, ncols);
  for (const auto& r : rows) {
    space.insert(r);
    if (space.dimension() == ncols) break;
  }
  return space.dimension();
}

/// Basis of {c : sum_i c_i rows[i] = 0}, each vector of length rows.size().
template <class F>
std::vector<Vec<F>> left_kernel(const F& field, const std::vector<Vec<F>>& rows, std::size_t ncols) {
  const std::size_t m = rows.size();
  EchelonSpace<F> space(field, ncols + m);
  std::vector<Vec<F>> kernel;
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != ncols) throw std::invalid_argument("row length mismatch");
    Vec<F> v(ncols + m, field.zero());
    for (std::size_t k = 0; k < ncols; ++k) v[k] = rows[i][k];
    v[ncols + i] = field.one();
    space.reduce(v);
    bool image_zero = true;
    for (std::size_t k = 0; k < ncols && image_zero; ++k) image_zero = field.is_zero(v[k]);
    if (image_zero) {
      kernel.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(ncols), v.end());
    } else {
      space.insert(std::move(v));
    }
  }
  return kernel;
}

/// dim(A ∩ B) for subspaces of one ambient space.
template <class F>
std::size_t intersection_dimension(const EchelonSpace<F>& a, const EchelonSpace<F>& b) {
  EchelonSpace<F> sum = a;
  for (const auto& r : b.rows()) sum.insert(r);
  return a.dimension() + b.dimension() - sum.dimension();
}

}  // namespace fiberlab

#endif  // FIBERLAB_LINALG_HPP
