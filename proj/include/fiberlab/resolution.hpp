// Homological invariants of standard graded quotients A = S/I computed by
// degreewise linear algebra: Betti tables (Koszul homology), depth, the
// Cohen-Macaulay colength test, regularity, minimal presentations and
// linear rank.

#ifndef FIBERLAB_RESOLUTION_HPP
#define FIBERLAB_RESOLUTION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fiberlab/graded.hpp"
#include "fiberlab/ideal.hpp"
#include "fiberlab/minors.hpp"

namespace fiberlab {

/// Distinct random streams for distinct purposes under one user seed.
enum class Stream : std::uint64_t { forms = 1, depth = 2, cm = 3, linear_rank = 4, subsets = 5, ring_oracle = 6 };

inline std::mt19937_64 make_rng(std::uint64_t seed, Stream purpose, std::uint64_t salt = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(purpose), static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

/// Graded Betti numbers beta_{i,j} of a quotient S/I over S.
struct BettiTable {
  std::map<std::pair<int, int>, long> entries;  // nonzero entries only
  int computed_to = 0;  // every internal degree j <= computed_to was examined
  bool complete = false;

  long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  int projective_dimension() const {
    int p = 0;
    for (const auto& [k, v] : entries) p = std::max(p, k.first);
    return p;
  }
  int regularity() const {
    if (!complete) throw std::logic_error("regularity of an incomplete Betti table");
    int r = 0;
    for (const auto& [k, v] : entries) r = std::max(r, k.second - k.first);
    return r;
  }
  /// Total Betti number in homological degree i.
  long total(int i) const {
    long s = 0;
    for (const auto& [k, v] : entries)
      if (k.first == i) s += v;
    return s;
  }
  /// Sum over i, j of (-1)^i beta_{i,j} t^j.
  IntPoly euler_polynomial() const {
    IntPoly p;
    for (const auto& [k, v] : entries) {
      if (static_cast<std::size_t>(k.second) >= p.size()) p.resize(static_cast<std::size_t>(k.second) + 1);
      p[static_cast<std::size_t>(k.second)] += (k.first % 2 ? -1 : 1) * v;
    }
    detail::trim(p);
    return p;
  }
  /// Degrees j with beta_{i,j} != 0, repeated by multiplicity.
  std::vector<int> degrees(int i) const {
    std::vector<int> out;
    for (const auto& [k, v] : entries)
      if (k.first == i)
        for (long c = 0; c < v; ++c) out.push_back(k.second);
    return out;
  }
};

/// A = S/I for a homogeneous ideal of a standard graded ring, with bases of
/// its graded components given by standard monomials.
template <class F>
class GradedQuotient {
 public:
  GradedQuotient(RingPtr<F> ring, std::vector<Polynomial<F>> gens, std::size_t pair_budget = 0)
      : ideal_(std::move(ring), std::move(gens), pair_budget) {
    if (!ideal_.ring()->is_standard_graded()) throw std::invalid_argument("graded quotients need a standard grading");
    if (!ideal_.is_homogeneous()) throw std::invalid_argument("graded quotients need a homogeneous ideal");
    leads_ = ideal_.groebner().leading_monomials();
    levels_.push_back({});
    if (!ideal_.is_unit()) {
      levels_[0].monomials.push_back(ring_()->one());
      levels_[0].index.emplace(ring_()->one(), 0);
    }
  }

  const Ideal<F>& ideal() const { return ideal_; }
  const RingPtr<F>& ring() const { return ideal_.ring(); }
  std::size_t num_vars() const { return ring()->num_vars(); }
  HilbertSeries hilbert_series() const { return ideal_.hilbert_series(); }

  const std::vector<Monomial>& standard(int j) {
    if (j < 0) return empty_;
    while (static_cast<int>(levels_.size()) <= j) grow();
    return levels_[static_cast<std::size_t>(j)].monomials;
  }
  std::size_t dim(int j) { return standard(j).size(); }

  /// Coordinates of x_k * m in A_{j+1}, where m is the idx-th standard monomial of degree j.
  const Vec<F>& times_variable(std::size_t k, std::size_t idx, int j) {
    standard(j + 1);
    auto key = std::make_pair(j, idx * num_vars() + k);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    const Level& next = levels_[static_cast<std::size_t>(j) + 1];
    const F& K = ring()->field();
    Vec<F> v(next.monomials.size(), K.zero());
    Monomial m = levels_[static_cast<std::size_t>(j)].monomials[idx] * ring()->variable(k);
    auto pos = next.index.find(m);
    if (pos != next.index.end()) {
      v[pos->second] = K.one();
    } else {
      Polynomial<F> nf = ideal_.groebner().normal_form(Polynomial<F>::monomial(ideal_.groebner_ring(), m, K.one()));
      for (const auto& t : nf.terms()) v[next.index.at(t.monomial)] = t.coeff;
    }
    return products_.emplace(key, std::move(v)).first->second;
  }

  /// Whether some nonzero element of A_j is killed by every variable.
  bool has_socle_in_degree(int j) {
    const std::size_t rows = dim(j);
    if (rows == 0) return false;
    const std::size_t width = dim(j + 1);
    if (width == 0) return true;
    std::vector<Vec<F>> matrix;
    matrix.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      Vec<F> row;
      row.reserve(width * num_vars());
      for (std::size_t k = 0; k < num_vars(); ++k) {
        const Vec<F>& part = times_variable(k, r, j);
        row.insert(row.end(), part.begin(), part.end());
      }
      matrix.push_back(std::move(row));
    }
    return !left_kernel(ring()->field(), matrix, width * num_vars()).empty();
  }

 private:
  struct Level {
    std::vector<Monomial> monomials;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  };
  const RingPtr<F>& ring_() const { return ideal_.ring(); }

  bool is_standard(const Monomial& m) const {
    for (const auto& l : leads_)
      if (divides(l, m)) return false;
    return true;
  }
  // Standard monomials form an order ideal: each one of degree j+1 is x_k times one of degree j.
  void grow() {
    const Level& prev = levels_.back();
    Level next;
    for (const auto& m : prev.monomials)
      for (std::size_t k = 0; k < num_vars(); ++k) {
        Monomial c = m * ring()->variable(k);
        if (next.index.count(c) || !is_standard(c)) continue;
        next.index.emplace(c, next.monomials.size());
        next.monomials.push_back(c);
      }
    levels_.push_back(std::move(next));
  }

  Ideal<F> ideal_;
  std::vector<Monomial> leads_;
  std::vector<Level> levels_;
  std::map<std::pair<int, std::size_t>, Vec<F>> products_;
  const std::vector<Monomial> empty_;
};

namespace detail {

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Betti numbers of A over its ambient ring from Koszul homology:
/// beta_{i,j} = dim H_i(x; A)_j, for all j <= max_degree.
template <class F>
BettiTable koszul_betti(GradedQuotient<F>& A, int max_degree) {
  const int n = static_cast<int>(A.num_vars());
  const F& K = A.ring()->field();
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> subset_index(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    std::size_t c = 0;
    for (auto& s : k_subsets(static_cast<std::size_t>(n), static_cast<std::size_t>(i))) subset_index[i].emplace(s, c++);
  }
  BettiTable table;
  table.computed_to = max_degree;
  for (int j = 0; j <= max_degree; ++j) {
    // rank of d_i : (K_i)_j -> (K_{i-1})_j for i = 1..n
    std::vector<long> rk(static_cast<std::size_t>(n) + 2, 0), size(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) size[i] = static_cast<long>(A.dim(j - i)) * detail::binomial(n, i);
    for (int i = 1; i <= n; ++i) {
      if (size[i] == 0 || size[i - 1] == 0) continue;
      const int src = j - i;  // degree of the A-coefficient in K_i
      const std::size_t a_src = A.dim(src), a_dst = A.dim(src + 1);
      const std::size_t ncols = a_dst * subset_index[i - 1].size();
      EchelonSpace<F> space(K, ncols);
      for (const auto& [S, sidx] : subset_index[i]) {
        (void)sidx;
        for (std::size_t m = 0; m < a_src; ++m) {
          Vec<F> row(ncols, K.zero());
          for (std::size_t p = 0; p < S.size(); ++p) {
            std::vector<std::size_t> rest = S;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
            std::size_t base = subset_index[i - 1].at(rest) * a_dst;
            const Vec<F>& prod = A.times_variable(S[p], m, src);
            for (std::size_t c = 0; c < a_dst; ++c) {
              if (K.is_zero(prod[c])) continue;
              row[base + c] = p % 2 ? K.sub(row[base + c], prod[c]) : K.add(row[base + c], prod[c]);
            }
          }
          space.insert(std::move(row));
          if (space.dimension() == ncols) break;
        }
        if (space.dimension() == ncols) break;
      }
      rk[i] = static_cast<long>(space.dimension());
    }
    for (int i = 0; i <= n; ++i) {
      long b = size[i] - rk[i] - rk[i + 1];
      if (b) table.entries[{i, j}] = b;
    }
  }
  return table;
}

/// Replace the last variable by a random combination of the others and
/// drop it: the image of I in a ring with one variable fewer.
template <class F>
std::vector<Polynomial<F>> cut_by_random_form(const std::vector<Polynomial<F>>& gens, const RingPtr<F>& ring,
                                              const RingPtr<F>& smaller, std::mt19937_64& rng) {
  const std::size_t n = ring->num_vars();
  std::vector<Polynomial<F>> images;
  Polynomial<F> last(smaller);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    images.push_back(Polynomial<F>::variable(smaller, i));
    last += Polynomial<F>::variable(smaller, i).scaled(ring->field().random_nonzero(rng));
  }
  images.push_back(last);
  std::vector<Polynomial<F>> out;
  for (const auto& g : gens) {
    auto h = substitute(g, images, smaller);
    if (!h.is_zero()) out.push_back(std::move(h));
  }
  return out;
}

template <class F>
RingPtr<F> drop_last_variables(const RingPtr<F>& ring, std::size_t k) {
  std::vector<std::string> names(ring->names().begin(), ring->names().end() - static_cast<std::ptrdiff_t>(k));
  return make_ring(ring->field(), std::move(names));
}

struct DepthResult {
  int depth = 0;            // exact value, or a lower bound when !exact
  bool exact = false;
  int dimension = 0;
  int regular_forms = 0;    // linear forms certified regular by Hilbert series
  std::string certificate;  // how depth 0 of the final quotient was certified
};

struct DepthOptions {
  std::uint64_t seed = 1;
  int attempts = 3;      // random forms tried before declaring a quotient depth 0 candidate
  int socle_ceiling = 60;
  std::size_t pair_budget = 0;  // S-pair reductions per Groebner basis; 0 for no cap
};

/// A maximal regular sequence of linear forms, certified through Hilbert
/// series, followed by a depth-zero certificate for what remains.
template <class F>
struct Reduction {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> gens;
  int cuts = 0;
};

template <class F>
Reduction<F> cut_regular_forms(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, const DepthOptions& opt,
                               int max_cuts = -1) {
  Reduction<F> cur{ring, gens, 0};
  auto rng = make_rng(opt.seed, Stream::depth);
  while (cur.ring->num_vars() > 1 && (max_cuts < 0 || cur.cuts < max_cuts)) {
    HilbertSeries hs = Ideal<F>(cur.ring, cur.gens, opt.pair_budget).hilbert_series();
    if (hs.dimension() <= 0) break;
    auto smaller = drop_last_variables(cur.ring, 1);
    bool cut = false;
    for (int a = 0; a < opt.attempts && !cut; ++a) {
      auto next = cut_by_random_form(cur.gens, cur.ring, smaller, rng);
      if (Ideal<F>(smaller, next, opt.pair_budget).hilbert_series() == hs.cut_by_regular(1)) {
        cur = {smaller, std::move(next), cur.cuts + 1};
        cut = true;
      }
    }
    if (!cut) break;
  }
  return cur;
}

template <class F>
DepthResult depth(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, const DepthOptions& opt = {}) {
  DepthResult out;
  Ideal<F> I(ring, gens, opt.pair_budget);
  out.dimension = I.dimension();
  if (out.dimension < 0) throw std::invalid_argument("depth of the zero module");
  Reduction<F> red = cut_regular_forms(ring, gens, opt);
  out.regular_forms = red.cuts;
  out.depth = red.cuts;
  GradedQuotient<F> A(red.ring, red.gens, opt.pair_budget);
  const int dim_rest = A.ideal().dimension();
  if (dim_rest == 0) {
    out.exact = true;
    out.certificate = "artinian after " + std::to_string(red.cuts) + " regular linear forms";
    return out;
  }
  if (red.ring->num_vars() == 1) {  // k[x] itself remains
    out.depth += 1;
    out.exact = true;
    out.certificate = "polynomial ring in one variable remains";
    return out;
  }
  const int bound = std::min(opt.socle_ceiling, A.ideal().groebner().max_degree() + static_cast<int>(red.ring->num_vars()));
  for (int j = 0; j <= bound; ++j)
    if (A.has_socle_in_degree(j)) {
      out.exact = true;
      out.certificate = "socle element in degree " + std::to_string(j) + " after " + std::to_string(red.cuts) +
                        " regular linear forms";
      return out;
    }
  // Last resort: (I : m) = I decides depth zero exactly.
  Ideal<F> Ired(red.ring, red.gens, opt.pair_budget);
  std::vector<Polynomial<F>> vars;
  for (std::size_t k = 0; k < red.ring->num_vars(); ++k) vars.push_back(Polynomial<F>::variable(red.ring, k));
  Ideal<F> socle = colon_ideal(Ired, Ideal<F>(red.ring, vars));
  if (!Ired.contains(socle)) {
    out.exact = true;
    out.certificate = "(I : m) differs from I after " + std::to_string(red.cuts) + " regular linear forms";
  } else {
    out.certificate = "no regular linear form found and no socle element; depth at least " + std::to_string(red.cuts);
  }
  return out;
}

struct BettiOptions {
  std::uint64_t seed = 1;
  int ceiling = 60;
};

/// Minimal graded Betti numbers of S/I over S. Regular linear forms are cut
/// first (Betti numbers are unchanged), then Koszul homology is computed with
/// an adaptive degree bound until the Euler characteristic matches the
/// Hilbert series numerator or the ceiling is hit.
template <class F>
BettiTable betti_table(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, const BettiOptions& opt = {}) {
  DepthOptions dopt;
  dopt.seed = opt.seed;
  Reduction<F> red = cut_regular_forms(ring, gens, dopt);
  GradedQuotient<F> A(red.ring, red.gens);
  const HilbertSeries hs = A.hilbert_series();
  const int n = static_cast<int>(red.ring->num_vars());
  int bound;
  if (hs.dimension() == 0) {
    int top = static_cast<int>(hs.reduced_numerator().size()) - 1;  // series is a polynomial
    bound = top + n;
  } else {
    bound = A.ideal().groebner().max_degree() + n;
  }
  bound = std::min(bound, opt.ceiling);
  while (true) {
    BettiTable t = koszul_betti(A, bound);
    t.complete = t.euler_polynomial() == hs.numerator();
    if (t.complete || bound >= opt.ceiling) return t;
    bound = std::min(2 * bound, opt.ceiling);
  }
}

struct CMResult {
  bool cohen_macaulay = false;
  bool exact = false;  // CM verdicts are exact; NOT_CM is exact once depth confirms it
  int dimension = 0;
  mpz_class multiplicity;
  std::vector<mpz_class> colengths;  // length of A/(theta) per trial
  std::optional<DepthResult> depth;
};

/// Colength test: A is CM iff length(A/(theta)) = e(A) for a linear system of
/// parameters theta; NOT_CM is confirmed by the exact depth route.
template <class F>
CMResult cohen_macaulay_test(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, std::uint64_t seed,
                             int trials = 3, bool confirm_with_depth = true, std::size_t pair_budget = 0) {
  CMResult out;
  Ideal<F> I(ring, gens, pair_budget);
  HilbertSeries hs = I.hilbert_series();
  out.dimension = hs.dimension();
  if (out.dimension < 0) throw std::invalid_argument("CM test of the zero module");
  out.multiplicity = hs.multiplicity();
  if (out.dimension == 0 || out.dimension == static_cast<int>(ring->num_vars())) {
    // Artinian, or the polynomial ring itself.
    out.cohen_macaulay = out.exact = true;
    out.colengths.push_back(out.multiplicity);
    return out;
  }
  auto rng = make_rng(seed, Stream::cm);
  const std::size_t k = static_cast<std::size_t>(out.dimension);
  auto target = drop_last_variables(ring, k);
  int valid = 0;
  for (int attempt = 0; valid < trials && attempt < 4 * trials; ++attempt) {
    // Solve theta_1..theta_k for the last k variables: each becomes a random
    // combination of the remaining ones.
    std::vector<Polynomial<F>> images;
    for (std::size_t i = 0; i + k < ring->num_vars(); ++i) images.push_back(Polynomial<F>::variable(target, i));
    for (std::size_t c = 0; c < k; ++c) {
      Polynomial<F> f(target);
      for (std::size_t i = 0; i + k < ring->num_vars(); ++i)
        f += Polynomial<F>::variable(target, i).scaled(ring->field().random_nonzero(rng));
      images.push_back(f);
    }
    std::vector<Polynomial<F>> cut;
    for (const auto& g : gens) {
      auto h = substitute(g, images, target);
      if (!h.is_zero()) cut.push_back(std::move(h));
    }
    HilbertSeries artinian = Ideal<F>(target, cut, pair_budget).hilbert_series();
    if (artinian.dimension() != 0) continue;  // not a system of parameters
    ++valid;
    out.colengths.push_back(artinian.multiplicity());
    if (artinian.multiplicity() == out.multiplicity) {
      out.cohen_macaulay = out.exact = true;
      return out;
    }
  }
  if (valid == 0) throw std::runtime_error("no system of parameters found among random linear forms");
  out.cohen_macaulay = false;
  if (confirm_with_depth) {
    DepthOptions dopt;
    dopt.seed = seed;
    dopt.pair_budget = pair_budget;
    out.depth = depth(ring, gens, dopt);
    out.exact = out.depth->exact && out.depth->depth < out.dimension;
    if (out.depth->exact && out.depth->depth == out.dimension) out.cohen_macaulay = out.exact = true;
  }
  return out;
}

/// Minimal presentation of a homogeneous ideal: columns are minimal first
/// syzygies of the generators, found degree by degree.
template <class F>
struct PresentationMatrix {
  PolyMatrix<F> entries;  // rows = generators, columns = syzygies
  std::vector<int> row_degrees, column_degrees;
  bool complete = false;

  std::size_t rows() const { return row_degrees.size(); }
  std::size_t columns() const { return column_degrees.size(); }
};

template <class F>
PresentationMatrix<F> minimal_presentation(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& mingens,
                                           const BettiTable& betti) {
  PresentationMatrix<F> out;
  const std::size_t r = mingens.size();
  for (const auto& g : mingens) out.row_degrees.push_back(g.degree());
  out.entries.assign(r, {});
  const F& K = ring->field();
  // Syzygy degrees to visit and how many minimal syzygies each holds.
  std::map<int, long> wanted;
  for (const auto& [k, v] : betti.entries)
    if (k.first == 2) wanted[k.second] = v;
  int last = betti.complete ? (wanted.empty() ? 0 : wanted.rbegin()->first) : betti.computed_to;
  int first = *std::min_element(out.row_degrees.begin(), out.row_degrees.end()) + 1;
  std::vector<std::vector<Polynomial<F>>> columns;
  for (int e = first; e <= last; ++e) {
    if (betti.complete && !wanted.count(e)) continue;
    // V_e = sum_i S_{e - d_i}; coordinates are (generator, multiplier monomial).
    std::vector<std::shared_ptr<const MonomialBasis<F>>> blocks;
    std::vector<std::size_t> offset;
    std::size_t width = 0;
    for (std::size_t i = 0; i < r; ++i) {
      blocks.push_back(monomial_basis(ring, e - out.row_degrees[i]));
      offset.push_back(width);
      width += blocks.back()->size();
    }
    if (width == 0) continue;
    MonomialBasis<F> target(ring, e);
    std::vector<Vec<F>> rows;
    for (std::size_t i = 0; i < r; ++i)
      for (const auto& m : blocks[i]->monomials()) rows.push_back(target.coordinates(mingens[i].times_term(m, K.one())));
    auto kernel = left_kernel(K, rows, target.size());
    EchelonSpace<F> known(K, width);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      int rest = e - out.column_degrees[c];
      MonomialBasis<F> multipliers(ring, rest);
      for (const auto& u : multipliers.monomials()) {
        Vec<F> v(width, K.zero());
        for (std::size_t i = 0; i < r; ++i) {
          Polynomial<F> entry = columns[c][i].times_term(u, K.one());
          if (entry.is_zero()) continue;
          Vec<F> part = blocks[i]->coordinates(entry);
          std::copy(part.begin(), part.end(), v.begin() + static_cast<std::ptrdiff_t>(offset[i]));
        }
        known.insert(std::move(v));
      }
    }
    for (const auto& k : kernel) {
      if (!known.insert(k)) continue;
      std::vector<Polynomial<F>> col;
      for (std::size_t i = 0; i < r; ++i) {
        Vec<F> part(k.begin() + static_cast<std::ptrdiff_t>(offset[i]),
                    k.begin() + static_cast<std::ptrdiff_t>(offset[i] + blocks[i]->size()));
        col.push_back(blocks[i]->polynomial(part));
      }
      columns.push_back(std::move(col));
      out.column_degrees.push_back(e);
    }
  }
  for (const auto& col : columns)
    for (std::size_t i = 0; i < r; ++i) out.entries[i].push_back(col[i]);
  out.complete = betti.complete;
  if (betti.complete) {
    long expected = betti.total(2);
    out.complete = static_cast<long>(columns.size()) == expected;
  }
  return out;
}

/// Evaluate a polynomial at a point of K^n.
template <class F>
typename F::Element evaluate(const Polynomial<F>& f, const std::vector<typename F::Element>& point) {
  const F& K = f.field();
  auto acc = K.zero();
  for (const auto& t : f.terms()) {
    auto v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (int e = 0; e < t.monomial[i]; ++e) v = K.mul(v, point[i]);
    acc = K.add(acc, v);
  }
  return acc;
}

/// Generic rank of the columns of degree one above the generator degree,
/// as the best of several random evaluations.
template <class F>
std::size_t linear_rank(const PresentationMatrix<F>& p, const RingPtr<F>& ring, std::uint64_t seed, int trials = 5) {
  if (p.rows() == 0) return 0;
  int d = p.row_degrees.front();
  std::vector<std::size_t> linear_cols;
  for (std::size_t c = 0; c < p.columns(); ++c)
    if (p.column_degrees[c] == d + 1) linear_cols.push_back(c);
  if (linear_cols.empty()) return 0;
  const F& K = ring->field();
  auto rng = make_rng(seed, Stream::linear_rank);
  std::size_t best = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<typename F::Element> point;
    for (std::size_t i = 0; i < ring->num_vars(); ++i) point.push_back(K.random_nonzero(rng));
    std::vector<Vec<F>> rows;
    for (std::size_t i = 0; i < p.rows(); ++i) {
      Vec<F> row;
      for (auto c : linear_cols) row.push_back(evaluate(p.entries[i][c], point));
      rows.push_back(std::move(row));
    }
    best = std::max(best, rank(K, rows, linear_cols.size()));
  }
  return best;
}

}  // namespace fiberlab

#endif  // FIBERLAB_RESOLUTION_HPP
