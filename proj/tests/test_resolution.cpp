#include <gtest/gtest.h>

#include "fiberlab/parser.hpp"
#include "fiberlab/resolution.hpp"

using namespace fiberlab;

namespace {

RingPtr<PrimeField> ring_of(std::vector<std::string> names) { return make_ring(PrimeField(), std::move(names)); }

std::vector<Polynomial<PrimeField>> polys(const RingPtr<PrimeField>& ring, const std::string& list) {
  std::string vars;
  for (const auto& n : ring->names()) vars += (vars.empty() ? "" : ",") + n;
  auto in = parse_ideal_text("ring " + vars + " over 32003; ideal " + list + ";");
  std::vector<Polynomial<PrimeField>> out;
  for (const auto& g : in.generators) out.push_back(to_polynomial(g, ring));
  return out;
}

// Koszul homology of the quotient itself, no regular forms cut: an
// independent route to the Betti table for small cases.
BettiTable direct_betti(const RingPtr<PrimeField>& R, const std::vector<Polynomial<PrimeField>>& gens, int bound) {
  GradedQuotient<PrimeField> A(R, gens);
  return koszul_betti(A, bound);
}

}  // namespace

TEST(Betti, KoszulComplexOfTheMaximalIdeal) {
  auto R = ring_of({"x", "y", "z"});
  auto t = betti_table(R, polys(R, "x, y, z"));
  EXPECT_TRUE(t.complete);
  EXPECT_EQ(t.at(0, 0), 1);
  EXPECT_EQ(t.at(1, 1), 3);
  EXPECT_EQ(t.at(2, 2), 3);
  EXPECT_EQ(t.at(3, 3), 1);
  EXPECT_EQ(t.projective_dimension(), 3);
}

TEST(Betti, PolynomialRingHasRegularityZero) {
  auto R = ring_of({"x", "y"});
  auto t = betti_table(R, std::vector<Polynomial<PrimeField>>{});
  EXPECT_TRUE(t.complete);
  EXPECT_EQ(t.entries.size(), 1u);
  EXPECT_EQ(t.regularity(), 0);
}

TEST(Betti, TwistedCubicAndSkewLines) {
  auto R = ring_of({"x", "y", "z", "w"});
  auto cubic = betti_table(R, polys(R, "x*z - y^2, x*w - y*z, y*w - z^2"));
  EXPECT_TRUE(cubic.complete);
  EXPECT_EQ(cubic.at(1, 2), 3);
  EXPECT_EQ(cubic.at(2, 3), 2);
  EXPECT_EQ(cubic.regularity(), 1);

  auto lines = betti_table(R, polys(R, "x*z, x*w, y*z, y*w"));
  EXPECT_TRUE(lines.complete);
  EXPECT_EQ(lines.at(1, 2), 4);
  EXPECT_EQ(lines.at(2, 3), 4);
  EXPECT_EQ(lines.at(3, 4), 1);
}

TEST(Betti, CuttingRegularFormsAgreesWithDirectKoszul) {
  auto R = ring_of({"x", "y", "z"});
  for (const char* list : {"z^6, y*z^5, y^2*z^4, x*y^2*z^3, x^2*y^2*z^2, x^3*y^3", "x^2 - y^2, x*y, x*z, y*z",
                           "x^2, x*y, x*z, y*z", "x^3 + y^3 + z^3"}) {
    auto gens = polys(R, list);
    auto cut = betti_table(R, gens);
    auto direct = direct_betti(R, gens, 14);
    ASSERT_TRUE(cut.complete) << list;
    EXPECT_EQ(cut.entries, direct.entries) << list;
    EXPECT_EQ(cut.euler_polynomial(), Ideal<PrimeField>(R, gens).hilbert_series().numerator()) << list;
  }
}

TEST(Depth, MatchesAuslanderBuchsbaum) {
  auto R = ring_of({"x", "y", "z"});
  struct Case {
    const char* list;
    int depth;
  };
  for (auto c : {Case{"x", 2}, Case{"x^2, x*y, x*z, y*z", 0}, Case{"x^2 - y^2, x*y, x*z, y*z", 0},
                 Case{"z^6, y*z^5, y^2*z^4, x*y^2*z^3, x^2*y^2*z^2, x^3*y^3", 1}, Case{"x*y, x*z", 1}}) {
    auto gens = polys(R, c.list);
    auto d = depth(R, gens);
    EXPECT_TRUE(d.exact) << c.list;
    EXPECT_EQ(d.depth, c.depth) << c.list;
    auto direct = direct_betti(R, gens, 14);
    EXPECT_EQ(d.depth, 3 - direct.projective_dimension()) << c.list;
  }
  auto S = ring_of({"x", "y", "z", "w"});
  auto lines = depth(S, polys(S, "x*z, x*w, y*z, y*w"));
  EXPECT_TRUE(lines.exact);
  EXPECT_EQ(lines.depth, 1);
  EXPECT_EQ(lines.dimension, 2);
}

TEST(Depth, SeedsDoNotChangeExactAnswers) {
  auto R = ring_of({"x", "y", "z", "w"});
  auto gens = polys(R, "x*z - y^2, x*w - y*z, y*w - z^2");
  for (std::uint64_t seed : {1, 2, 3}) {
    DepthOptions o;
    o.seed = seed;
    auto d = depth(R, gens, o);
    EXPECT_TRUE(d.exact);
    EXPECT_EQ(d.depth, 2);
  }
}

TEST(Depth, PairBudgetStopsTheGroebnerBasis) {
  auto R = ring_of({"x", "y", "z", "w"});
  auto gens = polys(R, "x*z - y^2, x*w - y*z, y*w - z^2");
  DepthOptions o;
  o.pair_budget = 1;
  EXPECT_THROW(depth(R, gens, o), BoundExceeded);
  o.pair_budget = 50;
  EXPECT_EQ(depth(R, gens, o).depth, 2);
  EXPECT_THROW(cohen_macaulay_test(R, gens, 1, 3, true, 1), BoundExceeded);
}

TEST(CohenMacaulay, ColengthTest) {
  auto R = ring_of({"x", "y", "z", "w"});
  auto poly = cohen_macaulay_test(R, std::vector<Polynomial<PrimeField>>{}, 1);
  EXPECT_TRUE(poly.cohen_macaulay);
  auto cubic = cohen_macaulay_test(R, polys(R, "x*z - y^2, x*w - y*z, y*w - z^2"), 1);
  EXPECT_TRUE(cubic.cohen_macaulay);
  EXPECT_EQ(cubic.multiplicity, 3);
  auto lines = cohen_macaulay_test(R, polys(R, "x*z, x*w, y*z, y*w"), 1);
  EXPECT_FALSE(lines.cohen_macaulay);
  EXPECT_TRUE(lines.exact);
  ASSERT_TRUE(lines.depth.has_value());
  EXPECT_EQ(lines.depth->depth, 1);
  for (const auto& c : lines.colengths) EXPECT_GT(c, lines.multiplicity);
}

TEST(Presentation, ColumnsAreMinimalSyzygies) {
  auto R = ring_of({"x", "y", "z"});
  for (const char* list : {"x, y", "x^2 - y^2, x*y, x*z, y*z", "z^6, y*z^5, y^2*z^4, x*y^2*z^3, x^2*y^2*z^2, x^3*y^3"}) {
    auto gens = minimal_generators(polys(R, list));
    auto betti = betti_table(R, gens);
    auto p = minimal_presentation(R, gens, betti);
    EXPECT_TRUE(p.complete) << list;
    EXPECT_EQ(static_cast<long>(p.columns()), betti.total(2)) << list;
    for (std::size_t c = 0; c < p.columns(); ++c) {
      Polynomial<PrimeField> sum(R);
      for (std::size_t i = 0; i < p.rows(); ++i) {
        sum += gens[i] * p.entries[i][c];
        const auto& e = p.entries[i][c];
        EXPECT_TRUE(e.is_zero() || e.degree() > 0) << list;
        if (!e.is_zero()) {
          EXPECT_EQ(e.degree() + p.row_degrees[i], p.column_degrees[c]);
        }
      }
      EXPECT_TRUE(sum.is_zero()) << list;
    }
  }
}

TEST(Presentation, LinearRank) {
  auto R = ring_of({"x", "y", "z"});
  auto ci = polys(R, "x, y");
  auto p = minimal_presentation(R, ci, betti_table(R, ci));
  EXPECT_EQ(linear_rank(p, R, 1), 1u);

  auto bin = minimal_generators(polys(R, "x^2 - y^2, x*y, x*z, y*z"));
  auto q = minimal_presentation(R, bin, betti_table(R, bin));
  EXPECT_EQ(linear_rank(q, R, 1), 3u);
  bool all_linear = true;
  for (int deg : q.column_degrees) all_linear = all_linear && deg == 3;
  EXPECT_FALSE(all_linear);
}
