#include <algorithm>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fiberlab/crosschecks.hpp"
#include "fiberlab/parser.hpp"
#include "fiberlab/predicates.hpp"

using namespace fiberlab;

namespace {

using A = Analysis<PrimeField>;

std::unique_ptr<A> analysis_of(const std::string& vars, const std::string& list, Settings s = {}) {
  auto in = build_input(parse_ideal_text("ring " + vars + " over 32003; ideal " + list + ";"), PrimeField());
  return std::make_unique<A>(in.ring, in.generators, s);
}

std::unique_ptr<A> corpus_analysis(const std::string& id, Settings s = {}) {
  std::ifstream f(std::string(FIBERLAB_CORPUS_DIR) + "/" + id + ".ideal");
  std::stringstream ss;
  ss << f.rdbuf();
  auto parsed = parse_ideal_text(ss.str());
  auto in = build_input(parsed, PrimeField());
  return std::make_unique<A>(in.ring, in.generators, s, in.matrix);
}

const char* kMonomial4 = "x^2, x*y, x*z, y*z";
const char* kBinomial4 = "x^2 - y^2, x*y, x*z, y*z";
const char* kSixGen = "z^6, y*z^5, y^2*z^4, x*y^2*z^3, x^2*y^2*z^2, x^3*y^3";
const char* kSevenGen = "z^6, y*z^5, x*y*z^4, x*y^2*z^3, x*y^3*z^2, x^2*y^3*z, x^3*y^3";
const char* kIntersection = "x^3, x^2*y*z, x*y^2*z^2, y^3*z^3";

using Exps = std::vector<int>;

std::vector<Exps> exponent_vectors(A& a) {
  std::vector<Exps> out;
  for (const auto& g : a.generators()) out.push_back(g.leading_monomial().exponents(a.num_vars()));
  return out;
}

/// G_s for a monomial ideal by localizing at every monomial prime: set the
/// variables outside the prime to 1 and count minimal generators.
bool monomial_gs_oracle(const std::vector<Exps>& gens, std::size_t nvars, int s) {
  for (unsigned mask = 1; mask < (1u << nvars); ++mask) {
    const int height = __builtin_popcount(mask);
    if (height > s - 1) continue;
    std::vector<Exps> local;
    bool contains_ideal = true;
    for (const auto& g : gens) {
      Exps e(nvars, 0);
      bool unit = true;
      for (std::size_t i = 0; i < nvars; ++i)
        if (mask >> i & 1) e[i] = g[i], unit = unit && g[i] == 0;
      if (unit) contains_ideal = false;
      local.push_back(e);
    }
    if (!contains_ideal) continue;
    std::size_t minimal = 0;
    for (std::size_t i = 0; i < local.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < local.size() && !redundant; ++j) {
        if (i == j) continue;
        bool divides = true;
        for (std::size_t k = 0; k < nvars; ++k) divides = divides && local[j][k] <= local[i][k];
        redundant = divides && (local[j] != local[i] || j < i);
      }
      minimal += !redundant;
    }
    if (static_cast<int>(minimal) > height) return false;
  }
  return true;
}

/// Number of degree-D monomials outside a monomial ideal in three variables.
long standard_monomials(const std::vector<Exps>& gens, int D) {
  long count = 0;
  for (int a = 0; a <= D; ++a)
    for (int b = 0; a + b <= D; ++b) {
      Exps m{a, b, D - a - b};
      bool inside = std::any_of(gens.begin(), gens.end(), [&](const Exps& g) {
        return g[0] <= m[0] && g[1] <= m[1] && g[2] <= m[2];
      });
      count += !inside;
    }
  return count;
}

/// dim [J I]_{2d} read off the fiber: dim F_2 - dim (F / L F)_2.
long product_dimension_from_fiber(A& a, std::uint64_t seed, std::size_t l) {
  const auto* fp = a.fiber();
  auto gens = fp->relations;
  std::vector<Polynomial<PrimeField>> ls;
  auto gf = generic_forms(a.generators(), l, seed);
  for (const auto& row : gf.coefficients) {
    Polynomial<PrimeField> y(fp->fiber_ring);
    for (std::size_t j = 0; j < a.mu(); ++j) y += Polynomial<PrimeField>::variable(fp->fiber_ring, j).scaled(row[j]);
    gens.push_back(y);
  }
  long fiber2 = Ideal<PrimeField>(fp->fiber_ring, fp->relations).hilbert_series().hilbert_function(2).get_si();
  long cut2 = Ideal<PrimeField>(fp->fiber_ring, gens).hilbert_series().hilbert_function(2).get_si();
  return fiber2 - cut2;
}

}  // namespace

TEST(Predicates, GsMatchesMonomialLocalization) {
  for (const char* list : {kMonomial4, kSixGen, kSevenGen, kIntersection, "x, y", "x^2, x*y, y^2"}) {
    auto a = analysis_of("x,y,z", list);
    for (int s = 1; s <= 4; ++s)
      EXPECT_EQ(check_gs(*a, s).verdict, verdict_of(monomial_gs_oracle(exponent_vectors(*a), 3, s)))
          << list << " s=" << s;
  }
}

TEST(Predicates, VallaDimension) {
  // The Koszul relation y*T1 - x*T2 is irreducible, so dim S = 5 - 1.
  auto ci = analysis_of("x,y,z", "x, y");
  auto r = check_valla_dimension(*ci);
  EXPECT_EQ(r.certificate["dim_symmetric_algebra"], 4);
  EXPECT_EQ(r.verdict, Verdict::yes);
  auto meet = analysis_of("x,y,z", kIntersection);
  EXPECT_EQ(meet->mu(), 4u);
  auto m = check_valla_dimension(*meet);
  EXPECT_EQ(m.certificate["dim_symmetric_algebra"], 5);
  EXPECT_EQ(m.verdict, Verdict::no);
}

TEST(Predicates, InitialDegreeOfFiberRelations) {
  auto mono = analysis_of("x,y,z", kMonomial4);
  auto r = check_indeg(*mono);
  EXPECT_EQ(r.certificate["indeg"], 2);
  EXPECT_EQ(check_indeg(*mono, 3).verdict, Verdict::no);
  auto bin = analysis_of("x,y,z", kBinomial4);
  EXPECT_EQ(check_indeg(*bin).certificate["indeg"], 3);
  EXPECT_EQ(check_indeg(*bin, 3).verdict, Verdict::yes);
  auto ci = analysis_of("x,y,z", "x, y");
  EXPECT_EQ(check_indeg(*ci, 10).verdict, Verdict::yes);
}

TEST(Predicates, AdjustedAgreesWithFiberCount) {
  for (const char* list : {kMonomial4, kBinomial4, kSixGen, kSevenGen}) {
    auto a = analysis_of("x,y,z", list);
    for (std::size_t l = 1; l <= a->mu(); ++l) {
      for (std::uint64_t seed : {1, 2}) {
        auto d = adjustment(*a, generic_forms(a->generators(), l, seed).forms);
        EXPECT_EQ(static_cast<long>(d.product_dimension), product_dimension_from_fiber(*a, seed, l))
            << list << " l=" << l;
      }
    }
  }
}

TEST(Predicates, SingleFormIsAdjusted) {
  for (const char* list : {kMonomial4, kBinomial4, kSixGen, kSevenGen, "x, y"}) {
    auto a = analysis_of("x,y,z", list);
    EXPECT_EQ(check_adjusted(*a, 1).verdict, Verdict::yes) << list;
  }
}

TEST(Predicates, GenericTripleOfMonomialFour) {
  // The fiber is a quadric hypersurface, which a generic point avoids; the
  // fiber count then gives dim [J I]_4 = 9 = 3 * 4 - 3.
  auto a = analysis_of("x,y,z", kMonomial4);
  EXPECT_EQ(product_dimension_from_fiber(*a, 1, 3), 9);
  EXPECT_EQ(check_adjusted(*a).verdict, Verdict::yes);
}

TEST(Predicates, CompleteIntersectionIsTightAndVV) {
  auto a = analysis_of("x,y,z", "x, y");
  auto t = check_tight(*a);
  EXPECT_EQ(t.verdict, Verdict::yes);
  EXPECT_EQ(t.scope, "all n");
  EXPECT_EQ(check_vv(*a).verdict, Verdict::yes);
}

TEST(Predicates, SixGeneratorPairFailsVVAtSquare) {
  auto a = analysis_of("x,y,z", kSixGen);
  for (std::uint64_t seed : {1, 2, 3}) {
    VVData d = valabrega_valla(*a, seed, 3);
    ASSERT_TRUE(d.first_failure.has_value());
    EXPECT_EQ(*d.first_failure, 2);
    EXPECT_EQ(d.gr_regular, false);
  }
  auto r = check_vv(*a);
  EXPECT_EQ(r.verdict, Verdict::no);
  EXPECT_EQ(r.stable, true);
}

TEST(Predicates, SevenGeneratorTripleIsTight) {
  auto a = analysis_of("x,y,z", kSevenGen);
  EXPECT_EQ(a->analytic_spread().value, 3);
  auto r = check_tight(*a);
  EXPECT_EQ(r.verdict, Verdict::yes);
  EXPECT_EQ(r.stable, true);
}

TEST(Predicates, Perfection) {
  EXPECT_EQ(check_perfect(*analysis_of("x,y,z", kMonomial4)).verdict, Verdict::no);
  EXPECT_EQ(check_perfect(*analysis_of("x,y,z", kBinomial4)).verdict, Verdict::no);
  EXPECT_EQ(check_perfect(*analysis_of("x,y,z", kSixGen)).verdict, Verdict::yes);
}

TEST(Predicates, GenericCompleteIntersection) {
  EXPECT_EQ(check_generically_ci(*analysis_of("x,y,z", kBinomial4)).verdict, Verdict::yes);
  EXPECT_EQ(check_generically_ci(*analysis_of("x,y,z", kIntersection)).verdict, Verdict::no);
  EXPECT_EQ(check_generically_ci(*corpus_analysis("ex-3-matrix5x4")).verdict, Verdict::no);
}

TEST(Predicates, MultiplicityMatchesStandardMonomialCount) {
  for (const char* list : {kSixGen, kSevenGen}) {
    auto a = analysis_of("x,y,z", list);
    long e = standard_monomials(exponent_vectors(*a), 40);
    EXPECT_EQ(standard_monomials(exponent_vectors(*a), 41), e);
    EXPECT_EQ(a->multiplicity(), e) << list;
    auto r = check_multiplicity_formulas(*a);
    EXPECT_EQ(r.verdict, Verdict::yes) << list;
    EXPECT_EQ(r.certificate["perfect_height_two"]["e_from_hilbert_series"], e);
  }
}

TEST(Predicates, LinearlyPresentedMapIsBirational) {
  auto a = corpus_analysis("ex-3-linpres4");
  auto r = check_map_degree(*a);
  EXPECT_EQ(r.verdict, Verdict::yes);
  EXPECT_EQ(r.certificate["degree"], 1);
  auto m = check_multiplicity_formulas(*a);
  EXPECT_EQ(m.verdict, Verdict::yes);
  EXPECT_EQ(m.certificate["conditional"]["applicable"], true);
}

TEST(Predicates, MixedDegreesGiveUnknown) {
  auto a = analysis_of("x,y,z", kIntersection);
  for (const char* name : {"indeg", "tight", "adjusted", "vv", "reg-in-gr"})
    EXPECT_EQ(run_predicate(*a, name, {}).verdict, Verdict::unknown) << name;
  EXPECT_THROW(run_predicate(*a, "nonsense", {}), std::invalid_argument);
}

TEST(Predicates, DisagreeingSeedsGiveUnknown) {
  PredicateReport yes, no;
  yes.verdict = Verdict::yes;
  no.verdict = Verdict::no;
  auto r = combine_seeds("x", json::object(), {1, 2}, {yes, no});
  EXPECT_EQ(r.verdict, Verdict::unknown);
  EXPECT_EQ(r.stable, false);
}

TEST(Predicates, ReportJsonHasStableKeys) {
  auto a = analysis_of("x,y,z", kMonomial4);
  auto j = check_perfect(*a).to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(j["verdict"], "false");
  EXPECT_EQ(j.dump(), check_perfect(*analysis_of("x,y,z", kMonomial4)).to_json().dump());
}

TEST(CrossChecks, NoViolationsOnSmallIdeals) {
  for (const char* list : {kMonomial4, kBinomial4, kSixGen, kSevenGen, "x, y"}) {
    auto a = analysis_of("x,y,z", list);
    for (std::uint64_t seed : {1, 2, 3})
      for (const auto& c : theorem_crosschecks(*a, seed)) EXPECT_FALSE(c.violated) << list << " " << c.name;
  }
}

TEST(CrossChecks, FiberEquivalenceIsExercised) {
  auto a = analysis_of("x,y,z", kMonomial4);
  auto checks = theorem_crosschecks(*a, 1);
  auto it = std::find_if(checks.begin(), checks.end(), [](const CrossCheck& c) { return c.name == "tight_iff_fiber_cm"; });
  ASSERT_NE(it, checks.end());
  EXPECT_TRUE(it->applicable);
}
