#include <random>

#include <gtest/gtest.h>

#include "fiberlab/coeffs.hpp"

using namespace fiberlab;

TEST(PrimeField, SmallArithmetic) {
  PrimeField f5(5);
  EXPECT_EQ(f5.add(3, 4), 2u);
  EXPECT_EQ(f5.inv(2), 3u);
  PrimeField big(32003);
  EXPECT_EQ(big.add(32002, 1), 0u);
  EXPECT_EQ(big.sub(0, 1), 32002u);
  EXPECT_EQ(big.neg(0), 0u);
}

// Independent oracle: the inverse is the unique x in [1, p) with 2x = 1 mod p,
// found by scanning.
TEST(PrimeField, InverseOfTwoMatchesScan) {
  PrimeField f(32003);
  std::uint32_t found = 0;
  for (std::uint32_t x = 1; x < 32003; ++x)
    if (2ull * x % 32003 == 1) found = x;
  EXPECT_EQ(found, 16002u);
  EXPECT_EQ(f.inv(2), found);
}

TEST(PrimeField, RejectsBadCharacteristics) {
  EXPECT_THROW(PrimeField(2), std::invalid_argument);
  EXPECT_THROW(PrimeField(9), std::invalid_argument);
  EXPECT_THROW(FieldSpec::prime(2147483659ull), std::invalid_argument);
  EXPECT_NO_THROW(FieldSpec::prime(2147483647ull));
  EXPECT_THROW(PrimeField(7).inv(0), std::domain_error);
}

TEST(PrimeField, SymmetricPrinting) {
  PrimeField f(7);
  EXPECT_EQ(f.to_string(6), "-1");
  EXPECT_EQ(f.to_string(3), "3");
  EXPECT_EQ(f.to_string(4), "-3");
  EXPECT_EQ(f.from_int(-3), 4u);
}

TEST(RationalField, Arithmetic) {
  RationalField q;
  mpq_class half(1, 2), two_thirds(2, 3);
  EXPECT_EQ(q.mul(half, two_thirds), mpq_class(1, 3));
  EXPECT_EQ(q.inv(mpq_class(-3, 7)), mpq_class(-7, 3));
  EXPECT_THROW(q.inv(q.zero()), std::domain_error);
}

TEST(FieldElement, MismatchIsAnError) {
  auto a = FieldElement<PrimeField>::from_int(PrimeField(5), 3);
  auto b = FieldElement<PrimeField>::from_int(PrimeField(7), 3);
  EXPECT_THROW(a + b, std::invalid_argument);
  auto c = FieldElement<PrimeField>::from_int(PrimeField(5), 4);
  EXPECT_EQ((a + c).value(), 2u);
  EXPECT_EQ((a * c.inverse() * c).value(), 3u);
}

template <class F>
void field_axioms(const F& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 10000; ++trial) {
    auto a = field.random_nonzero(rng), b = field.random_nonzero(rng), c = field.random_nonzero(rng);
    if (trial % 7 == 0) b = field.zero();
    ASSERT_TRUE(field.equal(field.add(field.add(a, b), c), field.add(a, field.add(b, c))));
    ASSERT_TRUE(field.equal(field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c))));
    ASSERT_TRUE(field.equal(field.mul(a, field.add(b, c)), field.add(field.mul(a, b), field.mul(a, c))));
    ASSERT_TRUE(field.is_one(field.mul(a, field.inv(a))));
    ASSERT_TRUE(field.is_zero(field.add(a, field.neg(a))));
    ASSERT_TRUE(field.equal(field.sub(a, b), field.add(a, field.neg(b))));
  }
}

TEST(FieldAxioms, PrimeField) { field_axioms(PrimeField(32003), 1); }
TEST(FieldAxioms, SmallPrimeField) { field_axioms(PrimeField(101), 2); }
TEST(FieldAxioms, Rationals) { field_axioms(RationalField(), 3); }

TEST(RationalField, CanonicalForm) {
  RationalField q;
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10000; ++trial) {
    auto a = q.div(q.random_nonzero(rng), q.random_nonzero(rng));
    auto b = q.add(a, q.div(q.random_nonzero(rng), q.random_nonzero(rng)));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    ASSERT_EQ(g, 1);
    ASSERT_GT(b.get_den(), 0);
  }
}
