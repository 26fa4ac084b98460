#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "segre/errors.hpp"
#include "segre/field.hpp"

using namespace segre;

TEST(Field, ArithmeticExamples) {
  const PrimeField f7(7);
  EXPECT_EQ(f7.mul(f7.from_int(3), f7.from_int(5)).value(), 1u);
  EXPECT_EQ(f7.add(f7.from_int(6), f7.from_int(1)).value(), 0u);
  EXPECT_EQ(f7.sub(f7.from_int(2), f7.from_int(5)).value(), 4u);

  const PrimeField fp;
  EXPECT_EQ(fp.characteristic(), 32749u);
  EXPECT_EQ(fp.mul(fp.from_int(2), fp.from_int(16375)).value(), 1u);
}

TEST(Field, Inverse) {
  const PrimeField f7(7);
  EXPECT_EQ(f7.inv(f7.from_int(3)).value(), 5u);
  EXPECT_EQ(f7.inv(f7.one()).value(), 1u);
  const PrimeField fp;
  EXPECT_EQ(fp.inv(fp.from_int(2)).value(), 16375u);
  EXPECT_THROW(fp.inv(fp.zero()), DivisionByZeroError);
}

TEST(Field, FromIntReducesNegatives) {
  const PrimeField f7(7);
  EXPECT_EQ(f7.from_int(-1).value(), 6u);
  EXPECT_EQ(f7.from_int(-14).value(), 0u);
  EXPECT_EQ(f7.symmetric(f7.from_int(6)), -1);
  EXPECT_EQ(f7.symmetric(f7.from_int(3)), 3);
}

TEST(Field, RejectsBadCharacteristic) {
  EXPECT_THROW(PrimeField(6), ValidationError);
  EXPECT_THROW(PrimeField(1), ValidationError);
  EXPECT_THROW(PrimeField(0), ValidationError);
  EXPECT_THROW(PrimeField(1u << 31), ValidationError);
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(2147483647u));  // 2^31 - 1
}

TEST(Field, LargestPrimeDoesNotOverflow) {
  const PrimeField f(2147483647u);
  const auto a = f.from_int(2147483646);  // -1
  EXPECT_EQ(f.mul(a, a).value(), 1u);
  EXPECT_EQ(f.add(a, a).value(), 2147483645u);
  EXPECT_EQ(f.mul(a, f.inv(a)).value(), 1u);
}

TEST(FieldRandom, ReplayIsDeterministic) {
  const PrimeField f7(7);
  RandomSource a(1234), b(1234);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(f7.random(a), f7.random(b));
}

TEST(FieldRandom, NonzeroNeverZero) {
  const PrimeField f2(2);
  const PrimeField f7(7);
  RandomSource rng(99);
  for (int i = 0; i < 10000; ++i) {
    EXPECT_FALSE(f7.random(rng, true).is_zero());
    EXPECT_EQ(f2.random(rng, true).value(), 1u);
  }
}

TEST(FieldRandom, ResidueFrequenciesWithinFiveSigma) {
  // Binomial(N, 1/p) count per residue: sigma = sqrt(N p_i (1 - p_i)).
  const PrimeField f7(7);
  constexpr int kDraws = 10000;
  RandomSource rng(2024);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < kDraws; ++i) ++counts[f7.random(rng).value()];
  const double expected = kDraws / 7.0;
  const double sigma = std::sqrt(kDraws * (1.0 / 7) * (6.0 / 7));
  for (int c : counts) EXPECT_LT(std::abs(c - expected), 5 * sigma);

  double chi2 = 0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 22.46);  // 6 degrees of freedom, p = 0.001
}

TEST(FieldProperties, AxiomsOnRandomTriples) {
  for (std::uint32_t p : {2u, 7u, 32749u, 2147483647u}) {
    const PrimeField F(p);
    RandomSource rng(p);
    for (int i = 0; i < 10000; ++i) {
      const auto a = F.random(rng), b = F.random(rng), c = F.random(rng);
      ASSERT_LT(a.value(), p);
      ASSERT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
      ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
      ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      ASSERT_EQ(F.add(a, b), F.add(b, a));
      ASSERT_EQ(F.mul(a, b), F.mul(b, a));
      ASSERT_EQ(F.add(a, F.neg(a)), F.zero());
      ASSERT_EQ(F.sub(a, b), F.add(a, F.neg(b)));
      if (!a.is_zero()) ASSERT_EQ(F.mul(a, F.inv(a)), F.one());
      ASSERT_LT(F.mul(a, b).value(), p);
      ASSERT_LT(F.sub(a, b).value(), p);
    }
  }
}

TEST(Primality, SmallValues) {
  std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 32749, 65521};
  for (auto p : primes) EXPECT_TRUE(is_prime(p)) << p;
  for (std::uint64_t n : {0ull, 1ull, 4ull, 6ull, 9ull, 32747ull, 32751ull}) EXPECT_FALSE(is_prime(n)) << n;
}
