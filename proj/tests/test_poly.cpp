#include <gtest/gtest.h>

#include "segre/errors.hpp"
#include "segre/ideal_io.hpp"
#include "segre/poly.hpp"
#include "support/oracles.hpp"

using namespace segre;

namespace {

class PolyTest : public ::testing::Test {
 protected:
  RingPtr xyz = PolynomialRing::make({"x", "y", "z"}, PrimeField(7));
  Polynomial p(const char* text) const { return parse_polynomial(text, xyz); }
};

}  // namespace

TEST(MonomialOrder, GrevlexExamples) {
  const auto ord = MonomialOrder::grevlex();
  EXPECT_EQ(ord.compare(Monomial{2, 0, 0}, Monomial{1, 1, 0}), std::strong_ordering::greater);  // x^2 > xy
  EXPECT_EQ(ord.compare(Monomial{1, 0, 0}, Monomial{0, 1, 0}), std::strong_ordering::greater);  // x > y
  EXPECT_EQ(ord.compare(Monomial{0, 0, 2}, Monomial{1, 1, 0}), std::strong_ordering::less);     // z^2 < xy
  EXPECT_EQ(ord.compare(Monomial{0, 0, 3}, Monomial{1, 1, 0}), std::strong_ordering::greater);  // degree first
  EXPECT_EQ(ord.compare(Monomial{1, 1, 1}, Monomial{1, 1, 1}), std::strong_ordering::equal);
}

TEST(MonomialOrder, GrevlexDiffersFromDeglex) {
  // x*z^2 vs y^3: deglex says x z^2 > y^3, grevlex says y^3 > x z^2.
  EXPECT_EQ(MonomialOrder::grevlex().compare(Monomial{0, 3, 0}, Monomial{1, 0, 2}), std::strong_ordering::greater);
}

TEST(MonomialOrder, BlockOrderComparesAuxiliaryFirst) {
  const auto ord = MonomialOrder::block(2);  // variables x, y, t
  EXPECT_EQ(ord.compare(Monomial{0, 0, 1}, Monomial{5, 5, 0}), std::strong_ordering::greater);
  EXPECT_EQ(ord.compare(Monomial{2, 0, 1}, Monomial{1, 1, 1}), std::strong_ordering::greater);
  EXPECT_EQ(ord.compare(Monomial{0, 2, 0}, Monomial{1, 0, 0}), std::strong_ordering::greater);
}

TEST(MonomialOrder, DimensionMismatch) {
  EXPECT_THROW(MonomialOrder::grevlex().compare(Monomial{1, 0}, Monomial{1, 0, 0}), ValidationError);
}

TEST(MonomialOrder, StrictTotalMultiplicativeOrder) {
  RandomSource rng(17);
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::block(3)}) {
    for (int i = 0; i < 5000; ++i) {
      const Monomial a = segre::testing::random_monomial(4, rng, 3);
      const Monomial b = segre::testing::random_monomial(4, rng, 3);
      const Monomial c = segre::testing::random_monomial(4, rng, 3);
      const auto ab = ord.compare(a, b);
      ASSERT_EQ(ab, 0 <=> ord.compare(b, a));  // antisymmetry
      ASSERT_EQ(ab == 0, a == b);
      if (ab > 0 && ord.compare(b, c) > 0) ASSERT_TRUE(ord.compare(a, c) > 0);  // transitivity
      if (ab > 0) ASSERT_TRUE(ord.compare(a * c, b * c) > 0);                  // multiplicativity
      ASSERT_TRUE(ord.compare(a * c, a) >= 0);                                    // 1 is the least monomial
    }
  }
}

TEST(Monomial, DegreeTracksExponents) {
  Monomial m(3);
  m.set(0, 4);
  m.set(2, 1);
  EXPECT_EQ(m.degree(), 5u);
  m.set(0, 1);
  EXPECT_EQ(m.degree(), 2u);
  EXPECT_EQ((m * Monomial{1, 1, 1}).degree(), 5u);
  EXPECT_EQ(lcm(Monomial{2, 0, 1}, Monomial{1, 3, 0}), (Monomial{2, 3, 1}));
  EXPECT_EQ(gcd(Monomial{2, 0, 1}, Monomial{1, 3, 0}), (Monomial{1, 0, 0}));
}

TEST(Monomial, ExponentOverflowGuard) {
  Monomial m(1);
  EXPECT_NO_THROW(m.set(0, kMaxExponent));
  EXPECT_THROW(m.set(0, kMaxExponent + 1), ResourceLimitError);
  EXPECT_THROW(m * Monomial{1}, ResourceLimitError);
}

TEST_F(PolyTest, ArithmeticExamples) {
  EXPECT_EQ(p("x + y") + p("x - y"), p("2*x"));
  EXPECT_EQ(to_string(p("x + y") + p("x - y")), "2*x");
  EXPECT_EQ(p("x + y") * p("x - y"), p("x^2 - y^2"));
  const Polynomial f = p("3*x^2*y - z + 1");
  EXPECT_TRUE((f + (-f)).is_zero());
  EXPECT_TRUE((f - f).terms().empty());
}

TEST_F(PolyTest, MultiplicationMergesLikeTerms) {
  EXPECT_EQ(p("x + y") * p("x + y"), p("x^2 + 2*x*y + y^2"));
  // over F_7, (x + y)^7 = x^7 + y^7
  Polynomial f = p("x + y"), pow = p("1");
  for (int i = 0; i < 7; ++i) pow = pow * f;
  EXPECT_EQ(pow, p("x^7 + y^7"));
}

TEST_F(PolyTest, DegreeInfo) {
  auto info = p("x^2*y + z^3").degree_info();
  EXPECT_EQ(info.degree, 3u);
  EXPECT_TRUE(info.homogeneous);
  info = p("x^2 + y").degree_info();
  EXPECT_EQ(info.degree, 2u);
  EXPECT_FALSE(info.homogeneous);
  info = Polynomial(xyz).degree_info();
  EXPECT_FALSE(info.degree.has_value());
  EXPECT_TRUE(info.homogeneous);
}

TEST_F(PolyTest, TermsStrictlyDecreasing) {
  const Polynomial f = p("z^2 + x*y + x^2 + y*z + 3 + x");
  for (std::size_t i = 1; i < f.size(); ++i) {
    EXPECT_TRUE(xyz->compare(f.terms()[i - 1].mono, f.terms()[i].mono) > 0);
  }
  EXPECT_EQ(to_string(f), "x^2 + x*y + y*z + z^2 + x + 3");
}

TEST_F(PolyTest, RenderingUsesSymmetricCoefficients) {
  EXPECT_EQ(to_string(p("3*x^2*y - z^3")), "3*x^2*y - z^3");
  EXPECT_EQ(to_string(p("-x + 6")), "-x - 1");
  EXPECT_EQ(to_string(Polynomial(xyz)), "0");
}

TEST_F(PolyTest, RingMismatch) {
  const RingPtr other = PolynomialRing::make({"a", "b"}, PrimeField(7));
  EXPECT_THROW(p("x") + Polynomial::variable(other, 0), RingMismatchError);
  // Structurally equal rings interoperate.
  const RingPtr twin = PolynomialRing::make({"x", "y", "z"}, PrimeField(7));
  EXPECT_EQ(p("x") + Polynomial::variable(twin, 1), p("x + y"));
}

TEST(PolynomialRing, Validation) {
  EXPECT_THROW(PolynomialRing::make({"x", "x"}), ValidationError);
  EXPECT_THROW(PolynomialRing::make({"1x"}), ValidationError);
  EXPECT_THROW(PolynomialRing::make({}), ValidationError);
  const RingPtr r = PolynomialRing::make({"x", "t"});
  const RingPtr ext = r->with_auxiliary();
  EXPECT_EQ(ext->num_vars(), 3u);
  EXPECT_TRUE(ext->has_auxiliary());
  EXPECT_EQ(ext->auxiliary_index(), 2u);
  EXPECT_NE(ext->names()[2], "t");  // a fresh name
}

TEST(PolynomialRing, ChangeRingRoundTrip) {
  const RingPtr r = PolynomialRing::standard(3);
  const RingPtr ext = r->with_auxiliary();
  const Polynomial f = parse_polynomial("x0^2 - 3*x1*x2 + x2", r);
  const Polynomial g = change_ring(f, ext);
  EXPECT_EQ(g.size(), f.size());
  EXPECT_EQ(change_ring(g, r), f);
  const Polynomial t = Polynomial::variable(ext, 3);
  EXPECT_THROW(change_ring(t * g, r), InternalError);
}

TEST(MonomialsOfDegree, Examples) {
  const RingPtr xy = PolynomialRing::make({"x", "y"});
  const auto two = monomials_of_degree(*xy, 2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0], (Monomial{2, 0}));
  EXPECT_EQ(two[1], (Monomial{1, 1}));
  EXPECT_EQ(two[2], (Monomial{0, 2}));

  const RingPtr r4 = PolynomialRing::standard(4);
  const auto zero = monomials_of_degree(*r4, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].is_one());
}

TEST(MonomialsOfDegree, CountMatchesBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const RingPtr r = PolynomialRing::standard(n);
    for (std::uint32_t d = 0; d <= 5; ++d) {
      const auto fast = monomials_of_degree(*r, d);
      EXPECT_EQ(fast.size(), segre::testing::brute_force_monomials(n, d).size());
      EXPECT_EQ(fast.size(), count_monomials(n, d));
      for (std::size_t i = 1; i < fast.size(); ++i) EXPECT_TRUE(r->compare(fast[i - 1], fast[i]) > 0);
    }
  }
  EXPECT_EQ(monomials_of_degree(*PolynomialRing::standard(3), 3).size(), 10u);
}

TEST(MonomialsOfDegree, ExcludesAuxiliaryAndGuardsSize) {
  const RingPtr ext = PolynomialRing::standard(2)->with_auxiliary();
  for (const Monomial& m : monomials_of_degree(*ext, 3, true)) EXPECT_EQ(m[2], 0u);
  EXPECT_EQ(monomials_of_degree(*ext, 3, false).size(), 10u);
  ResourceLimits tiny;
  tiny.max_monomials = 5;
  EXPECT_THROW(monomials_of_degree(*PolynomialRing::standard(3), 3, true, tiny), ResourceLimitError);
}

TEST(PolyProperties, RingAxioms) {
  const RingPtr r = PolynomialRing::make({"x", "y", "z"}, PrimeField(101));
  RandomSource rng(5);
  for (int i = 0; i < 1000; ++i) {
    const Polynomial a = segre::testing::random_polynomial(r, rng, 3, 4);
    const Polynomial b = segre::testing::random_polynomial(r, rng, 3, 4);
    const Polynomial c = segre::testing::random_polynomial(r, rng, 2, 4);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a - b, a + (-b));
    if (!a.is_zero() && !b.is_zero()) {
      const Polynomial ab = a * b;
      ASSERT_EQ(ab.leading_monomial(), a.leading_monomial() * b.leading_monomial());
      ASSERT_EQ(ab.leading_coefficient(), r->field().mul(a.leading_coefficient(), b.leading_coefficient()));
    }
  }
}
