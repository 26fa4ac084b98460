#include <gtest/gtest.h>

#include "segre/errors.hpp"
#include "segre/groebner.hpp"
#include "segre/hilbert.hpp"
#include "segre/ideal_io.hpp"
#include "support/oracles.hpp"

using namespace segre;

namespace {

void expect_parse_error(std::string_view text, std::size_t line, std::size_t column) {
  try {
    parse_ideal(text);
    ADD_FAILURE() << "no parse error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(IdealFileTest, ParsesTwistedCubic) {
  const IdealFile f = parse_ideal_file(
      "ring: x0 x1 x2 x3\n"
      "char: 101\n"
      "\n"
      "ideal:\n"
      "x1^2 - x0*x2\n"
      "  x1*x2 - x0*x3\n"
      "x2^2 - x1*x3\n");
  EXPECT_EQ(f.variables, (std::vector<std::string>{"x0", "x1", "x2", "x3"}));
  EXPECT_EQ(f.characteristic, 101u);
  ASSERT_EQ(f.generators.size(), 3u);
  EXPECT_EQ(f.generator_lines, (std::vector<std::size_t>{5, 6, 7}));
  EXPECT_EQ(f.generator_columns[1], 3u);

  const Ideal i = load_ideal(f);
  EXPECT_EQ(i.ring()->field().characteristic(), 101u);
  EXPECT_EQ(dim_degree(i), (DimDegree{1, 3}));
}

TEST(IdealFileTest, DefaultCharacteristicAndOverride) {
  const char* text = "ring: x y z\nideal:\nx*y\n";
  EXPECT_EQ(parse_ideal(text).ring()->field().characteristic(), kDefaultCharacteristic);
  EXPECT_EQ(parse_ideal(text, LoadOptions{7, false}).ring()->field().characteristic(), 7u);
  EXPECT_THROW(parse_ideal(text, LoadOptions{8, false}), ValidationError);
}

TEST(PolynomialParserTest, TermForms) {
  const RingPtr r = PolynomialRing::make({"x", "y", "z"});
  EXPECT_EQ(to_string(parse_polynomial("3*x^2*y - y*z + 5", r)), "3*x^2*y - y*z + 5");
  EXPECT_EQ(to_string(parse_polynomial("-x", r)), "-x");
  EXPECT_EQ(to_string(parse_polynomial(" x * y + y*x ", r)), "2*x*y");
  EXPECT_EQ(to_string(parse_polynomial("x^0 + 2", r)), "3");
  EXPECT_EQ(to_string(parse_polynomial("x - x", r)), "0");
  EXPECT_THROW(parse_polynomial("x^2^1", r), ParseError);
  // Coefficients are reduced modulo p.
  EXPECT_EQ(parse_polynomial("32750*x", r), parse_polynomial("x", r));
  EXPECT_EQ(parse_polynomial("-32748*y", r), parse_polynomial("y", r));
}

TEST(PolynomialParserTest, ErrorsCarryPosition) {
  expect_parse_error("ring: x y z\nideal:\nx^2 + 3*y*\n", 3, 11);
  expect_parse_error("ring: x y z\nideal:\nx^2 + w\n", 3, 7);
  expect_parse_error("ring: x y z\nideal:\n  x^y\n", 3, 5);
  expect_parse_error("ring: x y z\nideal:\nx^-1\n", 3, 3);
  expect_parse_error("ring: x y z\nideal:\nx + + y\n", 3, 5);
  expect_parse_error("ring: x y z\nideal:\nx y\n", 3, 3);
  expect_parse_error("ideal:\nx\n", 1, 1);
  expect_parse_error("ring: x y z\nx\n", 2, 1);
  expect_parse_error("ring: x y z\n", 2, 1);
  expect_parse_error("ring: x 2y\nideal:\nx\n", 1, 9);
  expect_parse_error("ring: x y\nchar: abc\nideal:\nx\n", 2, 7);
}

TEST(IdealFileTest, Validation) {
  EXPECT_THROW(parse_ideal("ring: x y z\nchar: 6\nideal:\nx\n"), ValidationError);
  EXPECT_THROW(parse_ideal("ring: x y z\nchar: 1\nideal:\nx\n"), ValidationError);
  EXPECT_THROW(parse_ideal("ring: x x\nideal:\nx\n"), ValidationError);
  EXPECT_THROW(parse_ideal("ring: x y\nideal:\nx - x\n"), ValidationError);
  EXPECT_THROW(parse_ideal("ring: x y\nchar: 7\nideal:\n7*x\n"), ValidationError);
  EXPECT_THROW(parse_ideal("ring: x y\nideal:\nx^2 - y\n", LoadOptions{std::nullopt, true}), ValidationError);
  EXPECT_NO_THROW(parse_ideal("ring: x y\nideal:\nx^2 - y\n"));
  EXPECT_TRUE(parse_ideal("ring: x y\nideal:\n").generators().empty());
}

TEST(IdealFileTest, RoundTrip) {
  RandomSource rng(31);
  const RingPtr r = PolynomialRing::make({"a", "b", "c", "d"});
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Polynomial> gens;
    const std::size_t count = 1 + rng.below(4);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(segre::testing::random_polynomial(r, rng, 4, 5));
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); }), gens.end());
    if (gens.empty()) continue;
    const Ideal original(r, gens);
    const Ideal back = parse_ideal(render(to_ideal_file(original)));
    ASSERT_EQ(back.generators().size(), gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) ASSERT_EQ(to_string(back.generators()[i]), to_string(gens[i]));
    ASSERT_TRUE(ideal_equals(Ideal(r, back.generators()), original));
  }
}

TEST(ExampleGeneratorTest, RationalNormalCurve) {
  const IdealFile f = generate_example("rnc", {3});
  EXPECT_EQ(f.variables, (std::vector<std::string>{"x0", "x1", "x2", "x3"}));
  EXPECT_EQ(f.generators.size(), 3u);
  EXPECT_EQ(dim_degree(load_ideal(f)), (DimDegree{1, 3}));
  // rnc k has binom(k, 2) quadrics.
  EXPECT_EQ(generate_example("rnc", {5}).generators.size(), 10u);
  EXPECT_THROW(generate_example("rnc", {1}), ValidationError);
  EXPECT_THROW(generate_example("rnc", {}), ValidationError);
}

TEST(ExampleGeneratorTest, SegreEmbeddings) {
  const IdealFile q = generate_example("segre", {1, 1});
  ASSERT_EQ(q.generators.size(), 1u);
  const Ideal quadric = load_ideal(q);
  EXPECT_EQ(quadric.generators()[0], parse_polynomial("x0*x3 - x1*x2", quadric.ring()));
  // P^1 x P^2 in P^5 is a threefold of degree 3.
  EXPECT_EQ(dim_degree(load_ideal(generate_example("segre", {1, 2}))), (DimDegree{3, 3}));
}

TEST(ExampleGeneratorTest, FixedSchemes) {
  const Ideal p = load_ideal(generate_example("point-scheme", {}));
  EXPECT_TRUE(ideal_equals(p, parse_ideal("ring: x y z\nideal:\nx^2\ny^2\nx*y\n")));
  const Ideal c = load_ideal(generate_example("cusp-lines", {}));
  EXPECT_TRUE(ideal_equals(c, parse_ideal("ring: x y z\nideal:\nx^2*y\nx*y^2\n")));
  EXPECT_THROW(generate_example("cusp-lines", {1}), ValidationError);
  EXPECT_THROW(generate_example("nonsense", {}), ValidationError);
}

TEST(ExampleGeneratorTest, RandomFamiliesDependOnlyOnSeed) {
  EXPECT_EQ(generate_example("hypersurface", {3, 3}, 4).generators, generate_example("hypersurface", {3, 3}, 4).generators);
  EXPECT_NE(generate_example("hypersurface", {3, 3}, 4).generators, generate_example("hypersurface", {3, 3}, 5).generators);
  const Ideal h = load_ideal(generate_example("hypersurface", {3, 3}, 4));
  EXPECT_EQ(dim_degree(h), (DimDegree{2, 3}));
  // 2x2 minors of a generic 2x3 matrix of linear forms in P^3: a twisted cubic.
  const Ideal g = load_ideal(generate_example("generic-minors", {2, 2, 3, 3}, 9));
  EXPECT_EQ(g.ring()->num_vars(), 4u);
  EXPECT_EQ(dim_degree(g), (DimDegree{1, 3}));
  EXPECT_EQ(generate_example("hypersurface", {2, 2}, 1, 101).characteristic, 101u);
}
