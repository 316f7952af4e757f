#include "vsbound/error.hpp"
#include "vsbound/poly.hpp"
#include "vsbound/valueset.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vsbound;

namespace {

const std::vector<std::string> kXY = {"x1", "x2"};

Monomial mono(std::initializer_list<std::uint32_t> e) { return Monomial{std::vector<std::uint32_t>(e)}; }

}  // namespace

TEST(Parse, ReferencePairPolynomials) {
  const auto f5 = make_field(5, 1);
  const auto f = parse_poly("x1 + x1^3*x2", f5, kXY);
  ASSERT_EQ(f.terms().size(), 2u);
  EXPECT_EQ(f.terms().at(mono({1, 0})), f5.one());
  EXPECT_EQ(f.terms().at(mono({3, 1})), f5.one());
  const auto h = parse_poly("x1^4 + x2^4", f5, kXY);
  ASSERT_EQ(h.terms().size(), 2u);
  EXPECT_EQ(h.terms().at(mono({4, 0})), f5.one());
  EXPECT_EQ(h.terms().at(mono({0, 4})), f5.one());
}

TEST(Parse, LikeTermsCombineModP) {
  const auto f3 = make_field(3, 1);
  EXPECT_TRUE(parse_poly("x1 + 2*x1", f3, kXY).is_zero());
  const auto g = parse_poly("x1*x2 + x2*x1 - 5", f3, kXY);
  EXPECT_EQ(g.terms().at(mono({1, 1})), f3.from_integer(2));
  EXPECT_EQ(g.terms().at(mono({0, 0})), f3.one());
}

TEST(Parse, ExtensionFieldLiterals) {
  const auto f4 = make_field(2, 2);
  const auto f = parse_poly("(t+1)*x1 + (t)*x2^2 + 1", f4, kXY);
  EXPECT_EQ(f.terms().at(mono({1, 0})), f4.add(f4.generator(), f4.one()));
  EXPECT_EQ(f.terms().at(mono({0, 2})), f4.generator());
  EXPECT_EQ(parse_field_literal("t^2", f4), f4.add(f4.generator(), f4.one()));
}

TEST(Parse, Errors) {
  const auto f3 = make_field(3, 1);
  EXPECT_THROW(parse_poly("x1 + y", f3, kXY), ParseError);
  EXPECT_THROW(parse_poly("x1^0", f3, kXY), ParseError);
  EXPECT_THROW(parse_poly("x1 +", f3, kXY), ParseError);
  EXPECT_THROW(parse_poly("(t)*x1", f3, kXY), ParseError);
  EXPECT_THROW(parse_poly("x1 ** x2", f3, kXY), ParseError);
  try {
    parse_poly("x1 + x3", f3, kXY);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Parse, VectorPositionsAreGlobal) {
  const auto f3 = make_field(3, 1);
  try {
    parse_poly_vector("x1; x1 + z", f3, kXY);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 9u);
  }
  const auto v = parse_poly_vector("x1; x1*x2", f3, kXY);
  EXPECT_EQ(v.m(), 2u);
  EXPECT_EQ(v.n, 2u);
}

TEST(Print, CanonicalForm) {
  const auto f5 = make_field(5, 1);
  EXPECT_EQ(to_string(parse_poly("x1^3*x2 + x1", f5, kXY), f5, kXY), "x1 + x1^3*x2");
  EXPECT_EQ(to_string(parse_poly("x1 + 4*x1", f5, kXY), f5, kXY), "0");
  const auto f4 = make_field(2, 2);
  EXPECT_EQ(to_string(parse_poly("(t+1)*x1", f4, kXY), f4, kXY), "(t+1)*x1");
}

TEST(Print, RoundTripOnRandomMaps) {
  std::mt19937_64 rng(7);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 1}}) {
    const auto field = make_field(p, e);
    for (int i = 0; i < 40; ++i) {
      const auto f = sample_map(field, 2, 4, rng);
      const auto text = to_string(f, field, kXY);
      EXPECT_EQ(parse_poly_vector(text, field, kXY), f) << text;
    }
  }
}

TEST(Evaluate, SpecExamples) {
  const auto f2 = make_field(2, 1);
  const std::vector<FFElement> ones{f2.one(), f2.one()};
  EXPECT_EQ(evaluate(f2, parse_poly("x1*x2", f2, kXY), std::span<const FFElement>(ones)), f2.one());

  const auto f5 = make_field(5, 1);
  const auto f = parse_poly("x1 + x1^3*x2", f5, kXY);
  for (const auto& a : f5.enumerate()) {
    const std::vector<FFElement> pt{f5.zero(), a};
    EXPECT_TRUE(f5.is_zero(evaluate(f5, f, std::span<const FFElement>(pt))));
  }

  const auto f4 = make_field(2, 2);
  const std::vector<FFElement> tt{f4.generator(), f4.generator()};
  EXPECT_TRUE(f4.is_zero(evaluate(f4, parse_poly("x1^4 + x2^4", f4, kXY), std::span<const FFElement>(tt))));
  EXPECT_THROW(evaluate(f4, parse_poly("x1", f4, kXY), std::span<const FFElement>(tt).first(1)), InputError);
}

TEST(Evaluate, IsARingHomomorphism) {
  std::mt19937_64 rng(11);
  const auto field = make_field(3, 2);
  for (int i = 0; i < 30; ++i) {
    const auto f = sample_map(field, 2, 3, rng).components[0];
    const auto g = sample_map(field, 2, 3, rng).components[0];
    const auto sum = add(field, f, g);
    const auto prod = multiply(field, f, g);
    for (int j = 0; j < 10; ++j) {
      const std::vector<FFElement> pt{field.element(rng() % 9), field.element(rng() % 9)};
      const std::span<const FFElement> s(pt);
      EXPECT_EQ(evaluate(field, sum, s), field.add(evaluate(field, f, s), evaluate(field, g, s)));
      EXPECT_EQ(evaluate(field, prod, s), field.mul(evaluate(field, f, s), evaluate(field, g, s)));
    }
  }
}

TEST(Degree, SpecExamples) {
  const auto f5 = make_field(5, 1);
  EXPECT_EQ(total_degree(parse_poly("x1 + x1^3*x2", f5, kXY)), 4u);
  EXPECT_EQ(total_degree(parse_poly("x1^4 + x2^4", f5, kXY)), 4u);
  EXPECT_EQ(total_degree(parse_poly("1", f5, kXY)), 0u);
  EXPECT_FALSE(total_degree(parse_poly("x1 - x1", f5, kXY)).has_value());
  EXPECT_EQ(total_degree(parse_poly_vector("x1; x1^2*x2^3", f5, kXY)), 5u);
}

TEST(Support, SpecExamples) {
  const auto f3 = make_field(3, 1);
  EXPECT_EQ(support(parse_poly_vector("x1; x1*x2", f3, kXY)), (std::set<Monomial>{mono({1, 0}), mono({1, 1})}));
  EXPECT_EQ(support(parse_poly_vector("x1; x2", f3, kXY)), (std::set<Monomial>{mono({1, 0}), mono({0, 1})}));
  EXPECT_EQ(support(parse_poly_vector("x1 + x2; x1 + x2", f3, kXY)),
            (std::set<Monomial>{mono({1, 0}), mono({0, 1})}));
}

TEST(ConstructG, SpecExamples) {
  const auto f2 = make_field(2, 1);
  const auto tower = make_tower(f2, 2);
  const auto g = construct_g(parse_poly_vector("x1; x2", f2, kXY), tower);
  EXPECT_EQ(g.terms().at(mono({1, 0})), tower.one());
  EXPECT_EQ(g.terms().at(mono({0, 1})), tower.basis()[1]);
  const auto g2 = construct_g(parse_poly_vector("x1; x1*x2", f2, kXY), tower);
  EXPECT_EQ(g2.terms().size(), 2u);
  EXPECT_EQ(g2.terms().at(mono({1, 1})), tower.basis()[1]);
  EXPECT_THROW(construct_g(parse_poly_vector("x1", f2, kXY), tower), InputError);
}

TEST(ConstructG, SupportIsPreserved) {
  std::mt19937_64 rng(3);
  for (auto [p, e, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t>>{
           {3, 1, 2}, {2, 1, 2}, {2, 1, 3}, {2, 2, 2}, {5, 1, 2}}) {
    const auto field = make_field(p, e);
    const auto tower = make_tower(field, static_cast<std::uint32_t>(n));
    for (int i = 0; i < 100; ++i) {
      const auto f = sample_map(field, n, 4, rng);
      EXPECT_EQ(support(construct_g(f, tower)), support(f));
    }
  }
}

TEST(ConstructG, ImageSizeMatchesValueSet) {
  std::mt19937_64 rng(5);
  for (auto [p, e, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t>>{
           {2, 1, 2}, {3, 1, 2}, {2, 1, 3}, {2, 2, 2}, {5, 1, 2}, {7, 1, 2}, {2, 1, 4}, {2, 2, 3}, {3, 2, 2}}) {
    const auto field = make_field(p, e);
    const auto tower = make_tower(field, static_cast<std::uint32_t>(n));
    ASSERT_LE(tower.order(), 256u);
    for (int i = 0; i < 12; ++i) {
      const auto f = sample_map(field, n, 3, rng);
      EXPECT_EQ(value_set_size_via_g(f, tower), value_set_size(f, field));
    }
  }
}

TEST(Varnames, Defaults) {
  EXPECT_EQ(default_varnames(1), (std::vector<std::string>{"x"}));
  EXPECT_EQ(default_varnames(3), (std::vector<std::string>{"x1", "x2", "x3"}));
}
