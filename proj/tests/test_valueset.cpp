#include "vsbound/error.hpp"
#include "vsbound/valueset.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace vsbound;

namespace {

const std::vector<std::string> kXY = {"x1", "x2"};

PolyVector map2(const std::string& text, const FieldSpec& field) { return parse_poly_vector(text, field, kXY); }

// Image size by collecting every value tuple into a set.
std::uint64_t naive_image(const PolyVector& f, const FieldSpec& field) {
  std::set<std::vector<std::uint64_t>> image;
  const auto elems = field.enumerate();
  std::vector<std::size_t> idx(f.n, 0);
  while (true) {
    std::vector<FFElement> pt;
    for (auto i : idx) pt.push_back(elems[i]);
    std::vector<std::uint64_t> value;
    for (const auto& c : f.components) value.push_back(field.index(evaluate(field, c, std::span<const FFElement>(pt))));
    image.insert(value);
    std::size_t i = 0;
    while (i < f.n && ++idx[i] == elems.size()) idx[i++] = 0;
    if (i == f.n) break;
  }
  return image.size();
}

}  // namespace

TEST(ValueSet, SpecExamples) {
  const auto f2 = make_field(2, 1), f3 = make_field(3, 1);
  EXPECT_EQ(value_set_size(map2("x1; x1*x2", f2), f2), 3u);
  EXPECT_EQ(value_set_size(map2("x1; x1^2*x2", f3), f3), 7u);
  EXPECT_EQ(value_set_size(map2("x1; x2", f3), f3), 9u);
  EXPECT_THROW(value_set_size(map2("x1; x2", f3), f3, 8), BudgetExceeded);
}

TEST(ValueSet, MatchesNaiveSetCount) {
  std::mt19937_64 rng(83);
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const auto field = make_field(p, e);
    for (int i = 0; i < 20; ++i) {
      const auto f = sample_map(field, 2, 4, rng);
      EXPECT_EQ(value_set_size(f, field), naive_image(f, field));
    }
  }
}

TEST(ValueSet, PermutationIffInjective) {
  std::mt19937_64 rng(89);
  const auto field = make_field(3, 1);
  for (int i = 0; i < 50; ++i) {
    const auto f = sample_map(field, 2, 2, rng);
    const auto r = verify_bounds(f, field);
    EXPECT_EQ(*r.permutation, naive_image(f, field) == 9u);
  }
}

TEST(Bounds, PolytopeSpecExamples) {
  const auto f2 = make_field(2, 1), f3 = make_field(3, 1), f5 = make_field(5, 1);
  EXPECT_EQ(bound_polytope(map2("x1; x1*x2", f2), f2), 3u);
  EXPECT_EQ(bound_polytope(map2("x1 + x1^3*x2; x2", f5), f5), 21u);
  EXPECT_EQ(bound_polytope(map2("x1; x1^3*x2", f5), f5), 21u);
  EXPECT_EQ(bound_polytope(map2("x1; x2", f3), f3), 6u);
  EXPECT_THROW(bound_polytope(map2("x1; 2", f3), f3), InputError);
  EXPECT_THROW(bound_polytope(map2("x1", f3), f3), InputError);
}

TEST(Bounds, DegenerateMuUsesQ) {
  const auto f3 = make_field(3, 1);
  EXPECT_EQ(polytope_deficit(Rational::infinity(), 3), Rational(3));
  const auto r = verify_bounds(map2("x1; x1^2", f3), f3);
  EXPECT_TRUE(r.degenerate_mu);
  EXPECT_EQ(r.bound_polytope, 6u);
  EXPECT_TRUE(r.all_checks_pass());
}

TEST(Bounds, MwwSpecExamples) {
  EXPECT_EQ(mww_deficit(2, 4, 5), Rational(2));
  EXPECT_EQ(mww_deficit(2, 1, 3), Rational(3));
  const auto f5 = make_field(5, 1), f3 = make_field(3, 1);
  EXPECT_EQ(bound_mww(map2("x1 + x1^3*x2; x2", f5), f5), 23u);
  EXPECT_EQ(bound_mww(map2("x1; x2", f3), f3), 6u);
  for (std::uint64_t d = 1; d <= 6; ++d)
    for (std::uint64_t q : {3u, 5u, 7u})
      EXPECT_EQ(Rational(static_cast<std::int64_t>(q)) - mww_deficit(1, d, q),
                bound_univariate(d, q));
}

TEST(Bounds, Univariate) {
  EXPECT_EQ(bound_univariate(2, 3), Rational(2));
  EXPECT_EQ(bound_univariate(1, 7), Rational(1));
  EXPECT_EQ(bound_univariate(2, 4), Rational(5, 2));
  EXPECT_THROW(bound_univariate(0, 3), InputError);
  // x^2 over F_3 has two values.
  const auto f3 = make_field(3, 1);
  EXPECT_EQ(Rational(static_cast<std::int64_t>(value_set_size(parse_poly_vector("x^2", f3, {"x"}), f3))),
            bound_univariate(2, 3));
}

TEST(Bounds, FromUSpecExamples) {
  const auto f2 = make_field(2, 1), f3 = make_field(3, 1);
  EXPECT_EQ(bound_from_U(map2("x1; x1*x2", f2), make_tower(f2, 2)), 3u);
  EXPECT_EQ(bound_from_U(parse_poly_vector("x^2", f3, {"x"}), make_tower(f3, 1)), 2u);
  EXPECT_EQ(bound_from_U(parse_poly_vector("x", f3, {"x"}), make_tower(f3, 1)), 1u);
}

TEST(Verify, SharpExample) {
  const auto f3 = make_field(3, 1);
  const auto r = verify_bounds(map2("x1; x1^2*x2", f3), f3);
  EXPECT_EQ(*r.vf_size, 7u);
  EXPECT_EQ(r.bound_polytope, 7u);
  EXPECT_TRUE(*r.sharp);
  EXPECT_TRUE(*r.theorem_holds);
  EXPECT_FALSE(*r.permutation);
  EXPECT_TRUE(r.all_checks_pass());
  EXPECT_EQ(r.map_text, "x1; x1^2*x2");
}

TEST(Verify, PermutationExample) {
  const auto f2 = make_field(2, 1);
  const auto r = verify_bounds(map2("x1; x2", f2), f2);
  EXPECT_TRUE(*r.permutation);
  EXPECT_TRUE(*r.theorem_holds);
  EXPECT_FALSE(*r.sharp);
}

TEST(Verify, DerivedExample) {
  const auto f2 = make_field(2, 1);
  const auto r = verify_bounds(map2("x1; x1*x2", f2), f2);
  EXPECT_EQ(*r.vf_size, 3u);
  EXPECT_EQ(r.bound_polytope, 3u);
  EXPECT_EQ(*r.U, 1u);
  EXPECT_EQ(*r.bound_U, 3u);
}

TEST(Verify, OverBudgetQuantitiesAreOmitted) {
  const auto f3 = make_field(3, 1);
  VerifyOptions options;
  options.domain_budget = 4;
  options.u_budget = 4;
  const auto r = verify_bounds(map2("x1; x1*x2", f3), f3, options);
  EXPECT_FALSE(r.constant_on_domain);
  EXPECT_FALSE(r.vf_size);
  EXPECT_FALSE(r.U);
  EXPECT_FALSE(r.theorem_holds);
  EXPECT_EQ(r.omitted, (std::vector<std::string>{"vf_size", "U"}));
  EXPECT_EQ(r.mu, Rational(1));
}

TEST(Verify, MapConstantOnTheDomainHasNoU) {
  const auto f2 = make_field(2, 1);
  const auto r = verify_bounds(map2("x1^2 + x1; x2^2 + x2 + 1", f2), f2);
  EXPECT_EQ(r.vf_size, 1u);
  EXPECT_TRUE(r.constant_on_domain);
  EXPECT_FALSE(r.U);
  EXPECT_FALSE(r.lemma3_holds);
  EXPECT_FALSE(r.lemma6_holds);
  EXPECT_TRUE(r.theorem_holds.value());
  EXPECT_EQ(r.omitted, (std::vector<std::string>{"U"}));
  EXPECT_TRUE(r.all_checks_pass());
}

TEST(Verify, RefusesNonSquareAndConstantMaps) {
  const auto f3 = make_field(3, 1);
  EXPECT_THROW(verify_bounds(map2("x1; x2; x1", f3), f3), InputError);
  EXPECT_THROW(verify_bounds(map2("x1; 1", f3), f3), InputError);
}

TEST(Verify, RandomSweepOverF3) {
  std::mt19937_64 rng(42);
  const auto field = make_field(3, 1);
  for (int i = 0; i < 100; ++i) {
    const auto r = verify_bounds(sample_map(field, 2, 4, rng), field);
    EXPECT_TRUE(*r.theorem_holds) << r.map_text;
    EXPECT_TRUE(*r.lemma6_holds) << r.map_text;
    EXPECT_TRUE(*r.lemma3_holds) << r.map_text;
    EXPECT_TRUE(r.mww_dominated) << r.map_text;
    EXPECT_TRUE(r.mu_degree_bound_holds) << r.map_text;
    EXPECT_LE(r.bound_polytope, r.bound_mww);
  }
}

TEST(Variety, SpecExamples) {
  const auto f3 = make_field(3, 1);
  const auto a = variety_ord_check(map2("x1*x2", f3), f3);
  EXPECT_EQ(a.points, 5u);
  EXPECT_EQ(a.ord_q, Rational(0));
  EXPECT_EQ(a.mu_aux, Rational(1));
  EXPECT_TRUE(a.holds);
  const auto b = variety_ord_check(map2("x1^2 + x2^2", f3), f3);
  EXPECT_EQ(b.points, 1u);
  EXPECT_EQ(b.mu_aux, Rational(1));
  EXPECT_TRUE(b.holds);
  const auto c = variety_ord_check(parse_poly_vector("x1", f3, {"x1"}), f3);
  EXPECT_EQ(c.points, 1u);
  EXPECT_EQ(c.m, 1u);
  EXPECT_EQ(c.mu_aux, Rational(1));
  EXPECT_TRUE(c.holds);
}

TEST(Variety, ValuationOfPointCount) {
  const auto f4 = make_field(2, 2);
  // x1 = 0 has 4 points over F_4: v_2(4)/2 = 1.
  const auto r = variety_ord_check(map2("x1*x2 + x1", f4), f4);
  EXPECT_EQ(r.points, 4u + 3u);
  const auto s = variety_ord_check(map2("x1 + x2", f4), f4);
  EXPECT_EQ(s.points, 4u);
  EXPECT_EQ(s.ord_q, Rational(1));
  const auto f3 = make_field(3, 1);
  const auto empty = variety_ord_check(map2("x1^2 + x2^2 + 1; x1", f3), f3);
  EXPECT_EQ(empty.points, 0u);
  EXPECT_TRUE(empty.ord_q.is_infinite());
  EXPECT_TRUE(empty.holds);
}

TEST(Variety, RefusesDegenerateCollections) {
  const auto f3 = make_field(3, 1);
  EXPECT_THROW(variety_ord_check(map2("x1", f3), f3), InputError);
  EXPECT_THROW(variety_ord_check(map2("x1*x2; x1 - x1", f3), f3), InputError);
}

TEST(SharpFamily, PolytopeSharp) {
  const auto a = sharp_family(SharpFamily::polytope_sharp, {2, 1, 1});
  EXPECT_EQ(a.map, map2("x1; x1*x2", make_field(2, 1)));
  EXPECT_EQ(*a.expected_vf, 3u);
  const auto b = sharp_family(SharpFamily::polytope_sharp, {4, 3, 1});
  EXPECT_EQ(*b.expected_vf, 13u);
  EXPECT_EQ(value_set_size(b.map, b.field), 13u);
  EXPECT_EQ(*b.expected_mu, Rational(1));
  EXPECT_EQ(*b.expected_bound_polytope, 13u);
  EXPECT_THROW(sharp_family(SharpFamily::polytope_sharp, {6, 1, 1}), InputError);
}

TEST(SharpFamily, ShiftedPowerFamilyRecordsDiscrepancy) {
  const auto r = sharp_family(SharpFamily::cusick_muller, {2, 1, 2});
  EXPECT_EQ(r.field.q(), 4u);
  EXPECT_EQ(*r.brute_vf, 2u);
  EXPECT_EQ(*r.printed_formula, Rational(5, 2));
  EXPECT_FALSE(r.printed_formula_integral);
}

TEST(Sampler, DeterministicAndNonconstant) {
  const auto field = make_field(5, 1);
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 50; ++i) {
    const auto f = sample_map(field, 2, 4, a);
    EXPECT_EQ(f, sample_map(field, 2, 4, b));
    ASSERT_EQ(f.m(), 2u);
    for (const auto& c : f.components) EXPECT_GE(total_degree(c).value_or(0), 1u);
    EXPECT_LE(*total_degree(f), 4u);
  }
}

TEST(Sweep, SummaryCountsAndOrder) {
  SweepConfig config;
  config.qs = {2, 3};
  config.samples = 10;
  const auto r = run_sweep(config);
  EXPECT_EQ(r.reports.size(), 20u);
  EXPECT_EQ(r.summary.instances, 20u);
  EXPECT_EQ(r.summary.violations, 0u);
  EXPECT_EQ(r.reports.front().q, 2u);
  EXPECT_EQ(r.reports.back().q, 3u);
  const auto again = run_sweep(config);
  for (std::size_t i = 0; i < r.reports.size(); ++i) EXPECT_EQ(r.reports[i].map_text, again.reports[i].map_text);

  SweepConfig sharp;
  sharp.qs = {3};
  sharp.family = SweepFamily::polytope_sharp;
  sharp.a_values = {1, 2, 3};
  const auto s = run_sweep(sharp);
  EXPECT_EQ(s.summary.instances, 3u);
  EXPECT_EQ(s.summary.sharp, 3u);

  config.samples = 0;
  EXPECT_TRUE(run_sweep(config).reports.empty());
}
