#include "vsbound/error.hpp"
#include "vsbound/polytope.hpp"
#include "vsbound/svg.hpp"

#include "mu_oracle.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <sstream>

using namespace vsbound;

namespace {

const std::vector<std::string> kXY = {"x1", "x2"};

LatticePolytope poly2(const std::string& text) { return newton_polytope(parse_poly(text, make_field(5, 1), kXY)); }

Rational from_q(const oracle::Q& q) { return Rational(boost::multiprecision::cpp_rational(q)); }

Rational oracle_gauge(const LatticePolytope& P, const LatticePoint& v) {
  const auto g = oracle::gauge(P.generators(), v);
  return g ? from_q(*g) : Rational::infinity();
}

std::vector<LatticePoint> random_generators(std::mt19937_64& rng, std::size_t n) {
  const std::size_t m = 1 + rng() % 4;
  std::vector<LatticePoint> gens(m, LatticePoint(n));
  for (auto& g : gens) {
    do {
      for (auto& c : g) c = static_cast<std::uint32_t>(rng() % 6);
    } while (std::all_of(g.begin(), g.end(), [](std::uint32_t c) { return c == 0; }));
  }
  return gens;
}

}  // namespace

TEST(NewtonPolytope, SpecExamples) {
  EXPECT_EQ(poly2("x1 + x1^3*x2").generators(), (std::vector<LatticePoint>{{1, 0}, {3, 1}}));
  EXPECT_EQ(poly2("x1^4 + x2^4").generators(), (std::vector<LatticePoint>{{0, 4}, {4, 0}}));
  for (std::uint32_t a = 1; a <= 4; ++a) {
    const auto f = parse_poly_vector("x1; x1^" + std::to_string(a) + "*x2", make_field(3, 1), kXY);
    EXPECT_EQ(newton_polytope(f).generators(), (std::vector<LatticePoint>{{1, 0}, {a, 1}}));
  }
  EXPECT_THROW(poly2("x1 - x1"), InputError);
  EXPECT_THROW(LatticePolytope(2, {{1, 2, 3}}), InputError);
}

TEST(Gauge, SpecExamples) {
  const auto h = poly2("x1^4 + x2^4");
  const auto cert = gauge_certificate(h, LatticePoint{1, 1});
  EXPECT_EQ(cert.value, Rational(1, 2));
  EXPECT_EQ(cert.weights, (std::vector<Rational>{Rational(1, 4), Rational(1, 4)}));
  EXPECT_EQ(gauge(poly2("x1 + x1^3*x2"), LatticePoint{3, 1}), Rational(1));
  EXPECT_EQ(gauge(h, LatticePoint{0, 0}), Rational(0));
  EXPECT_TRUE(gauge(LatticePolytope(2, {{1, 0}}), LatticePoint{1, 1}).is_infinite());
  EXPECT_THROW(gauge(h, LatticePoint{1}), InputError);
}

TEST(Gauge, OriginGeneratorIsIgnored) {
  const LatticePolytope P(2, {{0, 0}, {2, 0}, {0, 2}});
  EXPECT_EQ(gauge(P, LatticePoint{1, 1}), Rational(1));
}

TEST(Gauge, CertificateReproducesThePoint) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 3;
    const LatticePolytope P(n, random_generators(rng, n));
    LatticePoint v(n);
    for (auto& c : v) c = static_cast<std::uint32_t>(rng() % 7);
    const auto cert = gauge_certificate(P, v);
    if (cert.value.is_infinite()) continue;
    Rational total(0);
    std::vector<Rational> combo(n, Rational(0));
    for (std::size_t j = 0; j < P.generators().size(); ++j) {
      EXPECT_GE(cert.weights[j], Rational(0));
      total = total + cert.weights[j];
      for (std::size_t k = 0; k < n; ++k)
        combo[k] = combo[k] + cert.weights[j] * Rational(static_cast<std::int64_t>(P.generators()[j][k]));
    }
    EXPECT_EQ(total, cert.value);
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(combo[k], Rational(static_cast<std::int64_t>(v[k])));
  }
}

TEST(Gauge, MatchesOracle) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 4;
    const LatticePolytope P(n, random_generators(rng, n));
    LatticePoint v(n);
    for (auto& c : v) c = static_cast<std::uint32_t>(rng() % 7);
    EXPECT_EQ(gauge(P, v), oracle_gauge(P, v));
  }
}

TEST(Gauge, IsHomogeneous) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 3;
    const LatticePolytope P(n, random_generators(rng, n));
    LatticePoint v(n);
    for (auto& c : v) c = static_cast<std::uint32_t>(rng() % 5);
    const std::uint32_t c = 1 + static_cast<std::uint32_t>(rng() % 4);
    LatticePoint cv = v;
    for (auto& x : cv) x *= c;
    const Rational g = gauge(P, v), gc = gauge(P, cv);
    if (g.is_infinite()) EXPECT_TRUE(gc.is_infinite());
    else EXPECT_EQ(gc, g * Rational(c));
  }
}

TEST(Gauge, AddingGeneratorsNeverIncreasesGaugeOrMu) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + rng() % 3;
    auto gens = random_generators(rng, n);
    const LatticePolytope P(n, gens);
    auto more = gens;
    for (auto& g : random_generators(rng, n)) more.push_back(g);
    const LatticePolytope Q(n, more);
    LatticePoint v(n);
    for (auto& c : v) c = static_cast<std::uint32_t>(rng() % 5);
    EXPECT_LE(gauge(Q, v), gauge(P, v));
    EXPECT_LE(mu(Q).value, mu(P).value);
  }
}

TEST(Mu, SpecExamples) {
  const auto f = mu(poly2("x1 + x1^3*x2"));
  EXPECT_EQ(f.value, Rational(1));
  EXPECT_EQ(f.witness, (LatticePoint{3, 1}));
  const auto h = mu(poly2("x1^4 + x2^4"));
  EXPECT_EQ(h.value, Rational(1, 2));
  EXPECT_EQ(h.witness, (LatticePoint{1, 1}));
  EXPECT_EQ(mu(LatticePolytope(2, {{1, 0}, {0, 1}})).value, Rational(2));
  for (std::uint32_t a = 1; a <= 6; ++a) EXPECT_EQ(mu(LatticePolytope(2, {{1, 0}, {a, 1}})).value, Rational(1));
}

TEST(Mu, InfiniteExactlyWhenAVariableIsMissing) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 3;
    const LatticePolytope P(n, random_generators(rng, n));
    const auto r = mu(P);
    EXPECT_EQ(r.value.is_infinite(), !P.covers_all_variables());
    EXPECT_EQ(r.witness.has_value(), !r.value.is_infinite());
  }
  EXPECT_TRUE(mu(poly2("x1")).value.is_infinite());
}

TEST(Mu, WitnessCertifiesTheValue) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + rng() % 3;
    const LatticePolytope P(n, random_generators(rng, n));
    const auto r = mu(P);
    if (r.value.is_infinite()) continue;
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(std::all_of(r.witness->begin(), r.witness->end(), [](std::uint32_t c) { return c >= 1; }));
    EXPECT_EQ(gauge(P, *r.witness), r.value);
    // No positive point of the search region is cheaper.
    const Rational limit = Rational(static_cast<std::int64_t>(P.max_degree())) * r.value;
    LatticePoint v(n, 1);
    std::function<void(std::size_t, std::uint64_t)> scan = [&](std::size_t pos, std::uint64_t used) {
      if (pos == n) {
        EXPECT_GE(gauge(P, v), r.value);
        return;
      }
      for (std::uint32_t c = 1; Rational(static_cast<std::int64_t>(used + c + (n - pos - 1))) <= limit; ++c) {
        v[pos] = c;
        scan(pos + 1, used + c);
      }
      v[pos] = 1;
    };
    scan(0, 0);
  }
}

TEST(Mu, AtLeastDimensionOverDegree) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 3;
    const LatticePolytope P(n, random_generators(rng, n));
    EXPECT_GE(mu(P).value, Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(P.max_degree())));
  }
}

TEST(Mu, MatchesOracleOnRandomSets) {
  std::mt19937_64 rng(53);
  int compared = 0;
  while (compared < 200) {
    const std::size_t n = 1 + rng() % 3;
    const auto gens = random_generators(rng, n);
    oracle::MuValue expect;
    try {
      expect = oracle::mu(n, gens);
    } catch (const std::length_error&) {
      continue;
    }
    const auto got = mu(LatticePolytope(n, gens));
    if (!expect.value) {
      EXPECT_TRUE(got.value.is_infinite());
    } else {
      EXPECT_EQ(got.value, from_q(*expect.value));
      EXPECT_EQ(got.witness, expect.witness);
    }
    ++compared;
  }
}

TEST(Mu, BudgetIsEnforced) {
  MuOptions tight;
  tight.max_candidates = 0;
  EXPECT_THROW(mu(LatticePolytope(3, {{9, 0, 0}, {0, 9, 0}, {0, 0, 9}}), tight), BudgetExceeded);
}

TEST(Export, GeneratorCsv) {
  std::ostringstream os;
  write_generators_csv(os, poly2("x1 + x1^3*x2"));
  EXPECT_EQ(os.str(), "x1,x2\n1,0\n3,1\n");
}

TEST(Export, HullIncludesOrigin) {
  const auto hull = hull_2d(poly2("x1 + x1^3*x2"));
  EXPECT_EQ(hull, (std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 0}, {1, 0}, {3, 1}}));
}

TEST(Export, SvgIsDeterministicAndRefusesOtherDimensions) {
  const auto f = poly2("x1 + x1^3*x2");
  const auto h = poly2("x1^4 + x2^4");
  const std::vector<SvgPanel> panels = {{"f", f, Rational(1, 2), mu(f).witness}, {"h", h, Rational(1, 2), mu(h).witness}};
  const auto a = render_polytope_svg(panels);
  EXPECT_EQ(a, render_polytope_svg(panels));
  EXPECT_NE(a.find("<svg"), std::string::npos);
  EXPECT_NE(a.find("class=\"dilation\""), std::string::npos);
  EXPECT_THROW(render_polytope_svg({{"3d", LatticePolytope(3, {{1, 1, 1}}), Rational(1), std::nullopt}}), InputError);
  EXPECT_THROW(render_polytope_svg({{"inf", f, Rational::infinity(), std::nullopt}}), InputError);
}
