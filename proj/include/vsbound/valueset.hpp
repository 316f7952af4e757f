#pragma once

// Value-set enumeration and the upper bounds on |V_f| for polynomial maps
// f : F_q^n -> F_q^n:
//   polytope bound   q^n − min{q, μ_f(q−1)}
//   degree bound     q^n − min{q, n(q−1)/deg f}
//   U bound          q^n − U(g)
//   univariate bound q − (q−1)/d
// plus the variety valuation check and the sharp families.

#include "vsbound/fields.hpp"
#include "vsbound/padic.hpp"
#include "vsbound/poly.hpp"
#include "vsbound/polytope.hpp"
#include "vsbound/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace vsbound {

/// |{f(x) : x ∈ F_q^n}| by exhaustive evaluation. Works for any number of
/// components.
std::uint64_t value_set_size(const PolyVector& f, const FieldSpec& spec,
                             std::uint64_t budget = kDefaultDomainBudget);

/// |{g(x_1,...,x_n) : x ∈ F_q^n}| for g = construct_g(f, tower).
std::uint64_t value_set_size_via_g(const PolyVector& f, const TowerSpec& tower,
                                   std::uint64_t budget = kDefaultDomainBudget);

/// min{q, μ(q−1)}; q when μ is infinite.
Rational polytope_deficit(const Rational& mu, std::uint64_t q);
/// min{q, n(q−1)/deg}.
Rational mww_deficit(std::size_t n, std::uint64_t degree, std::uint64_t q);

/// floor(q^n − min{q, μ_f(q−1)}). Refuses constant maps.
std::uint64_t bound_polytope(const PolyVector& f, const FieldSpec& spec);
/// floor(q^n − min{q, n(q−1)/deg f}). Refuses constant maps.
std::uint64_t bound_mww(const PolyVector& f, const FieldSpec& spec);
/// q − (q−1)/d, exact.
Rational bound_univariate(std::uint64_t d, std::uint64_t q);
/// q^n − U(g).
std::uint64_t bound_from_U(const PolyVector& f, const TowerSpec& tower, const UOptions& options = {});

struct VerifyOptions {
  std::uint64_t domain_budget = kDefaultDomainBudget;
  /// U is computed only when q^n ≤ u_budget.
  std::uint64_t u_budget = 512;
  MuOptions mu_options;
};

struct BoundsReport {
  explicit BoundsReport(FieldSpec f) : field(std::move(f)) {}

  // instance
  FieldSpec field;
  std::vector<std::string> varnames;
  std::string map_text;
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::uint64_t domain_size = 0;
  std::uint64_t degree = 0;

  // quantities; absent when over budget
  std::optional<std::uint64_t> vf_size;
  Rational mu;
  std::optional<LatticePoint> mu_witness;
  std::optional<std::uint64_t> U;

  Rational polytope_deficit;
  Rational mww_deficit;
  std::uint64_t bound_polytope = 0;
  std::uint64_t bound_mww = 0;
  std::optional<std::uint64_t> bound_U;

  // flags; optional ones are absent when an input quantity is
  std::optional<bool> permutation;
  std::optional<bool> theorem_holds;
  std::optional<bool> sharp;
  bool degenerate_mu = false;
  /// Every point maps to the same value, so U is undefined.
  bool constant_on_domain = false;
  bool mww_dominated = false;
  bool mww_strict = false;
  bool mu_degree_bound_holds = false;
  std::optional<bool> lemma3_holds;
  std::optional<bool> lemma6_holds;

  std::vector<std::string> omitted;

  /// Every computed theorem/lemma flag holds.
  bool all_checks_pass() const;
};

/// Computes every quantity within budget and sets the flags. Refuses maps
/// with m ≠ n components or with a constant component.
BoundsReport verify_bounds(const PolyVector& f, const FieldSpec& spec, const VerifyOptions& options = {},
                           const std::vector<std::string>& varnames = {});

struct VarietyCheck {
  std::uint64_t points = 0;  // N(V)
  Rational ord_q;            // v_p(N)/e, Infinity when N = 0
  Rational mu_aux;           // μ of f_1 y_1 + ... + f_m y_m in n + m variables
  std::size_t m = 0;
  bool holds = false;        // ord_q ≥ mu_aux − m
};

/// Refuses collections that are polynomial in a proper subset of the
/// variables, and zero components.
VarietyCheck variety_ord_check(const PolyVector& fs, const FieldSpec& spec,
                               std::uint64_t budget = kDefaultDomainBudget);

enum class SharpFamily { polytope_sharp, cusick_muller };

struct SharpFamilyParams {
  std::uint64_t q = 2;
  /// Exponent a in (x1, x1^a x2).
  std::uint32_t a = 1;
  /// Extension degree k in (x+1)x^{q-1} over F_{q^k}.
  std::uint32_t k = 1;
};

struct SharpInstance {
  SharpInstance(SharpFamily k, FieldSpec f, std::vector<std::string> vars, PolyVector map_)
      : kind(k), field(std::move(f)), varnames(std::move(vars)), map(std::move(map_)) {}

  SharpFamily kind;
  FieldSpec field;
  std::vector<std::string> varnames;
  PolyVector map;

  // polytope_sharp: closed-form predictions
  std::optional<std::uint64_t> expected_vf;
  std::optional<Rational> expected_mu;
  std::optional<std::uint64_t> expected_bound_polytope;

  // cusick_muller: brute force next to the formula q^k − (q^k−1)/q
  std::optional<std::uint64_t> brute_vf;
  std::optional<Rational> printed_formula;
  bool printed_formula_integral = false;
  bool brute_within_formula = false;
};

SharpInstance sharp_family(SharpFamily kind, const SharpFamilyParams& params,
                           std::uint64_t budget = kDefaultDomainBudget);

/// Uniform over supports of total degree ≤ deg_max (each monomial kept with
/// probability 1/2), coefficients uniform in F_q^*. Constant components are
/// resampled.
PolyVector sample_map(const FieldSpec& spec, std::size_t n, std::uint32_t deg_max, std::mt19937_64& rng);

enum class SweepFamily { random, polytope_sharp };

struct SweepConfig {
  std::vector<std::uint64_t> qs;
  std::size_t n = 2;
  std::uint32_t deg_max = 4;
  std::uint64_t samples = 100;
  std::uint64_t seed = 42;
  SweepFamily family = SweepFamily::random;
  std::vector<std::uint32_t> a_values;
  VerifyOptions verify;
};

struct SweepSummary {
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::uint64_t sharp = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t dominance_strict = 0;
  std::uint64_t permutations = 0;
  std::uint64_t u_computed = 0;
};

struct SweepResult {
  std::vector<BoundsReport> reports;
  SweepSummary summary;
};

/// Instances are generated q by q from a single generator seeded once.
SweepResult run_sweep(const SweepConfig& config);

}  // namespace vsbound
