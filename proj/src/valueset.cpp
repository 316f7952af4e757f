#include "vsbound/valueset.hpp"

#include "vsbound/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace vsbound {

namespace {

// Distinct-index counter: a bitmap when the index space is small, a hash set
// otherwise.
class ImageSet {
 public:
  explicit ImageSet(std::uint64_t space) {
    if (space <= (std::uint64_t{1} << 26)) bitmap_.assign(space, false);
  }
  void insert(std::uint64_t idx) {
    if (!bitmap_.empty()) {
      if (!bitmap_[idx]) {
        bitmap_[idx] = true;
        ++count_;
      }
      return;
    }
    if (hashed_.insert(idx).second) ++count_;
  }
  std::uint64_t size() const { return count_; }

 private:
  std::vector<bool> bitmap_;
  std::unordered_set<std::uint64_t> hashed_;
  std::uint64_t count_ = 0;
};

// Visits every point of F_q^n (x_1 least significant).
template <class Visit>
void for_each_point(const std::vector<FFElement>& elements, std::size_t n, Visit&& visit) {
  const std::size_t q = elements.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<FFElement> point(n, elements[0]);
  while (true) {
    visit(std::span<const FFElement>(point));
    std::size_t i = 0;
    while (i < n) {
      if (++idx[i] < q) {
        point[i] = elements[idx[i]];
        break;
      }
      idx[i] = 0;
      point[i] = elements[0];
      ++i;
    }
    if (i == n) return;
  }
}

bool is_constant(const Poly& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.first.degree() == 0; });
}

void require_square_nonconstant(const PolyVector& f) {
  if (f.m() != f.n)
    throw InputError("map has " + std::to_string(f.m()) + " components in " + std::to_string(f.n) +
                     " variables; only maps F_q^n -> F_q^n are supported");
  for (std::size_t i = 0; i < f.m(); ++i)
    if (is_constant(f.components[i]))
      throw InputError("component " + std::to_string(i + 1) + " is constant; such maps are refused");
}

Rational integer(std::uint64_t v) { return Rational(static_cast<std::int64_t>(v)); }

std::uint64_t floor_to_u64(const Rational& r) { return r.floor().convert_to<std::uint64_t>(); }

}  // namespace

std::uint64_t value_set_size(const PolyVector& f, const FieldSpec& spec, std::uint64_t budget) {
  if (f.n == 0) throw InputError("map needs at least one variable");
  checked_power(spec.q(), f.n, budget);
  const std::uint64_t image_space = checked_power(spec.q(), f.m(), std::numeric_limits<std::uint64_t>::max() / 2);
  ImageSet image(image_space);
  const auto elements = spec.enumerate();
  for_each_point(elements, f.n, [&](std::span<const FFElement> x) {
    std::uint64_t idx = 0;
    for (std::size_t i = f.m(); i-- > 0;) idx = idx * spec.q() + spec.index(evaluate(spec, f.components[i], x));
    image.insert(idx);
  });
  return image.size();
}

std::uint64_t value_set_size_via_g(const PolyVector& f, const TowerSpec& tower, std::uint64_t budget) {
  checked_power(tower.base().q(), f.n, budget);
  const TowerPoly g = construct_g(f, tower);
  std::vector<TowerElement> embedded;
  for (const auto& x : tower.base().enumerate()) embedded.push_back(tower.embed(x));
  ImageSet image(tower.order());
  std::vector<std::size_t> idx(f.n, 0);
  std::vector<TowerElement> point(f.n, embedded[0]);
  while (true) {
    image.insert(tower.index(evaluate(tower, g, std::span<const TowerElement>(point))));
    std::size_t i = 0;
    while (i < f.n) {
      if (++idx[i] < embedded.size()) {
        point[i] = embedded[idx[i]];
        break;
      }
      idx[i] = 0;
      point[i] = embedded[0];
      ++i;
    }
    if (i == f.n) break;
  }
  return image.size();
}

Rational polytope_deficit(const Rational& mu, std::uint64_t q) {
  if (mu.is_infinite()) return integer(q);
  return min(integer(q), mu * integer(q - 1));
}

Rational mww_deficit(std::size_t n, std::uint64_t degree, std::uint64_t q) {
  if (degree == 0) throw InputError("degree bound needs a nonconstant map");
  return min(integer(q), Rational(static_cast<std::int64_t>(n * (q - 1)), static_cast<std::int64_t>(degree)));
}

std::uint64_t bound_polytope(const PolyVector& f, const FieldSpec& spec) {
  require_square_nonconstant(f);
  const std::uint64_t domain = checked_power(spec.q(), f.n, std::numeric_limits<std::uint32_t>::max());
  const auto m = mu(newton_polytope(f));
  return floor_to_u64(integer(domain) - polytope_deficit(m.value, spec.q()));
}

std::uint64_t bound_mww(const PolyVector& f, const FieldSpec& spec) {
  require_square_nonconstant(f);
  const std::uint64_t domain = checked_power(spec.q(), f.n, std::numeric_limits<std::uint32_t>::max());
  return floor_to_u64(integer(domain) - mww_deficit(f.n, *total_degree(f), spec.q()));
}

Rational bound_univariate(std::uint64_t d, std::uint64_t q) {
  if (d < 1) throw InputError("degree must be at least 1");
  return integer(q) - Rational(static_cast<std::int64_t>(q - 1), static_cast<std::int64_t>(d));
}

std::uint64_t bound_from_U(const PolyVector& f, const TowerSpec& tower, const UOptions& options) {
  require_square_nonconstant(f);
  return tower.order() - compute_U(f, tower, options).U;
}

bool BoundsReport::all_checks_pass() const {
  for (const auto& flag : {theorem_holds, lemma3_holds, lemma6_holds})
    if (flag && !*flag) return false;
  return mww_dominated && mu_degree_bound_holds;
}

BoundsReport verify_bounds(const PolyVector& f, const FieldSpec& spec, const VerifyOptions& options,
                           const std::vector<std::string>& varnames) {
  require_square_nonconstant(f);
  BoundsReport r{spec};
  r.varnames = varnames.empty() ? default_varnames(f.n) : varnames;
  r.map_text = to_string(f, spec, r.varnames);
  r.n = f.n;
  r.q = spec.q();
  r.domain_size = checked_power(spec.q(), f.n, std::numeric_limits<std::uint32_t>::max());
  r.degree = *total_degree(f);
  const Rational domain = integer(r.domain_size);

  const auto mu_result = mu(newton_polytope(f), options.mu_options);
  r.mu = mu_result.value;
  r.mu_witness = mu_result.witness;
  r.degenerate_mu = r.mu.is_infinite();
  r.mu_degree_bound_holds = r.mu >= Rational(static_cast<std::int64_t>(r.n), static_cast<std::int64_t>(r.degree));

  r.polytope_deficit = polytope_deficit(r.mu, r.q);
  r.mww_deficit = mww_deficit(r.n, r.degree, r.q);
  r.bound_polytope = floor_to_u64(domain - r.polytope_deficit);
  r.bound_mww = floor_to_u64(domain - r.mww_deficit);
  r.mww_dominated = domain - r.polytope_deficit <= domain - r.mww_deficit;
  r.mww_strict = r.bound_polytope < r.bound_mww;

  try {
    r.vf_size = value_set_size(f, spec, options.domain_budget);
  } catch (const BudgetExceeded&) {
    r.omitted.push_back("vf_size");
  }
  if (r.vf_size) {
    const bool below = *r.vf_size < r.domain_size;
    const Rational vf = integer(*r.vf_size);
    r.permutation = !below;
    r.theorem_holds = !below || vf <= domain - r.polytope_deficit;
    r.sharp = below && vf == domain - r.polytope_deficit;
  }

  r.constant_on_domain = r.vf_size == 1u;
  if (r.domain_size <= options.u_budget && !r.constant_on_domain) {
    UOptions u_options;
    u_options.max_domain = options.u_budget;
    const auto tower = make_tower(spec, static_cast<std::uint32_t>(f.n), options.domain_budget);
    r.U = compute_U(f, tower, u_options).U;
    r.bound_U = r.domain_size - *r.U;
    r.lemma6_holds = integer(*r.U) >= min(r.mu * integer(r.q - 1), integer(r.q));
    if (r.vf_size) r.lemma3_holds = *r.vf_size == r.domain_size || *r.vf_size <= *r.bound_U;
  } else {
    r.omitted.push_back("U");
  }
  return r;
}

VarietyCheck variety_ord_check(const PolyVector& fs, const FieldSpec& spec, std::uint64_t budget) {
  if (fs.m() == 0) throw InputError("variety needs at least one polynomial");
  for (std::size_t i = 0; i < fs.m(); ++i)
    if (fs.components[i].is_zero()) throw InputError("component " + std::to_string(i + 1) + " is zero");
  for (std::size_t v = 0; v < fs.n; ++v) {
    bool present = false;
    for (const auto& c : fs.components)
      for (const auto& [mono, coeff] : c.terms()) present = present || mono.exponents[v] != 0;
    if (!present)
      throw InputError("collection does not involve variable " + std::to_string(v + 1) +
                       "; it is polynomial in a proper subset of the variables");
  }

  VarietyCheck out;
  out.m = fs.m();
  const auto elements = spec.enumerate();
  checked_power(spec.q(), fs.n, budget);
  for_each_point(elements, fs.n, [&](std::span<const FFElement> x) {
    const bool root = std::all_of(fs.components.begin(), fs.components.end(),
                                  [&](const Poly& c) { return spec.is_zero(evaluate(spec, c, x)); });
    if (root) ++out.points;
  });
  out.ord_q = out.points == 0
                  ? Rational::infinity()
                  : Rational(static_cast<std::int64_t>(p_valuation(spec.p(), out.points)),
                             static_cast<std::int64_t>(spec.e()));

  // f_1 y_1 + ... + f_m y_m: exponent vector (V, e_i) for V in supp(f_i).
  std::vector<LatticePoint> gens;
  for (std::size_t i = 0; i < fs.m(); ++i)
    for (const auto& [mono, coeff] : fs.components[i].terms()) {
      LatticePoint g = mono.exponents;
      g.resize(fs.n + fs.m(), 0);
      g[fs.n + i] = 1;
      gens.push_back(std::move(g));
    }
  out.mu_aux = mu(LatticePolytope(fs.n + fs.m(), std::move(gens))).value;
  out.holds = out.ord_q.is_infinite() ||
              (!out.mu_aux.is_infinite() && out.ord_q >= out.mu_aux - integer(out.m));
  return out;
}

SharpInstance sharp_family(SharpFamily kind, const SharpFamilyParams& params, std::uint64_t budget) {
  const auto pe = prime_power(params.q);
  if (!pe) throw InputError(std::to_string(params.q) + " is not a prime power");
  const auto [p, e] = *pe;

  if (kind == SharpFamily::polytope_sharp) {
    if (params.a < 1) throw InputError("exponent a must be at least 1");
    FieldSpec field = make_field(p, e, budget);
    const std::vector<std::string> vars = default_varnames(2);
    PolyVector f = parse_poly_vector("x1; x1^" + std::to_string(params.a) + "*x2", field, vars);
    SharpInstance out{kind, field, vars, std::move(f)};
    out.expected_vf = params.q * params.q - (params.q - 1);
    out.expected_mu = Rational(1);
    out.expected_bound_polytope = params.q * params.q - std::min<std::uint64_t>(params.q, params.q - 1);
    return out;
  }

  if (params.k < 1) throw InputError("extension degree k must be at least 1");
  FieldSpec field = make_field(p, e * params.k, budget);
  const std::vector<std::string> vars = default_varnames(1);
  // (x+1) x^{q-1} = x^q + x^{q-1}
  PolyVector f = parse_poly_vector("x^" + std::to_string(params.q) + " + x^" + std::to_string(params.q - 1), field, vars);
  SharpInstance out{kind, field, vars, std::move(f)};
  out.brute_vf = value_set_size(out.map, field, budget);
  const std::uint64_t Q = field.q();
  out.printed_formula = integer(Q) - Rational(static_cast<std::int64_t>(Q - 1), static_cast<std::int64_t>(params.q));
  out.printed_formula_integral = out.printed_formula->is_integer();
  out.brute_within_formula = integer(*out.brute_vf) <= *out.printed_formula;
  return out;
}

PolyVector sample_map(const FieldSpec& spec, std::size_t n, std::uint32_t deg_max, std::mt19937_64& rng) {
  if (n == 0) throw InputError("map needs at least one variable");
  if (deg_max < 1) throw InputError("degree cap must be at least 1");
  if (spec.q() < 2) throw InputError("field too small");

  std::vector<Monomial> monomials;
  Monomial current{std::vector<std::uint32_t>(n, 0)};
  auto enumerate = [&](auto&& self, std::size_t pos, std::uint32_t remaining) -> void {
    if (pos == n) {
      monomials.push_back(current);
      return;
    }
    for (std::uint32_t v = 0; v <= remaining; ++v) {
      current.exponents[pos] = v;
      self(self, pos + 1, remaining - v);
    }
    current.exponents[pos] = 0;
  };
  enumerate(enumerate, 0, deg_max);

  PolyVector f;
  f.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    while (true) {
      Poly c(n);
      for (const auto& mono : monomials) {
        if ((rng() & 1) == 0) continue;
        const std::uint64_t idx = 1 + rng() % (spec.q() - 1);
        c.add_term(spec, mono, spec.element(idx));
      }
      if (!is_constant(c)) {
        f.components.push_back(std::move(c));
        break;
      }
    }
  }
  return f;
}

SweepResult run_sweep(const SweepConfig& config) {
  SweepResult result;
  std::mt19937_64 rng(config.seed);
  for (const auto q : config.qs) {
    const auto pe = prime_power(q);
    if (!pe) throw InputError(std::to_string(q) + " is not a prime power");
    const FieldSpec field = make_field(pe->first, pe->second, config.verify.domain_budget);

    std::vector<PolyVector> instances;
    std::vector<std::string> vars = default_varnames(config.n);
    if (config.family == SweepFamily::random) {
      for (std::uint64_t s = 0; s < config.samples; ++s)
        instances.push_back(sample_map(field, config.n, config.deg_max, rng));
    } else {
      for (const auto a : config.a_values) {
        auto inst = sharp_family(SharpFamily::polytope_sharp, {q, a, 1}, config.verify.domain_budget);
        vars = inst.varnames;
        instances.push_back(std::move(inst.map));
      }
    }
    for (const auto& f : instances) {
      auto report = verify_bounds(f, field, config.verify, vars);
      auto& s = result.summary;
      ++s.instances;
      if (!report.all_checks_pass()) ++s.violations;
      if (report.sharp.value_or(false)) ++s.sharp;
      if (report.degenerate_mu) ++s.degenerate;
      if (report.mww_strict) ++s.dominance_strict;
      if (report.permutation.value_or(false)) ++s.permutations;
      if (report.U) ++s.u_computed;
      result.reports.push_back(std::move(report));
    }
  }
  return result;
}

}  // namespace vsbound
