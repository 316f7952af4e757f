#include "vsbound/polytope.hpp"

#include "vsbound/error.hpp"
#include "vsbound/simplex.hpp"

#include <algorithm>
#include <ostream>

namespace vsbound {

LatticePolytope::LatticePolytope(std::size_t n, std::vector<LatticePoint> generators)
    : n_(n), generators_(std::move(generators)) {
  if (n_ == 0) throw InputError("polytope dimension must be positive");
  if (generators_.empty()) throw InputError("polytope needs at least one generator");
  for (const auto& g : generators_) {
    if (g.size() != n_) throw InputError("generator has wrong dimension");
    std::uint64_t s = 0;
    for (auto c : g) s += c;
    max_degree_ = std::max(max_degree_, s);
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

bool LatticePolytope::covers_all_variables() const {
  for (std::size_t i = 0; i < n_; ++i) {
    const bool present = std::any_of(generators_.begin(), generators_.end(),
                                     [&](const LatticePoint& g) { return g[i] != 0; });
    if (!present) return false;
  }
  return true;
}

LatticePolytope newton_polytope(const PolyVector& f) {
  std::vector<LatticePoint> gens;
  for (const auto& mono : support(f)) gens.push_back(mono.exponents);
  if (gens.empty()) throw InputError("Newton polytope of the zero map is undefined");
  return LatticePolytope(f.n, std::move(gens));
}

GaugeCertificate gauge_certificate(const LatticePolytope& P, std::span<const std::uint32_t> v) {
  if (v.size() != P.n()) throw InputError("point dimension does not match polytope");
  const auto& gens = P.generators();
  GaugeCertificate out;
  if (std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; })) {
    out.value = Rational(0);
    out.weights.assign(gens.size(), Rational(0));
    return out;
  }
  // The origin contributes nothing; keep only nonzero generators as columns.
  std::vector<std::size_t> columns;
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (std::any_of(gens[j].begin(), gens[j].end(), [](std::uint32_t c) { return c != 0; }))
      columns.push_back(j);

  std::vector<std::vector<Rational>> A(P.n(), std::vector<Rational>(columns.size()));
  std::vector<Rational> b(P.n());
  for (std::size_t i = 0; i < P.n(); ++i) {
    b[i] = Rational(static_cast<std::int64_t>(v[i]));
    for (std::size_t k = 0; k < columns.size(); ++k)
      A[i][k] = Rational(static_cast<std::int64_t>(gens[columns[k]][i]));
  }
  const std::vector<Rational> cost(columns.size(), Rational(1));
  const auto lp = minimize_standard_form(A, b, cost);
  if (lp.status != LinearProgramResult::Status::optimal) {
    out.value = Rational::infinity();
    return out;
  }
  out.value = lp.objective;
  out.weights.assign(gens.size(), Rational(0));
  for (std::size_t k = 0; k < columns.size(); ++k) out.weights[columns[k]] = lp.solution[k];
  return out;
}

Rational gauge(const LatticePolytope& P, std::span<const std::uint32_t> v) {
  return gauge_certificate(P, v).value;
}

namespace {

// Visits every v ≥ (1,...,1) with Σ v_i = remaining + Σ v[0..pos), in
// lexicographic order.
template <class Visit>
void for_each_composition(LatticePoint& v, std::size_t pos, std::uint64_t remaining, Visit& visit) {
  const std::size_t n = v.size();
  if (pos + 1 == n) {
    v[pos] = static_cast<std::uint32_t>(remaining);
    visit(v);
    return;
  }
  for (std::uint64_t c = 1; c + (n - pos - 1) <= remaining; ++c) {
    v[pos] = static_cast<std::uint32_t>(c);
    for_each_composition(v, pos + 1, remaining - c, visit);
  }
}

}  // namespace

MuResult mu(const LatticePolytope& P, const MuOptions& options) {
  MuResult out;
  if (!P.covers_all_variables()) {
    out.value = Rational::infinity();
    return out;
  }
  const std::size_t n = P.n();
  LatticePoint sum(n, 0);
  for (const auto& g : P.generators())
    for (std::size_t i = 0; i < n; ++i) sum[i] += g[i];
  Rational best = gauge(P, sum);
  if (best.is_infinite()) throw InternalError("gauge of the generator sum is infinite");
  out.witness = sum;
  const Rational d(static_cast<std::int64_t>(P.max_degree()));

  for (std::uint64_t level = n;; ++level) {
    if (Rational(static_cast<std::int64_t>(level)) > d * best) break;
    LatticePoint scratch(n, 1);
    auto visit = [&](const LatticePoint& v) {
      if (++out.candidates_examined > options.max_candidates)
        throw BudgetExceeded("mu search exceeded " + std::to_string(options.max_candidates) + " candidates");
      const Rational k = gauge(P, v);
      if (k < best || (k == best && v < *out.witness)) {
        best = k;
        out.witness = v;
      }
    };
    for_each_composition(scratch, 0, level, visit);
  }
  out.value = best;
  return out;
}

void write_generators_csv(std::ostream& os, const LatticePolytope& P) {
  for (std::size_t i = 0; i < P.n(); ++i) os << (i ? "," : "") << "x" << (i + 1);
  os << '\n';
  for (const auto& g : P.generators()) {
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    os << '\n';
  }
}

}  // namespace vsbound
