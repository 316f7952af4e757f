#pragma once

// Newton polytopes, the gauge (least dilation k with v ∈ kΔ) and the
// invariant mu: the least dilation containing a lattice point with all
// coordinates strictly positive.

#include "vsbound/poly.hpp"
#include "vsbound/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace vsbound {

using LatticePoint = std::vector<std::uint32_t>;

/// conv(generators ∪ {0}) for generators in Z^n_{≥0}. The origin is implicit;
/// generators are kept as given (deduplicated and sorted), not reduced to
/// hull vertices.
class LatticePolytope {
 public:
  LatticePolytope(std::size_t n, std::vector<LatticePoint> generators);

  std::size_t n() const noexcept { return n_; }
  const std::vector<LatticePoint>& generators() const noexcept { return generators_; }
  /// Largest coordinate sum over the generators.
  std::uint64_t max_degree() const noexcept { return max_degree_; }
  /// True when every coordinate is nonzero in some generator.
  bool covers_all_variables() const;

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  std::size_t n_;
  std::vector<LatticePoint> generators_;
  std::uint64_t max_degree_ = 0;
};

template <class Coeff>
LatticePolytope newton_polytope(const MultiPoly<Coeff>& f) {
  if (f.is_zero()) throw InputError("Newton polytope of the zero polynomial is undefined");
  std::vector<LatticePoint> gens;
  for (const auto& [mono, c] : f.terms()) gens.push_back(mono.exponents);
  return LatticePolytope(f.n(), std::move(gens));
}

LatticePolytope newton_polytope(const PolyVector& f);

struct GaugeCertificate {
  Rational value;
  /// One weight per generator (same order), Σ w_j V_j = v; empty if infinite.
  std::vector<Rational> weights;
};

/// min Σλ_j subject to Σλ_j V_j = v, λ ≥ 0; Infinity outside the cone.
GaugeCertificate gauge_certificate(const LatticePolytope& P, std::span<const std::uint32_t> v);
Rational gauge(const LatticePolytope& P, std::span<const std::uint32_t> v);

struct MuOptions {
  /// Cap on the number of candidate points whose gauge is evaluated.
  std::uint64_t max_candidates = 2'000'000;
};

struct MuResult {
  Rational value;
  /// Lexicographically smallest positive lattice point attaining the value.
  std::optional<LatticePoint> witness;
  std::uint64_t candidates_examined = 0;
};

/// Exact mu via the bounded lattice search: B = gauge(ΣV_j), and every
/// v ≥ (1,...,1) with gauge(v) ≤ B has Σv_i ≤ d·B where d = max_degree().
/// The cutoff shrinks as better candidates are found.
MuResult mu(const LatticePolytope& P, const MuOptions& options = {});

/// One "c1,c2,...,cn" line per generator after an "x1,...,xn" header.
void write_generators_csv(std::ostream& os, const LatticePolytope& P);

}  // namespace vsbound
