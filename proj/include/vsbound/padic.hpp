#pragma once

// Truncated unramified p-adic rings W = (Z/p^N)[s]/(M(s)), Teichmüller lifts,
// the power sums S_k(g) = Σ_{x ∈ L_q^n} g̃(x)^k and the invariant U.
//
// "S_k ≢ 0 mod pk" is tested as S_k ≢ 0 mod p^{1+v_p(k)}: the prime-to-p
// part of k is a unit, so both ideals coincide.

#include "vsbound/fields.hpp"
#include "vsbound/poly.hpp"

#include <boost/container/static_vector.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace vsbound {

using WittResidues = boost::container::static_vector<std::uint64_t, kMaxDegree>;

struct WittElement {
  WittResidues coeffs;

  friend bool operator==(const WittElement& a, const WittElement& b) { return a.coeffs == b.coeffs; }
};

class WittRing {
 public:
  using Element = WittElement;

  /// `modulus` is ascending, monic of degree r over Z/p^N, and must reduce
  /// mod p to an irreducible polynomial.
  WittRing(std::uint32_t p, std::uint32_t precision, std::vector<std::uint64_t> modulus);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t precision() const noexcept { return precision_; }
  std::uint32_t degree() const noexcept { return degree_; }
  /// p^N.
  std::uint64_t characteristic() const noexcept { return pN_; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  const FieldSpec& residue_field() const noexcept { return residue_field_; }

  WittElement zero() const;
  WittElement one() const;
  WittElement from_integer(std::int64_t value) const;
  bool contains(const WittElement& a) const;
  bool is_zero(const WittElement& a) const;

  WittElement add(const WittElement& a, const WittElement& b) const;
  WittElement sub(const WittElement& a, const WittElement& b) const;
  WittElement neg(const WittElement& a) const;
  WittElement mul(const WittElement& a, const WittElement& b) const;
  WittElement pow(const WittElement& a, std::uint64_t exponent) const;

  /// Coefficientwise lift of a residue-field element to digits in [0, p).
  WittElement lift_digits(const FFElement& a) const;
  /// Reduction mod p.
  FFElement reduce(const WittElement& a) const;
  /// Image in the same ring at a lower precision.
  WittElement truncate(const WittElement& a, const WittRing& lower) const;

 private:
  void check(const WittElement& a) const;

  std::uint32_t p_;
  std::uint32_t precision_;
  std::uint32_t degree_;
  std::uint64_t pN_;
  std::vector<std::uint64_t> modulus_;
  FieldSpec residue_field_;
};

/// (Z/p^N)[s]/(M̃) where M̃ is the field modulus read as integers.
WittRing lift_ring(const FieldSpec& field, std::uint32_t precision);

/// The unique ω ≡ a (mod p) with ω^Q = ω, Q = |residue field|; obtained by
/// iterating y ← y^Q on the digit lift N−1 times.
WittElement teichmuller(const FFElement& a, const WittRing& ring);

/// Isomorphism from the tower F_{q^n} = F_q[t]/(E) onto the flat field
/// F_{p^r} = make_field(p, r), r = e·n. The images of s and t are the first
/// roots (in enumeration order) of the base and tower moduli.
class TowerEmbedding {
 public:
  explicit TowerEmbedding(const TowerSpec& tower, std::uint64_t budget = kDefaultDomainBudget);

  const TowerSpec& tower() const noexcept { return tower_; }
  const FieldSpec& flat() const noexcept { return flat_; }
  FFElement embed_base(const FFElement& a) const;
  FFElement embed(const TowerElement& a) const;

 private:
  TowerSpec tower_;
  FieldSpec flat_;
  std::vector<FFElement> s_powers_;
  std::vector<FFElement> t_powers_;
};

/// Ring covering F_{q^n} at precision N.
WittRing lift_ring(const TowerSpec& tower, std::uint32_t precision);

/// Per-tower data reused across many power sums: the flat embedding and, for
/// every precision a U scan can need, the lifted ring and the Teichmüller
/// lifts of all F_q elements (in F_q enumeration order).
class TeichmullerFrame {
 public:
  struct Level {
    WittRing ring;
    std::vector<WittElement> base_lifts;
  };

  explicit TeichmullerFrame(const TowerSpec& tower, std::uint64_t budget = kDefaultDomainBudget);

  const TowerSpec& tower() const noexcept { return embedding_.tower(); }
  const TowerEmbedding& embedding() const noexcept { return embedding_; }
  /// Largest 1 + v_p(k) over 1 ≤ k < q^n.
  std::uint32_t max_precision() const noexcept { return static_cast<std::uint32_t>(levels_.size()); }
  const Level& level(std::uint32_t precision) const;
  Level build_level(std::uint32_t precision) const;

  WittElement lift_coefficient(const TowerElement& c, const WittRing& ring) const;

 private:
  TowerEmbedding embedding_;
  std::vector<Level> levels_;
};

struct PowerSumOptions {
  std::uint64_t max_points = kDefaultDomainBudget;
};

/// S_k(g) at an explicit precision.
WittElement teichmuller_power_sum(const TowerPoly& g, std::uint64_t k, std::uint32_t precision,
                                  const TeichmullerFrame& frame, const PowerSumOptions& options = {});

/// S_k(g) mod p^{1+v_p(k)}.
WittElement power_sum(const TowerPoly& g, std::uint64_t k, const TeichmullerFrame& frame,
                      const PowerSumOptions& options = {});
WittElement power_sum(const TowerPoly& g, std::uint64_t k, const TowerSpec& tower,
                      const PowerSumOptions& options = {});

struct UTraceRecord {
  std::uint64_t k;
  std::uint32_t precision;
  WittElement sum;
  bool nonzero;
};

struct UOptions {
  /// Largest q^n for which a U scan is attempted.
  std::uint64_t max_domain = 512;
  /// Hard cap on k; 0 means q^n − 1.
  std::uint64_t max_k = 0;
  std::function<void(const UTraceRecord&)> trace;
};

struct UResult {
  std::uint64_t U = 0;
  std::uint64_t witness_k = 0;
  std::uint32_t precision = 0;
  /// S_U mod p^{precision}; nonzero.
  WittElement S_value;
};

/// Smallest k ≥ 1 with S_k(g) ≢ 0 mod p^{1+v_p(k)}, g = construct_g(f).
UResult compute_U(const PolyVector& f, const TeichmullerFrame& frame, const UOptions& options = {});
UResult compute_U(const PolyVector& f, const TowerSpec& tower, const UOptions& options = {});

/// U for univariate polynomials over a small field F_q, tuned for exhaustive
/// enumeration. Every ring (Z/p^N)[s]/(M̃) needed for k < q is tabulated
/// (elements as indices, add/mul/pow by lookup), and for_each_monic updates
/// the values f̃(ω) incrementally as coefficients change. Agrees with
/// compute_U on the same polynomial.
class UnivariateUScanner {
 public:
  /// Throws BudgetExceeded when some ring has more than `max_ring_size`
  /// elements.
  explicit UnivariateUScanner(const FieldSpec& field, std::uint64_t max_ring_size = 4096);

  const FieldSpec& field() const noexcept { return field_; }

  /// U of Σ_j coeffs[j] x^j, coefficients given as F_q element indices.
  std::uint64_t U(std::span<const std::uint32_t> coeffs) const;

  /// Calls visit(coeffs, U) for all q^d monic polynomials of degree d ≥ 1,
  /// in base-q counting order of (c_0, ..., c_{d-1}).
  void for_each_monic(std::uint32_t d,
                      const std::function<void(std::span<const std::uint32_t>, std::uint64_t)>& visit) const;

 private:
  struct Table {
    std::uint32_t precision;
    std::uint32_t size;
    std::vector<std::uint16_t> add, mul, neg;
    std::vector<std::uint16_t> pow;        // pow[a * q + k], k < q
    std::vector<std::uint16_t> teich_pow;  // ω_x^j at [x * q + j], j < q
    std::vector<std::uint16_t> lift;       // Teichmüller lift of c at [c]
  };

  std::uint32_t reduce_exponent(std::uint64_t j) const;
  std::uint16_t term(const Table& t, std::uint32_t c, std::uint32_t j, std::uint32_t x) const;
  std::uint64_t scan(const std::vector<std::vector<std::uint16_t>>& values) const;

  FieldSpec field_;
  std::uint32_t q_;
  std::vector<Table> tables_;          // by precision − 1
  std::vector<std::uint32_t> level_;   // level_[k] = precision − 1 for k < q
};

/// Σ_{x ∈ L_q} x^k in closed form: 0 if (q−1) ∤ k, q−1 if (q−1) | k ≠ 0, q if k = 0.
std::uint64_t charsum_oracle(std::uint64_t q, std::uint64_t k);

}  // namespace vsbound
