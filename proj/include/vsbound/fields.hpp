#pragma once

// Finite fields F_q = F_p[s]/(m(s)) and tower extensions F_{q^n} = F_q[t]/(E(t)).
//
// Elements are plain coefficient vectors; a FieldSpec / TowerSpec carries the
// modulus and performs all arithmetic. Both are immutable once constructed.
//
// Element order is base-p (resp. base-q) counting on the coefficient vector,
// with coefficient 0 the least significant digit. Index 0 is zero, index 1 is
// one. Moduli are chosen as the first irreducible monic polynomial in that
// same counting order, so every run builds identical fields.

#include <boost/container/static_vector.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vsbound {

/// Largest extension degree over F_p representable without allocation.
/// p^r ≤ 2^20 forces r ≤ 20.
inline constexpr std::size_t kMaxDegree = 24;

/// Default cap on the number of points any exhaustive scan may visit.
inline constexpr std::uint64_t kDefaultDomainBudget = std::uint64_t{1} << 20;

using Residues = boost::container::static_vector<std::uint32_t, kMaxDegree>;

struct FFElement {
  Residues coeffs;

  friend bool operator==(const FFElement& a, const FFElement& b) { return a.coeffs == b.coeffs; }
  friend bool operator<(const FFElement& a, const FFElement& b) { return a.coeffs < b.coeffs; }
};

bool is_prime(std::uint64_t n);

/// (p, e) with q = p^e, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// v_p(k) for k ≥ 1.
std::uint32_t p_valuation(std::uint64_t p, std::uint64_t k);

/// base^exp, throwing BudgetExceeded if the result exceeds `limit`.
std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t limit);

class FieldSpec {
 public:
  using Element = FFElement;

  /// `modulus` is ascending and monic. Throws InputError when p is not prime
  /// or the modulus is not irreducible over F_p.
  FieldSpec(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint64_t q() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FFElement zero() const;
  FFElement one() const;
  /// The class of s in F_p[s]/(m).
  FFElement generator() const;
  FFElement from_integer(std::int64_t value) const;
  FFElement element(std::uint64_t index) const;
  std::uint64_t index(const FFElement& a) const;
  bool contains(const FFElement& a) const;

  bool is_zero(const FFElement& a) const;
  bool in_prime_field(const FFElement& a) const;
  FFElement add(const FFElement& a, const FFElement& b) const;
  FFElement sub(const FFElement& a, const FFElement& b) const;
  FFElement neg(const FFElement& a) const;
  FFElement mul(const FFElement& a, const FFElement& b) const;
  FFElement inv(const FFElement& a) const;
  FFElement div(const FFElement& a, const FFElement& b) const;
  FFElement pow(const FFElement& a, std::uint64_t exponent) const;

  std::vector<FFElement> enumerate() const;

  /// Polynomial in the generator symbol "t", e.g. "2*t^2+t+1"; prime-field
  /// elements print as plain integers.
  std::string format(const FFElement& a) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Unchecked {};
  FieldSpec(Unchecked, std::uint32_t p, std::vector<std::uint32_t> modulus);
  void check(const FFElement& a) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
};

FieldSpec make_field(std::uint32_t p, std::uint32_t e,
                     std::uint64_t budget = kDefaultDomainBudget);

enum class FieldOp { add, sub, mul, div };

/// Binary field operation on two elements of `spec`.
FFElement ff_arith(const FieldSpec& spec, const FFElement& a, const FFElement& b, FieldOp op);

std::vector<FFElement> enumerate_field(const FieldSpec& spec);

/// Element of F_{q^n}: coefficients over F_q of 1, t, ..., t^{n-1}.
struct TowerElement {
  std::vector<FFElement> coeffs;

  friend bool operator==(const TowerElement& a, const TowerElement& b) = default;
  friend bool operator<(const TowerElement& a, const TowerElement& b) {
    return a.coeffs < b.coeffs;
  }
};

class TowerSpec {
 public:
  using Element = TowerElement;

  /// `ext_modulus` is ascending, monic, of degree n ≥ 1 over `base`, and must
  /// be irreducible over `base`.
  TowerSpec(FieldSpec base, std::vector<FFElement> ext_modulus);

  const FieldSpec& base() const noexcept { return base_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint64_t order() const noexcept { return order_; }
  const std::vector<FFElement>& ext_modulus() const noexcept { return ext_modulus_; }
  /// Power basis e_i = t^{i-1}, i = 1..n.
  const std::vector<TowerElement>& basis() const noexcept { return basis_; }

  TowerElement zero() const;
  TowerElement one() const;
  /// F_q -> F_{q^n} as constant polynomials in t.
  TowerElement embed(const FFElement& a) const;
  TowerElement element(std::uint64_t index) const;
  std::uint64_t index(const TowerElement& a) const;
  bool contains(const TowerElement& a) const;

  bool is_zero(const TowerElement& a) const;
  TowerElement add(const TowerElement& a, const TowerElement& b) const;
  TowerElement sub(const TowerElement& a, const TowerElement& b) const;
  TowerElement neg(const TowerElement& a) const;
  TowerElement mul(const TowerElement& a, const TowerElement& b) const;
  TowerElement pow(const TowerElement& a, std::uint64_t exponent) const;

  std::string format(const TowerElement& a) const;

 private:
  void check(const TowerElement& a) const;

  FieldSpec base_;
  std::uint32_t n_;
  std::uint64_t order_;
  std::vector<FFElement> ext_modulus_;
  std::vector<TowerElement> basis_;
};

TowerSpec make_tower(const FieldSpec& base, std::uint32_t n,
                     std::uint64_t budget = kDefaultDomainBudget);

}  // namespace vsbound
