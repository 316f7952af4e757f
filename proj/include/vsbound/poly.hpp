#pragma once

// Sparse multivariate polynomials with coefficients in any of the rings used
// here (F_q, F_{q^n}, truncated Witt rings). The coefficient ring is passed
// explicitly to every operation that needs arithmetic; it must provide
// zero(), one(), add(), mul(), pow() and is_zero() for its Element type.

#include "vsbound/error.hpp"
#include "vsbound/fields.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vsbound {

struct Monomial {
  std::vector<std::uint32_t> exponents;

  std::size_t arity() const noexcept { return exponents.size(); }
  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (auto v : exponents) d += v;
    return d;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exponents < b.exponents; }
};

template <class Coeff>
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Coeff>;

  explicit MultiPoly(std::size_t n) : n_(n) {}

  std::size_t n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c·X^V, combining with an existing term and dropping zeros.
  template <class Ring>
  void add_term(const Ring& ring, const Monomial& mono, const Coeff& c) {
    if (mono.arity() != n_) throw InputError("monomial arity does not match polynomial");
    if (ring.is_zero(c)) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_.emplace(mono, c);
      return;
    }
    it->second = ring.add(it->second, c);
    if (ring.is_zero(it->second)) terms_.erase(it);
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::size_t n_;
  Terms terms_;
};

using Poly = MultiPoly<FFElement>;
using TowerPoly = MultiPoly<TowerElement>;

/// An m-tuple of polynomials over F_q in the same n variables.
struct PolyVector {
  std::size_t n = 0;
  std::vector<Poly> components;

  std::size_t m() const noexcept { return components.size(); }
  friend bool operator==(const PolyVector&, const PolyVector&) = default;
};

template <class Ring, class Coeff>
MultiPoly<Coeff> add(const Ring& ring, const MultiPoly<Coeff>& f, const MultiPoly<Coeff>& g) {
  if (f.n() != g.n()) throw InputError("polynomial arity mismatch");
  MultiPoly<Coeff> out = f;
  for (const auto& [mono, c] : g.terms()) out.add_term(ring, mono, c);
  return out;
}

template <class Ring, class Coeff>
MultiPoly<Coeff> multiply(const Ring& ring, const MultiPoly<Coeff>& f, const MultiPoly<Coeff>& g) {
  if (f.n() != g.n()) throw InputError("polynomial arity mismatch");
  MultiPoly<Coeff> out(f.n());
  for (const auto& [ma, ca] : f.terms())
    for (const auto& [mb, cb] : g.terms()) {
      Monomial mono = ma;
      for (std::size_t i = 0; i < mono.exponents.size(); ++i) mono.exponents[i] += mb.exponents[i];
      out.add_term(ring, mono, ring.mul(ca, cb));
    }
  return out;
}

/// Term-by-term evaluation with square-and-multiply powers.
template <class Ring, class Coeff>
Coeff evaluate(const Ring& ring, const MultiPoly<Coeff>& f, std::span<const Coeff> point) {
  if (point.size() != f.n()) throw InputError("evaluation point has wrong number of coordinates");
  Coeff sum = ring.zero();
  for (const auto& [mono, c] : f.terms()) {
    Coeff term = c;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (mono.exponents[i] != 0) term = ring.mul(term, ring.pow(point[i], mono.exponents[i]));
    sum = ring.add(sum, term);
  }
  return sum;
}

/// Total degree; nullopt ("undefined") for the zero polynomial.
template <class Coeff>
std::optional<std::uint64_t> total_degree(const MultiPoly<Coeff>& f) {
  if (f.is_zero()) return std::nullopt;
  std::uint64_t d = 0;
  for (const auto& [mono, c] : f.terms()) d = std::max(d, mono.degree());
  return d;
}

/// Max over components; undefined only if every component is zero.
std::optional<std::uint64_t> total_degree(const PolyVector& f);

template <class Coeff>
std::set<Monomial> support(const MultiPoly<Coeff>& f) {
  std::set<Monomial> out;
  for (const auto& [mono, c] : f.terms()) out.insert(mono);
  return out;
}

/// Union of the component supports.
std::set<Monomial> support(const PolyVector& f);

/// g = f_1 e_1 + ... + f_n e_n over F_{q^n} with the tower's power basis.
TowerPoly construct_g(const PolyVector& f, const TowerSpec& tower);

/// Default variable names: "x" for one variable, x1..xn otherwise.
std::vector<std::string> default_varnames(std::size_t n);

// Grammar (whitespace ignored):
//   poly   := ["+"|"-"] term (("+"|"-") term)*
//   term   := coeff | [coeff "*"] factor ("*" factor)*
//   factor := var ["^" int]
//   coeff  := int | "(" literal ")"      literal: polynomial in t with integer coefficients
// A PolyVector is a ";"-separated list of polys.
Poly parse_poly(std::string_view text, const FieldSpec& spec, const std::vector<std::string>& varnames);
PolyVector parse_poly_vector(std::string_view text, const FieldSpec& spec,
                             const std::vector<std::string>& varnames);
/// Parses a bare F_q literal such as "t+1" or "2".
FFElement parse_field_literal(std::string_view text, const FieldSpec& spec);

/// Canonical text accepted by parse_poly.
std::string to_string(const Poly& f, const FieldSpec& spec, const std::vector<std::string>& varnames);
std::string to_string(const PolyVector& f, const FieldSpec& spec, const std::vector<std::string>& varnames);
std::string to_string(const TowerPoly& g, const TowerSpec& tower, const std::vector<std::string>& varnames);

}  // namespace vsbound
