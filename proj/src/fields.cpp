#include "vsbound/fields.hpp"

#include "vsbound/error.hpp"

#include <algorithm>
#include <limits>

namespace vsbound {

namespace {

// Dense univariate polynomials over a field F, ascending, no trailing zeros.
template <class F>
using UPoly = std::vector<typename F::Element>;

template <class F>
void trim(const F& field, UPoly<F>& a) {
  while (!a.empty() && field.is_zero(a.back())) a.pop_back();
}

template <class F>
UPoly<F> poly_sub(const F& field, UPoly<F> a, const UPoly<F>& b) {
  if (a.size() < b.size()) a.resize(b.size(), field.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = field.sub(a[i], b[i]);
  trim(field, a);
  return a;
}

// a mod m for m with invertible leading coefficient.
template <class F>
UPoly<F> poly_mod(const F& field, UPoly<F> a, const UPoly<F>& m) {
  trim(field, a);
  const auto lead_inv = field.inv(m.back());
  while (a.size() >= m.size()) {
    const auto factor = field.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = field.sub(a[shift + i], field.mul(factor, m[i]));
    trim(field, a);
  }
  return a;
}

template <class F>
UPoly<F> poly_mulmod(const F& field, const UPoly<F>& a, const UPoly<F>& b, const UPoly<F>& m) {
  if (a.empty() || b.empty()) return {};
  UPoly<F> out(a.size() + b.size() - 1, field.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = field.add(out[i + j], field.mul(a[i], b[j]));
  return poly_mod(field, std::move(out), m);
}

template <class F>
UPoly<F> poly_powmod(const F& field, UPoly<F> base, std::uint64_t exp, const UPoly<F>& m) {
  UPoly<F> result{field.one()};
  result = poly_mod(field, std::move(result), m);
  base = poly_mod(field, std::move(base), m);
  while (exp > 0) {
    if (exp & 1) result = poly_mulmod(field, result, base, m);
    exp >>= 1;
    if (exp > 0) base = poly_mulmod(field, base, base, m);
  }
  return result;
}

template <class F>
UPoly<F> poly_gcd(const F& field, UPoly<F> a, UPoly<F> b) {
  trim(field, a);
  trim(field, b);
  while (!b.empty()) {
    auto r = poly_mod(field, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: a monic f of degree d over F_Q is irreducible iff
// gcd(f, x^{Q^i} - x) = 1 for i = 1..floor(d/2).
template <class F>
bool is_irreducible(const F& field, std::uint64_t field_order, const UPoly<F>& f) {
  const std::size_t degree = f.size() - 1;
  if (degree <= 1) return degree == 1;
  const UPoly<F> x{field.zero(), field.one()};
  UPoly<F> h = x;
  for (std::size_t i = 1; i <= degree / 2; ++i) {
    h = poly_powmod(field, h, field_order, f);
    const auto g = poly_gcd(field, f, poly_sub(field, h, x));
    if (g.size() != 1) return false;
  }
  return true;
}

FieldSpec prime_field(std::uint32_t p) { return FieldSpec(p, {0, 1}); }

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1 || p > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), e);
}

std::uint32_t p_valuation(std::uint64_t p, std::uint64_t k) {
  if (k == 0) throw InputError("valuation of zero is infinite");
  std::uint32_t v = 0;
  while (k % p == 0) {
    k /= p;
    ++v;
  }
  return v;
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base)
      throw BudgetExceeded(std::to_string(base) + "^" + std::to_string(exp) +
                           " exceeds budget " + std::to_string(limit));
    result *= base;
  }
  if (result > limit)
    throw BudgetExceeded(std::to_string(base) + "^" + std::to_string(exp) + " exceeds budget " +
                         std::to_string(limit));
  return result;
}

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec::FieldSpec(Unchecked, std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), e_(static_cast<std::uint32_t>(modulus.size() - 1)), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < e_; ++i) q_ *= p_;
}

FieldSpec::FieldSpec(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), e_(0), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw InputError("field characteristic " + std::to_string(p_) + " is not prime");
  if (modulus_.size() < 2) throw InputError("field modulus must have degree at least 1");
  if (modulus_.size() - 1 > kMaxDegree) throw InputError("field extension degree too large");
  if (modulus_.back() != 1) throw InputError("field modulus must be monic");
  for (auto c : modulus_)
    if (c >= p_) throw InputError("field modulus coefficient out of range");
  e_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (q_ > std::numeric_limits<std::uint64_t>::max() / p_) throw InputError("field too large");
    q_ *= p_;
  }
  if (e_ > 1) {
    const FieldSpec fp(Unchecked{}, p_, {0, 1});
    UPoly<FieldSpec> f;
    for (auto c : modulus_) f.push_back(fp.from_integer(c));
    if (!is_irreducible(fp, p_, f)) throw InputError("field modulus is not irreducible over F_p");
  }
}

void FieldSpec::check(const FFElement& a) const {
  if (!contains(a)) throw InputError("element does not belong to F_" + std::to_string(q_));
}

bool FieldSpec::contains(const FFElement& a) const {
  if (a.coeffs.size() != e_) return false;
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](std::uint32_t c) { return c < p_; });
}

FFElement FieldSpec::zero() const { return FFElement{Residues(e_, 0)}; }

FFElement FieldSpec::one() const {
  auto r = zero();
  r.coeffs[0] = 1;
  return r;
}

FFElement FieldSpec::generator() const {
  if (e_ == 1) return from_integer(static_cast<std::int64_t>(p_ - modulus_[0]) % p_);
  auto r = zero();
  r.coeffs[1] = 1;
  return r;
}

FFElement FieldSpec::from_integer(std::int64_t value) const {
  auto r = zero();
  const auto p = static_cast<std::int64_t>(p_);
  r.coeffs[0] = static_cast<std::uint32_t>(((value % p) + p) % p);
  return r;
}

FFElement FieldSpec::element(std::uint64_t index) const {
  if (index >= q_) throw InputError("element index out of range");
  auto r = zero();
  for (std::uint32_t i = 0; i < e_; ++i) {
    r.coeffs[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return r;
}

std::uint64_t FieldSpec::index(const FFElement& a) const {
  check(a);
  std::uint64_t idx = 0;
  for (std::size_t i = e_; i-- > 0;) idx = idx * p_ + a.coeffs[i];
  return idx;
}

bool FieldSpec::is_zero(const FFElement& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

bool FieldSpec::in_prime_field(const FFElement& a) const {
  return std::all_of(a.coeffs.begin() + 1, a.coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

FFElement FieldSpec::add(const FFElement& a, const FFElement& b) const {
  check(a);
  check(b);
  FFElement r = a;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const std::uint32_t s = r.coeffs[i] + b.coeffs[i];
    r.coeffs[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FFElement FieldSpec::neg(const FFElement& a) const {
  check(a);
  FFElement r = a;
  for (auto& c : r.coeffs) c = c == 0 ? 0 : p_ - c;
  return r;
}

FFElement FieldSpec::sub(const FFElement& a, const FFElement& b) const { return add(a, neg(b)); }

FFElement FieldSpec::mul(const FFElement& a, const FFElement& b) const {
  check(a);
  check(b);
  if (e_ == 1) {
    FFElement r = a;
    r.coeffs[0] = static_cast<std::uint32_t>(std::uint64_t{a.coeffs[0]} * b.coeffs[0] % p_);
    return r;
  }
  boost::container::static_vector<std::uint64_t, 2 * kMaxDegree> prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::uint32_t j = 0; j < e_; ++j)
      prod[i + j] = (prod[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % p_;
  }
  // Reduce with s^e = -(m_0 + ... + m_{e-1} s^{e-1}).
  for (std::size_t k = prod.size(); k-- > e_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    const std::size_t shift = k - e_;
    for (std::uint32_t i = 0; i < e_; ++i)
      prod[shift + i] = (prod[shift + i] + (p_ - modulus_[i]) % p_ * c) % p_;
  }
  FFElement r = zero();
  for (std::uint32_t i = 0; i < e_; ++i) r.coeffs[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

FFElement FieldSpec::pow(const FFElement& a, std::uint64_t exponent) const {
  check(a);
  FFElement result = one();
  FFElement base = a;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

FFElement FieldSpec::inv(const FFElement& a) const {
  if (is_zero(a)) throw InputError("division by zero in F_" + std::to_string(q_));
  return pow(a, q_ - 2);
}

FFElement FieldSpec::div(const FFElement& a, const FFElement& b) const { return mul(a, inv(b)); }

std::vector<FFElement> FieldSpec::enumerate() const {
  std::vector<FFElement> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(element(i));
  return out;
}

std::string FieldSpec::format(const FFElement& a) const {
  check(a);
  std::string out;
  for (std::size_t i = e_; i-- > 0;) {
    const auto c = a.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += 't';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FieldSpec make_field(std::uint32_t p, std::uint32_t e, std::uint64_t budget) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw InputError("extension degree must be at least 1");
  if (e > kMaxDegree) throw BudgetExceeded("extension degree exceeds supported maximum");
  const std::uint64_t q = checked_power(p, e, budget);
  if (e == 1) return prime_field(p);
  const FieldSpec fp = prime_field(p);
  // Candidates x^e + c_{e-1} x^{e-1} + ... + c_0 in base-p counting order.
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    UPoly<FieldSpec> f;
    std::uint64_t rest = idx;
    for (std::uint32_t i = 0; i < e; ++i) {
      f.push_back(fp.from_integer(static_cast<std::int64_t>(rest % p)));
      rest /= p;
    }
    if (fp.is_zero(f[0])) continue;
    f.push_back(fp.one());
    if (!is_irreducible(fp, p, f)) continue;
    std::vector<std::uint32_t> modulus;
    for (const auto& c : f) modulus.push_back(c.coeffs[0]);
    return FieldSpec(p, std::move(modulus));
  }
  throw InternalError("no irreducible polynomial found");
}

FFElement ff_arith(const FieldSpec& spec, const FFElement& a, const FFElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return spec.add(a, b);
    case FieldOp::sub: return spec.sub(a, b);
    case FieldOp::mul: return spec.mul(a, b);
    case FieldOp::div: return spec.div(a, b);
  }
  throw InternalError("unknown field operation");
}

std::vector<FFElement> enumerate_field(const FieldSpec& spec) { return spec.enumerate(); }

// ---------------------------------------------------------------------------
// TowerSpec

TowerSpec::TowerSpec(FieldSpec base, std::vector<FFElement> ext_modulus)
    : base_(std::move(base)), n_(0), order_(1), ext_modulus_(std::move(ext_modulus)) {
  if (ext_modulus_.size() < 2) throw InputError("tower modulus must have degree at least 1");
  for (const auto& c : ext_modulus_)
    if (!base_.contains(c)) throw InputError("tower modulus coefficient not in base field");
  if (ext_modulus_.back() != base_.one()) throw InputError("tower modulus must be monic");
  n_ = static_cast<std::uint32_t>(ext_modulus_.size() - 1);
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (order_ > std::numeric_limits<std::uint64_t>::max() / base_.q()) throw InputError("tower too large");
    order_ *= base_.q();
  }
  if (!is_irreducible(base_, base_.q(), ext_modulus_))
    throw InputError("tower modulus is not irreducible over the base field");
  for (std::uint32_t i = 0; i < n_; ++i) {
    TowerElement b = zero();
    b.coeffs[i] = base_.one();
    basis_.push_back(std::move(b));
  }
}

void TowerSpec::check(const TowerElement& a) const {
  if (!contains(a)) throw InputError("element does not belong to the tower field");
}

bool TowerSpec::contains(const TowerElement& a) const {
  if (a.coeffs.size() != n_) return false;
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](const FFElement& c) { return base_.contains(c); });
}

TowerElement TowerSpec::zero() const { return TowerElement{std::vector<FFElement>(n_, base_.zero())}; }

TowerElement TowerSpec::one() const { return embed(base_.one()); }

TowerElement TowerSpec::embed(const FFElement& a) const {
  if (!base_.contains(a)) throw InputError("element does not belong to the base field");
  TowerElement r = zero();
  r.coeffs[0] = a;
  return r;
}

TowerElement TowerSpec::element(std::uint64_t index) const {
  if (index >= order_) throw InputError("tower element index out of range");
  TowerElement r = zero();
  for (std::uint32_t i = 0; i < n_; ++i) {
    r.coeffs[i] = base_.element(index % base_.q());
    index /= base_.q();
  }
  return r;
}

std::uint64_t TowerSpec::index(const TowerElement& a) const {
  check(a);
  std::uint64_t idx = 0;
  for (std::size_t i = n_; i-- > 0;) idx = idx * base_.q() + base_.index(a.coeffs[i]);
  return idx;
}

bool TowerSpec::is_zero(const TowerElement& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](const FFElement& c) { return base_.is_zero(c); });
}

TowerElement TowerSpec::add(const TowerElement& a, const TowerElement& b) const {
  check(a);
  check(b);
  TowerElement r = a;
  for (std::uint32_t i = 0; i < n_; ++i) r.coeffs[i] = base_.add(r.coeffs[i], b.coeffs[i]);
  return r;
}

TowerElement TowerSpec::neg(const TowerElement& a) const {
  check(a);
  TowerElement r = a;
  for (auto& c : r.coeffs) c = base_.neg(c);
  return r;
}

TowerElement TowerSpec::sub(const TowerElement& a, const TowerElement& b) const { return add(a, neg(b)); }

TowerElement TowerSpec::mul(const TowerElement& a, const TowerElement& b) const {
  check(a);
  check(b);
  std::vector<FFElement> prod(2 * n_ - 1, base_.zero());
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t j = 0; j < n_; ++j)
      prod[i + j] = base_.add(prod[i + j], base_.mul(a.coeffs[i], b.coeffs[j]));
  for (std::size_t k = prod.size(); k-- > n_;) {
    const FFElement c = prod[k];
    if (base_.is_zero(c)) continue;
    prod[k] = base_.zero();
    const std::size_t shift = k - n_;
    for (std::uint32_t i = 0; i < n_; ++i)
      prod[shift + i] = base_.sub(prod[shift + i], base_.mul(c, ext_modulus_[i]));
  }
  prod.resize(n_);
  return TowerElement{std::move(prod)};
}

TowerElement TowerSpec::pow(const TowerElement& a, std::uint64_t exponent) const {
  TowerElement result = one();
  TowerElement base = a;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

std::string TowerSpec::format(const TowerElement& a) const {
  check(a);
  std::string out = "[";
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (i > 0) out += ", ";
    out += base_.format(a.coeffs[i]);
  }
  return out + "]";
}

TowerSpec make_tower(const FieldSpec& base, std::uint32_t n, std::uint64_t budget) {
  if (n < 1) throw InputError("tower degree must be at least 1");
  const std::uint64_t q = base.q();
  const std::uint64_t candidates = checked_power(q, n, budget);
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    std::vector<FFElement> f;
    std::uint64_t rest = idx;
    for (std::uint32_t i = 0; i < n; ++i) {
      f.push_back(base.element(rest % q));
      rest /= q;
    }
    if (n > 1 && base.is_zero(f[0])) continue;
    f.push_back(base.one());
    if (!is_irreducible(base, q, f)) continue;
    return TowerSpec(base, std::move(f));
  }
  throw InternalError("no irreducible tower modulus found");
}

}  // namespace vsbound
