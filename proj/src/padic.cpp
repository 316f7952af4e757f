#include "vsbound/padic.hpp"

#include "vsbound/error.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace vsbound {

namespace {

std::vector<std::uint32_t> reduce_mod_p(const std::vector<std::uint64_t>& modulus, std::uint32_t p) {
  std::vector<std::uint32_t> out;
  for (auto c : modulus) out.push_back(static_cast<std::uint32_t>(c % p));
  return out;
}

std::uint64_t power_of(std::uint32_t p, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (r > (std::uint64_t{1} << 31) / p) throw BudgetExceeded("p-adic precision too large for 64-bit residues");
    r *= p;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// WittRing

WittRing::WittRing(std::uint32_t p, std::uint32_t precision, std::vector<std::uint64_t> modulus)
    : p_(p),
      precision_(precision),
      degree_(modulus.empty() ? 0 : static_cast<std::uint32_t>(modulus.size() - 1)),
      pN_(0),
      modulus_(std::move(modulus)),
      residue_field_(p, reduce_mod_p(modulus_, p)) {
  if (precision_ < 1) throw InputError("p-adic precision must be at least 1");
  pN_ = power_of(p_, precision_);
  for (auto& c : modulus_) {
    if (c >= pN_) throw InputError("ring modulus coefficient out of range");
  }
  if (modulus_.back() != 1) throw InputError("ring modulus must be monic");
}

void WittRing::check(const WittElement& a) const {
  if (!contains(a)) throw InputError("element does not belong to the p-adic ring");
}

bool WittRing::contains(const WittElement& a) const {
  if (a.coeffs.size() != degree_) return false;
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](std::uint64_t c) { return c < pN_; });
}

WittElement WittRing::zero() const { return WittElement{WittResidues(degree_, 0)}; }

WittElement WittRing::one() const {
  auto r = zero();
  r.coeffs[0] = 1;
  return r;
}

WittElement WittRing::from_integer(std::int64_t value) const {
  auto r = zero();
  const auto m = static_cast<std::int64_t>(pN_);
  r.coeffs[0] = static_cast<std::uint64_t>(((value % m) + m) % m);
  return r;
}

bool WittRing::is_zero(const WittElement& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::uint64_t c) { return c == 0; });
}

WittElement WittRing::add(const WittElement& a, const WittElement& b) const {
  check(a);
  check(b);
  WittElement r = a;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    const std::uint64_t s = r.coeffs[i] + b.coeffs[i];
    r.coeffs[i] = s >= pN_ ? s - pN_ : s;
  }
  return r;
}

WittElement WittRing::neg(const WittElement& a) const {
  check(a);
  WittElement r = a;
  for (auto& c : r.coeffs) c = c == 0 ? 0 : pN_ - c;
  return r;
}

WittElement WittRing::sub(const WittElement& a, const WittElement& b) const { return add(a, neg(b)); }

WittElement WittRing::mul(const WittElement& a, const WittElement& b) const {
  check(a);
  check(b);
  if (degree_ == 1) {
    WittElement r = a;
    r.coeffs[0] = a.coeffs[0] * b.coeffs[0] % pN_;
    return r;
  }
  boost::container::static_vector<std::uint64_t, 2 * kMaxDegree> prod(2 * degree_ - 1, 0);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::uint32_t j = 0; j < degree_; ++j)
      prod[i + j] = (prod[i + j] + a.coeffs[i] * b.coeffs[j]) % pN_;
  }
  for (std::size_t k = prod.size(); k-- > degree_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    const std::size_t shift = k - degree_;
    for (std::uint32_t i = 0; i < degree_; ++i)
      prod[shift + i] = (prod[shift + i] + (pN_ - modulus_[i]) % pN_ * c) % pN_;
  }
  WittElement r = zero();
  for (std::uint32_t i = 0; i < degree_; ++i) r.coeffs[i] = prod[i];
  return r;
}

WittElement WittRing::pow(const WittElement& a, std::uint64_t exponent) const {
  WittElement result = one();
  WittElement base = a;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

WittElement WittRing::lift_digits(const FFElement& a) const {
  if (!residue_field_.contains(a)) throw InputError("element does not belong to the residue field");
  WittElement r = zero();
  for (std::uint32_t i = 0; i < degree_; ++i) r.coeffs[i] = a.coeffs[i];
  return r;
}

FFElement WittRing::reduce(const WittElement& a) const {
  check(a);
  FFElement r = residue_field_.zero();
  for (std::uint32_t i = 0; i < degree_; ++i) r.coeffs[i] = static_cast<std::uint32_t>(a.coeffs[i] % p_);
  return r;
}

WittElement WittRing::truncate(const WittElement& a, const WittRing& lower) const {
  check(a);
  if (lower.p_ != p_ || lower.degree_ != degree_ || lower.precision_ > precision_)
    throw InputError("cannot truncate into an unrelated or finer ring");
  WittElement r = lower.zero();
  for (std::uint32_t i = 0; i < degree_; ++i) r.coeffs[i] = a.coeffs[i] % lower.pN_;
  return r;
}

WittRing lift_ring(const FieldSpec& field, std::uint32_t precision) {
  std::vector<std::uint64_t> modulus(field.modulus().begin(), field.modulus().end());
  return WittRing(field.p(), precision, std::move(modulus));
}

WittElement teichmuller(const FFElement& a, const WittRing& ring) {
  const std::uint64_t Q = ring.residue_field().q();
  WittElement y = ring.lift_digits(a);
  for (std::uint32_t i = 1; i < ring.precision(); ++i) y = ring.pow(y, Q);
  if (!(ring.pow(y, Q) == y)) throw InternalError("Teichmüller lift is not fixed by the Q-th power map");
  return y;
}

// ---------------------------------------------------------------------------
// TowerEmbedding

namespace {

FieldSpec flat_field_for(const TowerSpec& tower, std::uint64_t budget) {
  checked_power(tower.base().q(), tower.n(), budget);
  return make_field(tower.base().p(), tower.base().e() * tower.n(), budget);
}

}  // namespace

TowerEmbedding::TowerEmbedding(const TowerSpec& tower, std::uint64_t budget)
    : tower_(tower), flat_(flat_field_for(tower, budget)) {
  const FieldSpec& base = tower_.base();
  const auto elements = flat_.enumerate();

  // Image of s: a root of the base modulus, read over F_p.
  auto eval_base_modulus = [&](const FFElement& x) {
    FFElement acc = flat_.zero();
    for (std::size_t i = base.modulus().size(); i-- > 0;)
      acc = flat_.add(flat_.mul(acc, x), flat_.from_integer(base.modulus()[i]));
    return acc;
  };
  std::optional<FFElement> s_image;
  if (base.e() == 1) {
    s_image = flat_.from_integer(static_cast<std::int64_t>(base.p() - base.modulus()[0]));
  } else {
    for (const auto& x : elements)
      if (flat_.is_zero(eval_base_modulus(x))) {
        s_image = x;
        break;
      }
  }
  if (!s_image) throw InternalError("base modulus has no root in the flat field");
  for (std::uint32_t i = 0; i < base.e(); ++i) s_powers_.push_back(flat_.pow(*s_image, i));

  auto eval_tower_modulus = [&](const FFElement& x) {
    FFElement acc = flat_.zero();
    const auto& E = tower_.ext_modulus();
    for (std::size_t j = E.size(); j-- > 0;) acc = flat_.add(flat_.mul(acc, x), embed_base(E[j]));
    return acc;
  };
  std::optional<FFElement> t_image;
  for (const auto& x : elements)
    if (flat_.is_zero(eval_tower_modulus(x))) {
      t_image = x;
      break;
    }
  if (!t_image) throw InternalError("tower modulus has no root in the flat field");
  for (std::uint32_t j = 0; j < tower_.n(); ++j) t_powers_.push_back(flat_.pow(*t_image, j));
}

FFElement TowerEmbedding::embed_base(const FFElement& a) const {
  if (!tower_.base().contains(a)) throw InputError("element does not belong to the base field");
  FFElement acc = flat_.zero();
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (a.coeffs[i] != 0) acc = flat_.add(acc, flat_.mul(flat_.from_integer(a.coeffs[i]), s_powers_[i]));
  return acc;
}

FFElement TowerEmbedding::embed(const TowerElement& a) const {
  if (!tower_.contains(a)) throw InputError("element does not belong to the tower field");
  FFElement acc = flat_.zero();
  for (std::size_t j = 0; j < a.coeffs.size(); ++j)
    acc = flat_.add(acc, flat_.mul(embed_base(a.coeffs[j]), t_powers_[j]));
  return acc;
}

WittRing lift_ring(const TowerSpec& tower, std::uint32_t precision) {
  return lift_ring(flat_field_for(tower, kDefaultDomainBudget), precision);
}

// ---------------------------------------------------------------------------
// TeichmullerFrame

TeichmullerFrame::TeichmullerFrame(const TowerSpec& tower, std::uint64_t budget) : embedding_(tower, budget) {
  const std::uint64_t p = tower.base().p();
  const std::uint64_t top = tower.order() - 1;
  std::uint32_t max_valuation = 0;
  for (std::uint64_t pw = p; pw <= top; pw *= p) ++max_valuation;
  for (std::uint32_t N = 1; N <= max_valuation + 1; ++N) levels_.push_back(build_level(N));
}

TeichmullerFrame::Level TeichmullerFrame::build_level(std::uint32_t precision) const {
  Level level{lift_ring(embedding_.flat(), precision), {}};
  for (const auto& x : tower().base().enumerate())
    level.base_lifts.push_back(teichmuller(embedding_.embed_base(x), level.ring));
  return level;
}

const TeichmullerFrame::Level& TeichmullerFrame::level(std::uint32_t precision) const {
  if (precision < 1 || precision > levels_.size())
    throw InputError("precision " + std::to_string(precision) + " is not cached by this frame");
  return levels_[precision - 1];
}

WittElement TeichmullerFrame::lift_coefficient(const TowerElement& c, const WittRing& ring) const {
  return teichmuller(embedding_.embed(c), ring);
}

// ---------------------------------------------------------------------------
// Power sums

namespace {

// g̃ with Teichmüller-lifted coefficients, evaluated on L_q^n. Exponents are
// reduced with ω^q = ω, which holds exactly for Teichmüller points.
class LiftedPolynomial {
 public:
  LiftedPolynomial(const TowerPoly& g, const TeichmullerFrame& frame, const TeichmullerFrame::Level& level)
      : level_(level), n_(g.n()), q_(frame.tower().base().q()) {
    const WittRing& ring = level_.ring;
    std::map<std::uint64_t, std::size_t> column_of;
    for (const auto& [mono, c] : g.terms()) {
      Term term{frame.lift_coefficient(c, ring), {}};
      for (auto v : mono.exponents) {
        const std::uint64_t reduced = v == 0 ? 0 : (v - 1) % (q_ - 1) + 1;
        auto [it, inserted] = column_of.emplace(reduced, column_of.size());
        if (inserted) exponents_.push_back(reduced);
        term.columns.push_back(it->second);
      }
      terms_.push_back(std::move(term));
    }
    powers_.resize(q_);
    for (std::uint64_t x = 0; x < q_; ++x)
      for (auto e : exponents_) powers_[x].push_back(ring.pow(level_.base_lifts[x], e));
  }

  // Calls visit(value) for every point of F_q^n in base-q counting order
  // (x_1 least significant).
  template <class Visit>
  void for_each_value(Visit&& visit) const {
    const WittRing& ring = level_.ring;
    std::vector<std::uint64_t> idx(n_, 0);
    while (true) {
      WittElement value = ring.zero();
      for (const auto& term : terms_) {
        WittElement t = term.coeff;
        for (std::size_t i = 0; i < n_; ++i) t = ring.mul(t, powers_[idx[i]][term.columns[i]]);
        value = ring.add(value, t);
      }
      visit(value);
      std::size_t i = 0;
      while (i < n_ && ++idx[i] == q_) idx[i++] = 0;
      if (i == n_) return;
    }
  }

 private:
  struct Term {
    WittElement coeff;
    std::vector<std::size_t> columns;
  };

  const TeichmullerFrame::Level& level_;
  std::size_t n_;
  std::uint64_t q_;
  std::vector<Term> terms_;
  std::vector<std::uint64_t> exponents_;
  std::vector<std::vector<WittElement>> powers_;
};

std::uint32_t precision_for(std::uint64_t p, std::uint64_t k) { return 1 + p_valuation(p, k); }

}  // namespace

WittElement teichmuller_power_sum(const TowerPoly& g, std::uint64_t k, std::uint32_t precision,
                                  const TeichmullerFrame& frame, const PowerSumOptions& options) {
  const TowerSpec& tower = frame.tower();
  if (g.n() == 0) throw InputError("power sum needs at least one variable");
  checked_power(tower.base().q(), g.n(), options.max_points);
  std::optional<TeichmullerFrame::Level> temporary;
  const TeichmullerFrame::Level& level =
      precision <= frame.max_precision() ? frame.level(precision) : temporary.emplace(frame.build_level(precision));
  const LiftedPolynomial lifted(g, frame, level);
  WittElement sum = level.ring.zero();
  lifted.for_each_value([&](const WittElement& v) { sum = level.ring.add(sum, level.ring.pow(v, k)); });
  return sum;
}

WittElement power_sum(const TowerPoly& g, std::uint64_t k, const TeichmullerFrame& frame,
                      const PowerSumOptions& options) {
  if (k < 1) throw InputError("power sum exponent must be positive");
  return teichmuller_power_sum(g, k, precision_for(frame.tower().base().p(), k), frame, options);
}

WittElement power_sum(const TowerPoly& g, std::uint64_t k, const TowerSpec& tower,
                      const PowerSumOptions& options) {
  checked_power(tower.base().q(), g.n(), options.max_points);
  return power_sum(g, k, TeichmullerFrame(tower, options.max_points), options);
}

UResult compute_U(const PolyVector& f, const TeichmullerFrame& frame, const UOptions& options) {
  const TowerSpec& tower = frame.tower();
  if (tower.order() > options.max_domain)
    throw BudgetExceeded("U scan over q^n = " + std::to_string(tower.order()) + " points exceeds budget " +
                         std::to_string(options.max_domain));
  if (f.n != tower.n()) throw InputError("map arity does not match tower degree");
  const TowerPoly g = construct_g(f, tower);
  const bool constant = std::all_of(g.terms().begin(), g.terms().end(),
                                    [](const auto& t) { return t.first.degree() == 0; });
  if (constant) throw InputError("U is undefined for a constant map");
  // A map that is constant as a function (x^q = x identities) has S_k ≡ 0
  // for every k < q^n.
  {
    std::vector<WittElement> residues;
    LiftedPolynomial(g, frame, frame.level(1)).for_each_value([&](const WittElement& v) { residues.push_back(v); });
    if (std::all_of(residues.begin(), residues.end(), [&](const WittElement& v) { return v == residues.front(); }))
      throw InputError("U is undefined for a map that is constant on F_q^n");
  }

  const std::uint64_t p = tower.base().p();
  const std::uint64_t last = options.max_k == 0 ? tower.order() - 1 : std::min(options.max_k, tower.order() - 1);

  // g̃ values on L_q^n, one table per precision.
  std::map<std::uint32_t, std::vector<WittElement>> values;
  for (std::uint64_t k = 1; k <= last; ++k) {
    const std::uint32_t N = precision_for(p, k);
    const auto& level = frame.level(N);
    auto it = values.find(N);
    if (it == values.end()) {
      std::vector<WittElement> table;
      table.reserve(tower.order());
      LiftedPolynomial(g, frame, level).for_each_value([&](const WittElement& v) { table.push_back(v); });
      it = values.emplace(N, std::move(table)).first;
    }
    WittElement sum = level.ring.zero();
    for (const auto& v : it->second) sum = level.ring.add(sum, level.ring.pow(v, k));
    const bool nonzero = !level.ring.is_zero(sum);
    if (options.trace) options.trace(UTraceRecord{k, N, sum, nonzero});
    if (nonzero) return UResult{k, k, N, sum};
  }
  if (options.max_k != 0 && options.max_k < tower.order() - 1)
    throw BudgetExceeded("U scan reached the configured cap k = " + std::to_string(options.max_k));
  throw InternalError("U scan exhausted k < q^n without a nonvanishing power sum");
}

UResult compute_U(const PolyVector& f, const TowerSpec& tower, const UOptions& options) {
  if (tower.order() > options.max_domain)
    throw BudgetExceeded("U scan over q^n = " + std::to_string(tower.order()) + " points exceeds budget " +
                         std::to_string(options.max_domain));
  return compute_U(f, TeichmullerFrame(tower), options);
}

std::uint64_t charsum_oracle(std::uint64_t q, std::uint64_t k) {
  if (q < 2) throw InputError("field order must be at least 2");
  if (k == 0) return q;
  return k % (q - 1) == 0 ? q - 1 : 0;
}

}  // namespace vsbound

// ---------------------------------------------------------------------------
// Tabulated univariate scan

namespace vsbound {

namespace {

std::uint32_t element_index(const WittElement& a, std::uint64_t pN) {
  std::uint64_t idx = 0;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) idx = idx * pN + a.coeffs[i];
  return static_cast<std::uint32_t>(idx);
}

WittElement element_at(std::uint64_t idx, const WittRing& ring) {
  WittElement a = ring.zero();
  for (auto& c : a.coeffs) {
    c = idx % ring.characteristic();
    idx /= ring.characteristic();
  }
  return a;
}

}  // namespace

UnivariateUScanner::UnivariateUScanner(const FieldSpec& field, std::uint64_t max_ring_size)
    : field_(field), q_(static_cast<std::uint32_t>(field.q())) {
  if (q_ < 2) throw InputError("field too small");
  std::uint32_t max_precision = 1;
  level_.assign(q_, 0);
  for (std::uint32_t k = 1; k < q_; ++k) {
    level_[k] = p_valuation(field.p(), k);
    max_precision = std::max(max_precision, level_[k] + 1);
  }
  for (std::uint32_t N = 1; N <= max_precision; ++N) {
    const std::uint64_t size = checked_power(q_, N, std::min<std::uint64_t>(max_ring_size, 65535));
    const WittRing ring = lift_ring(field, N);
    Table t{N, static_cast<std::uint32_t>(size), {}, {}, {}, {}, {}, {}};
    std::vector<WittElement> elems;
    elems.reserve(size);
    for (std::uint64_t i = 0; i < size; ++i) elems.push_back(element_at(i, ring));
    const std::uint64_t pN = ring.characteristic();
    t.add.resize(size * size);
    t.mul.resize(size * size);
    t.neg.resize(size);
    t.pow.resize(size * q_);
    for (std::uint64_t a = 0; a < size; ++a) {
      t.neg[a] = static_cast<std::uint16_t>(element_index(ring.neg(elems[a]), pN));
      for (std::uint64_t b = 0; b < size; ++b) {
        t.add[a * size + b] = static_cast<std::uint16_t>(element_index(ring.add(elems[a], elems[b]), pN));
        t.mul[a * size + b] = static_cast<std::uint16_t>(element_index(ring.mul(elems[a], elems[b]), pN));
      }
    }
    for (std::uint64_t a = 0; a < size; ++a) {
      std::uint16_t acc = static_cast<std::uint16_t>(element_index(ring.one(), pN));
      for (std::uint32_t k = 0; k < q_; ++k) {
        t.pow[a * q_ + k] = acc;
        acc = t.mul[acc * size + a];
      }
    }
    t.lift.resize(q_);
    t.teich_pow.resize(std::size_t{q_} * q_);
    for (std::uint32_t x = 0; x < q_; ++x) {
      t.lift[x] = static_cast<std::uint16_t>(element_index(teichmuller(field.element(x), ring), pN));
      for (std::uint32_t j = 0; j < q_; ++j) t.teich_pow[x * q_ + j] = t.pow[t.lift[x] * q_ + j];
    }
    tables_.push_back(std::move(t));
  }
}

std::uint32_t UnivariateUScanner::reduce_exponent(std::uint64_t j) const {
  return j == 0 ? 0 : static_cast<std::uint32_t>((j - 1) % (q_ - 1) + 1);
}

std::uint16_t UnivariateUScanner::term(const Table& t, std::uint32_t c, std::uint32_t j, std::uint32_t x) const {
  return t.mul[t.lift[c] * t.size + t.teich_pow[x * q_ + j]];
}

std::uint64_t UnivariateUScanner::scan(const std::vector<std::vector<std::uint16_t>>& values) const {
  for (std::uint32_t k = 1; k < q_; ++k) {
    const Table& t = tables_[level_[k]];
    const auto& v = values[level_[k]];
    std::uint32_t sum = 0;
    for (std::uint32_t x = 0; x < q_; ++x) sum = t.add[sum * t.size + t.pow[v[x] * q_ + k]];
    if (sum != 0) return k;
  }
  throw InternalError("univariate U scan exhausted k < q without a nonvanishing power sum");
}

std::uint64_t UnivariateUScanner::U(std::span<const std::uint32_t> coeffs) const {
  bool constant = true;
  for (std::size_t j = 1; j < coeffs.size(); ++j) constant = constant && coeffs[j] == 0;
  if (constant) throw InputError("U is undefined for a constant polynomial");
  std::vector<std::vector<std::uint16_t>> values(tables_.size(), std::vector<std::uint16_t>(q_, 0));
  for (std::size_t l = 0; l < tables_.size(); ++l)
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] >= q_) throw InputError("coefficient index out of range");
      if (coeffs[j] == 0) continue;
      for (std::uint32_t x = 0; x < q_; ++x) {
        const Table& t = tables_[l];
        values[l][x] = t.add[values[l][x] * t.size + term(t, coeffs[j], reduce_exponent(j), x)];
      }
    }
  return scan(values);
}

void UnivariateUScanner::for_each_monic(
    std::uint32_t d, const std::function<void(std::span<const std::uint32_t>, std::uint64_t)>& visit) const {
  if (d < 1) throw InputError("degree must be at least 1");
  std::vector<std::uint32_t> coeffs(d + 1, 0);
  coeffs[d] = 1;
  const std::uint32_t lead = reduce_exponent(d);
  std::vector<std::vector<std::uint16_t>> values(tables_.size(), std::vector<std::uint16_t>(q_, 0));
  for (std::size_t l = 0; l < tables_.size(); ++l)
    for (std::uint32_t x = 0; x < q_; ++x) values[l][x] = term(tables_[l], 1, lead, x);

  while (true) {
    visit(coeffs, scan(values));
    std::uint32_t j = 0;
    for (; j < d; ++j) {
      const std::uint32_t old = coeffs[j];
      const std::uint32_t now = old + 1 == q_ ? 0 : old + 1;
      coeffs[j] = now;
      const std::uint32_t e = reduce_exponent(j);
      for (std::size_t l = 0; l < tables_.size(); ++l) {
        const Table& t = tables_[l];
        for (std::uint32_t x = 0; x < q_; ++x) {
          std::uint32_t v = values[l][x];
          if (old != 0) v = t.add[v * t.size + t.neg[term(t, old, e, x)]];
          if (now != 0) v = t.add[v * t.size + term(t, now, e, x)];
          values[l][x] = static_cast<std::uint16_t>(v);
        }
      }
      if (now != 0) break;
    }
    if (j == d) return;
  }
}

}  // namespace vsbound
