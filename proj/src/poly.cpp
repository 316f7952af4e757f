#include "vsbound/poly.hpp"

#include <cctype>
#include <limits>

namespace vsbound {

std::optional<std::uint64_t> total_degree(const PolyVector& f) {
  std::optional<std::uint64_t> d;
  for (const auto& c : f.components) {
    const auto dc = total_degree(c);
    if (dc && (!d || *dc > *d)) d = dc;
  }
  return d;
}

std::set<Monomial> support(const PolyVector& f) {
  std::set<Monomial> out;
  for (const auto& c : f.components)
    for (const auto& [mono, coeff] : c.terms()) out.insert(mono);
  return out;
}

TowerPoly construct_g(const PolyVector& f, const TowerSpec& tower) {
  if (f.m() != tower.n()) throw InputError("map has " + std::to_string(f.m()) +
                                           " components but tower degree is " +
                                           std::to_string(tower.n()));
  TowerPoly g(f.n);
  for (std::size_t i = 0; i < f.m(); ++i) {
    if (f.components[i].n() != f.n) throw InputError("component arity mismatch");
    for (const auto& [mono, c] : f.components[i].terms())
      g.add_term(tower, mono, tower.mul(tower.embed(c), tower.basis()[i]));
  }
  return g;
}

std::vector<std::string> default_varnames(std::size_t n) {
  if (n == 1) return {"x"};
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const FieldSpec& spec, const std::vector<std::string>& varnames,
         std::size_t offset = 0)
      : text_(text), spec_(spec), varnames_(varnames), offset_(offset) {}

  Poly parse_poly() {
    Poly f(varnames_.size());
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        advance();
      } else if (!first) {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      first = false;
      auto [mono, coeff] = parse_term();
      f.add_term(spec_, mono, negative ? spec_.neg(coeff) : coeff);
      skip_ws();
    }
    return f;
  }

  FFElement parse_literal() {
    skip_ws();
    if (at_end()) fail("empty field literal");
    FFElement value = spec_.zero();
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        advance();
      } else if (!first) {
        fail(std::string("unexpected character '") + peek() + "' in field literal");
      }
      first = false;
      skip_ws();
      FFElement term = spec_.one();
      bool has_part = false;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        term = parse_integer();
        has_part = true;
        skip_ws();
        if (!at_end() && peek() == '*') {
          advance();
          skip_ws();
          term = spec_.mul(term, parse_generator_power());
        }
      } else if (!at_end() && peek() == 't') {
        term = parse_generator_power();
        has_part = true;
      }
      if (!has_part) fail("expected integer or 't' in field literal");
      value = spec_.add(value, negative ? spec_.neg(term) : term);
      skip_ws();
    }
    return value;
  }

 private:
  std::pair<Monomial, FFElement> parse_term() {
    skip_ws();
    Monomial mono{std::vector<std::uint32_t>(varnames_.size(), 0)};
    FFElement coeff = spec_.one();
    if (at_end()) fail("expected term");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
      coeff = c == '(' ? parse_parenthesized_literal() : parse_integer();
      skip_ws();
      if (at_end() || peek() != '*') return {mono, coeff};
      advance();
    }
    parse_factor(mono);
    skip_ws();
    while (!at_end() && peek() == '*') {
      advance();
      parse_factor(mono);
      skip_ws();
    }
    return {mono, coeff};
  }

  void parse_factor(Monomial& mono) {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected variable");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) advance();
    const std::string name(text_.substr(start, pos_ - start));
    std::size_t var = varnames_.size();
    for (std::size_t i = 0; i < varnames_.size(); ++i)
      if (varnames_[i] == name) var = i;
    if (var == varnames_.size()) fail_at("unknown variable '" + name + "'", start);
    std::uint64_t exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      advance();
      skip_ws();
      exponent = parse_raw_uint();
      if (exponent == 0) fail("exponent must be positive");
    }
    const std::uint64_t total = mono.exponents[var] + exponent;
    if (total > std::numeric_limits<std::int32_t>::max()) fail("exponent too large");
    mono.exponents[var] = static_cast<std::uint32_t>(total);
  }

  FFElement parse_parenthesized_literal() {
    const std::size_t open = pos_;
    advance();
    const std::size_t close = text_.find(')', pos_);
    if (close == std::string_view::npos) fail_at("unbalanced '('", open);
    Parser inner(text_.substr(pos_, close - pos_), spec_, varnames_, offset_ + pos_);
    FFElement value = inner.parse_literal();
    pos_ = close + 1;
    return value;
  }

  FFElement parse_generator_power() {
    skip_ws();
    if (at_end() || peek() != 't') fail("expected 't'");
    if (spec_.e() == 1) fail("generator 't' is not available in a prime field");
    advance();
    std::uint64_t exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      advance();
      skip_ws();
      exponent = parse_raw_uint();
    }
    return spec_.pow(spec_.generator(), exponent);
  }

  FFElement parse_integer() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::uint64_t residue = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      residue = (residue * 10 + static_cast<std::uint64_t>(peek() - '0')) % spec_.p();
      advance();
    }
    return spec_.from_integer(static_cast<std::int64_t>(residue));
  }

  std::uint64_t parse_raw_uint() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) fail("integer too large");
      advance();
    }
    return value;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t pos) const {
    throw ParseError(message, offset_ + pos);
  }

  std::string_view text_;
  const FieldSpec& spec_;
  const std::vector<std::string>& varnames_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string format_coefficient(const FieldSpec& spec, const FFElement& c) {
  if (spec.in_prime_field(c)) return std::to_string(c.coeffs[0]);
  return "(" + spec.format(c) + ")";
}

template <class Coeff, class Format>
std::string format_poly(const MultiPoly<Coeff>& f, const std::vector<std::string>& varnames,
                        Format&& format_coeff, const Coeff& one) {
  if (f.is_zero()) return "0";
  if (varnames.size() != f.n()) throw InputError("variable name count does not match polynomial");
  std::string out;
  for (const auto& [mono, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string factors;
    for (std::size_t i = 0; i < mono.exponents.size(); ++i) {
      if (mono.exponents[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += varnames[i];
      if (mono.exponents[i] > 1) factors += "^" + std::to_string(mono.exponents[i]);
    }
    if (factors.empty()) {
      out += format_coeff(c);
    } else if (c == one) {
      out += factors;
    } else {
      out += format_coeff(c) + "*" + factors;
    }
  }
  return out;
}

}  // namespace

Poly parse_poly(std::string_view text, const FieldSpec& spec, const std::vector<std::string>& varnames) {
  return Parser(text, spec, varnames).parse_poly();
}

PolyVector parse_poly_vector(std::string_view text, const FieldSpec& spec,
                             const std::vector<std::string>& varnames) {
  PolyVector out;
  out.n = varnames.size();
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = text.find(';', start);
    const std::size_t end = semi == std::string_view::npos ? text.size() : semi;
    out.components.push_back(Parser(text.substr(start, end - start), spec, varnames, start).parse_poly());
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

FFElement parse_field_literal(std::string_view text, const FieldSpec& spec) {
  static const std::vector<std::string> no_vars;
  return Parser(text, spec, no_vars).parse_literal();
}

std::string to_string(const Poly& f, const FieldSpec& spec, const std::vector<std::string>& varnames) {
  return format_poly(
      f, varnames, [&](const FFElement& c) { return format_coefficient(spec, c); }, spec.one());
}

std::string to_string(const PolyVector& f, const FieldSpec& spec, const std::vector<std::string>& varnames) {
  std::string out;
  for (std::size_t i = 0; i < f.m(); ++i) {
    if (i > 0) out += "; ";
    out += to_string(f.components[i], spec, varnames);
  }
  return out;
}

std::string to_string(const TowerPoly& g, const TowerSpec& tower, const std::vector<std::string>& varnames) {
  return format_poly(
      g, varnames, [&](const TowerElement& c) { return tower.format(c); }, tower.one());
}

}  // namespace vsbound
