/*
Copyright 2026 The jacsyz Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "poly.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "errors.hpp"

namespace jacsyz {

Monomial operator*(const Monomial& lhs, const Monomial& rhs) noexcept {
  return {lhs.a + rhs.a, lhs.b + rhs.b, lhs.c + rhs.c};
}

bool grevlex_greater(const Monomial& lhs, const Monomial& rhs) noexcept {
  if (lhs.degree() != rhs.degree()) return lhs.degree() > rhs.degree();
  if (lhs.c != rhs.c) return lhs.c < rhs.c;
  return lhs.b < rhs.b;
}

std::size_t basis_size(int k) noexcept {
  if (k < 0) return 0;
  const auto n = static_cast<std::size_t>(k);
  return (n + 1) * (n + 2) / 2;
}

std::size_t basis_index(const Monomial& m) noexcept {
  const auto k = static_cast<std::size_t>(m.degree());
  const auto c = static_cast<std::size_t>(m.c);
  // monomials with smaller z-exponent come first, then ascending y-exponent
  return c * (k + 1) - c * (c - 1) / 2 + static_cast<std::size_t>(m.b);
}

std::vector<Monomial> monomial_basis(int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  out.reserve(basis_size(k));
  for (int c = 0; c <= k; ++c)
    for (int b = 0; b <= k - c; ++b) out.push_back({k - b - c, b, c});
  return out;
}

HomPoly::HomPoly(int degree) : degree_(degree) {}

HomPoly::HomPoly(int degree, TermMap terms) : degree_(degree) {
  for (auto& [m, coeff] : terms) add_term(m, coeff);
}

HomPoly HomPoly::constant(const Rat& value) {
  HomPoly p(0);
  p.add_term({}, value);
  return p;
}

HomPoly HomPoly::variable(int var) {
  HomPoly p(1);
  Monomial m;
  if (var == 0) m.a = 1;
  else if (var == 1) m.b = 1;
  else m.c = 1;
  p.add_term(m, 1);
  return p;
}

HomPoly HomPoly::term(const Monomial& m, const Rat& coefficient) {
  HomPoly p(m.degree());
  p.add_term(m, coefficient);
  return p;
}

Rat HomPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void HomPoly::add_term(const Monomial& m, const Rat& coefficient) {
  if (m.degree() != degree_)
    throw Error(ErrorCode::DegreeMismatch, "term of degree " + std::to_string(m.degree()) +
                                               " added to polynomial of degree " +
                                               std::to_string(degree_));
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool HomPoly::invariant_holds() const {
  for (const auto& [m, coeff] : terms_) {
    if (m.degree() != degree_ || sgn(coeff) == 0) return false;
    if (m.a < 0 || m.b < 0 || m.c < 0) return false;
  }
  return true;
}

HomPoly& HomPoly::operator+=(const HomPoly& rhs) {
  if (rhs.degree_ != degree_)
    throw Error(ErrorCode::DegreeMismatch, "cannot add polynomials of degree " +
                                               std::to_string(degree_) + " and " +
                                               std::to_string(rhs.degree_));
  for (const auto& [m, coeff] : rhs.terms_) add_term(m, coeff);
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& rhs) {
  if (rhs.degree_ != degree_)
    throw Error(ErrorCode::DegreeMismatch, "cannot subtract polynomials of degree " +
                                               std::to_string(degree_) + " and " +
                                               std::to_string(rhs.degree_));
  for (const auto& [m, coeff] : rhs.terms_) add_term(m, -coeff);
  return *this;
}

HomPoly& HomPoly::operator*=(const Rat& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= scalar;
  return *this;
}

HomPoly operator+(HomPoly lhs, const HomPoly& rhs) { return lhs += rhs; }
HomPoly operator-(HomPoly lhs, const HomPoly& rhs) { return lhs -= rhs; }
HomPoly operator-(HomPoly p) { return p *= Rat(-1); }

HomPoly operator*(const HomPoly& lhs, const HomPoly& rhs) {
  HomPoly out(lhs.degree() + rhs.degree());
  for (const auto& [ml, cl] : lhs.terms())
    for (const auto& [mr, cr] : rhs.terms()) out.add_term(ml * mr, cl * cr);
  return out;
}

HomPoly scale(HomPoly p, const Rat& scalar) { return p *= scalar; }

HomPoly power(const HomPoly& p, unsigned n) {
  HomPoly result = HomPoly::constant(1);
  HomPoly base = p;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

HomPoly shift(const HomPoly& p, const Monomial& m) {
  HomPoly out(p.degree() + m.degree());
  for (const auto& [mp, coeff] : p.terms()) out.add_term(mp * m, coeff);
  return out;
}

HomPoly derivative(const HomPoly& p, int var) {
  HomPoly out(p.degree() > 0 ? p.degree() - 1 : 0);
  for (const auto& [m, coeff] : p.terms()) {
    const int e = m.exponent(var);
    if (e == 0) continue;
    Monomial dm = m;
    if (var == 0) --dm.a;
    else if (var == 1) --dm.b;
    else --dm.c;
    out.add_term(dm, coeff * e);
  }
  return out;
}

std::array<HomPoly, 3> partials(const HomPoly& f) {
  return {derivative(f, 0), derivative(f, 1), derivative(f, 2)};
}

Rat evaluate(const HomPoly& p, const std::array<Rat, 3>& point) {
  Rat total = 0;
  for (const auto& [m, coeff] : p.terms()) {
    Rat t = coeff;
    for (int v = 0; v < 3; ++v)
      for (int e = 0; e < m.exponent(v); ++e) t *= point[static_cast<std::size_t>(v)];
    total += t;
  }
  return total;
}

namespace {

void append_monomial(std::string& out, const Monomial& m) {
  static constexpr char kVars[3] = {'x', 'y', 'z'};
  bool first = true;
  for (int v = 0; v < 3; ++v) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    if (!first) out += '*';
    first = false;
    out += kVars[v];
    if (e > 1) out += '^' + std::to_string(e);
  }
}

}  // namespace

std::string to_string(const HomPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, coeff] : p.terms()) {
    Rat mag = abs(coeff);
    if (sgn(coeff) < 0) out += '-';
    else if (!first) out += '+';
    first = false;
    const bool unit = (mag == 1);
    if (!unit || m.degree() == 0) {
      out += mag.get_str();
      if (m.degree() > 0) out += '*';
    }
    append_monomial(out, m);
  }
  return out;
}

std::uint64_t canonical_hash(const HomPoly& p) {
  HomPoly monic = p;
  if (!p.is_zero()) monic *= Rat(1) / p.terms().begin()->second;
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : to_string(monic)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

using SparsePoly = std::map<Monomial, Rat, GrevlexDescending>;

void accumulate(SparsePoly& acc, const Monomial& m, const Rat& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = acc.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

SparsePoly sparse_mul(const SparsePoly& lhs, const SparsePoly& rhs) {
  SparsePoly out;
  for (const auto& [ml, cl] : lhs)
    for (const auto& [mr, cr] : rhs) accumulate(out, ml * mr, cl * cr);
  return out;
}

SparsePoly sparse_pow(const SparsePoly& p, long n) {
  SparsePoly result{{Monomial{}, Rat(1)}};
  SparsePoly base = p;
  while (n > 0) {
    if (n & 1) result = sparse_mul(result, base);
    n >>= 1;
    if (n > 0) base = sparse_mul(base, base);
  }
  return result;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SparsePoly parse_all() {
    SparsePoly p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  /// Top-level product: each factor separately. Falls back to one factor.
  std::vector<std::pair<SparsePoly, long>> factors_all() {
    const std::size_t start = pos_;
    std::vector<std::pair<SparsePoly, long>> out;
    const char lead = peek();
    if (lead == '-' || lead == '+') ++pos_;
    term_factors(out);
    skip_ws();
    if (pos_ < text_.size()) {
      pos_ = start;
      out.clear();
      out.emplace_back(parse_all(), 1);
    }
    return out;
  }

 private:
  enum class Kind { Number, Variable, Group };

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool is_var(char ch) { return ch == 'x' || ch == 'y' || ch == 'z'; }
  static bool is_digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

  SparsePoly expr() {
    SparsePoly acc;
    char ch = peek();
    Rat sign = 1;
    if (ch == '+' || ch == '-') {
      if (ch == '-') sign = -1;
      ++pos_;
    }
    add_scaled(acc, term(), sign);
    for (;;) {
      ch = peek();
      if (ch != '+' && ch != '-') break;
      ++pos_;
      add_scaled(acc, term(), ch == '-' ? Rat(-1) : Rat(1));
    }
    return acc;
  }

  static void add_scaled(SparsePoly& acc, const SparsePoly& p, const Rat& s) {
    for (const auto& [m, coeff] : p) accumulate(acc, m, coeff * s);
  }

  SparsePoly term() {
    Kind kind;
    SparsePoly acc = factor(&kind);
    for (;;) {
      const char ch = peek();
      if (ch == '*') {
        ++pos_;
      } else if (is_digit(ch)) {
        fail("a number cannot follow a factor without '*'");
      } else if (!is_var(ch) && ch != '(') {
        break;
      }
      acc = sparse_mul(acc, factor(&kind));
    }
    return acc;
  }

  void term_factors(std::vector<std::pair<SparsePoly, long>>& out) {
    Kind k;
    long exponent = 1;
    SparsePoly first = factor(&k, &exponent);
    if (k != Kind::Number) out.emplace_back(std::move(first), exponent);
    for (;;) {
      const char ch = peek();
      if (ch == '*') ++pos_;
      else if (!(is_var(ch) || ch == '(')) break;
      exponent = 1;
      SparsePoly next = factor(&k, &exponent);
      if (k != Kind::Number) out.emplace_back(std::move(next), exponent);
    }
  }

  long integer() {
    skip_ws();
    if (!is_digit(peek())) fail("expected an integer");
    long value = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000000L) fail("integer too large");
      ++pos_;
    }
    return value;
  }

  std::string digits() {
    std::string out;
    while (pos_ < text_.size() && is_digit(text_[pos_])) out += text_[pos_++];
    return out;
  }

  long exponent_suffix() {
    if (peek() != '^') return 1;
    ++pos_;
    bool braced = false;
    if (peek() == '{') {
      braced = true;
      ++pos_;
    }
    const long e = integer();
    if (braced) {
      if (peek() != '}') fail("expected '}'");
      ++pos_;
    }
    return e;
  }

  /// Factor; `raw_exponent` (when given) receives the trailing exponent and
  /// the returned polynomial is then the unpowered base.
  SparsePoly factor(Kind* kind, long* raw_exponent = nullptr) {
    const char ch = peek();
    if (is_digit(ch)) {
      *kind = Kind::Number;
      Int num(digits());
      Int den = 1;
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!is_digit(peek())) fail("expected a denominator");
        den = Int(digits());
        if (den == 0) fail("zero denominator");
      }
      if (peek() == '^') fail("exponents apply only to variables and parenthesized groups");
      Rat value(num, den);
      value.canonicalize();
      return SparsePoly{{Monomial{}, value}};
    }
    if (is_var(ch)) {
      *kind = Kind::Variable;
      ++pos_;
      Monomial m;
      const long e = exponent_suffix();
      if (raw_exponent) *raw_exponent = e;
      const long use = raw_exponent ? 1 : e;
      if (ch == 'x') m.a = static_cast<int>(use);
      else if (ch == 'y') m.b = static_cast<int>(use);
      else m.c = static_cast<int>(use);
      return SparsePoly{{m, Rat(1)}};
    }
    if (ch == '(') {
      *kind = Kind::Group;
      ++pos_;
      SparsePoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      const long e = exponent_suffix();
      if (raw_exponent) {
        *raw_exponent = e;
        return inner;
      }
      return sparse_pow(inner, e);
    }
    if (ch == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

HomPoly to_homogeneous(const SparsePoly& p) {
  if (p.empty()) throw Error(ErrorCode::ZeroPolynomial, "polynomial expands to zero");
  const int degree = p.begin()->first.degree();
  HomPoly out(degree);
  for (const auto& [m, coeff] : p) {
    if (m.degree() != degree)
      throw Error(ErrorCode::NotHomogeneous,
                  "polynomial is not homogeneous (degrees " + std::to_string(degree) + " and " +
                      std::to_string(m.degree()) + ")");
    out.add_term(m, coeff);
  }
  return out;
}

}  // namespace

HomPoly parse(std::string_view text) {
  Parser parser(text);
  return to_homogeneous(parser.parse_all());
}

std::vector<Factor> parse_factors(std::string_view text) {
  Parser parser(text);
  std::vector<Factor> out;
  for (auto& [p, e] : parser.factors_all()) {
    HomPoly h = to_homogeneous(p);
    if (h.degree() == 0) continue;
    out.push_back({std::move(h), static_cast<int>(e)});
  }
  return out;
}

}  // namespace jacsyz
