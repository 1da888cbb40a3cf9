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

#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace jacsyz {

using Rat = mpq_class;
using Int = mpz_class;

/// Exponent vector x^a y^b z^c.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;

  constexpr int degree() const noexcept { return a + b + c; }
  constexpr int exponent(int var) const noexcept { return var == 0 ? a : (var == 1 ? b : c); }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& lhs, const Monomial& rhs) noexcept;

/// Graded reverse lexicographic order with x > y > z.
bool grevlex_greater(const Monomial& lhs, const Monomial& rhs) noexcept;

struct GrevlexDescending {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const noexcept {
    return grevlex_greater(lhs, rhs);
  }
};

/// dim S_k = C(k+2, 2); zero for negative k.
std::size_t basis_size(int k) noexcept;

/// Position of m inside monomial_basis(m.degree()).
std::size_t basis_index(const Monomial& m) noexcept;

/// All degree-k monomials, in descending grevlex order.
std::vector<Monomial> monomial_basis(int k);

/// Homogeneous polynomial in x, y, z over the rationals.
///
/// Stored coefficients are never zero and every stored monomial has the
/// polynomial's degree. The zero polynomial keeps its degree so that it can
/// still take part in graded arithmetic.
class HomPoly {
 public:
  using TermMap = std::map<Monomial, Rat, GrevlexDescending>;

  HomPoly() = default;
  explicit HomPoly(int degree);
  HomPoly(int degree, TermMap terms);

  static HomPoly constant(const Rat& value);
  static HomPoly variable(int var);
  static HomPoly term(const Monomial& m, const Rat& coefficient);

  int degree() const noexcept { return degree_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rat coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rat& coefficient);

  /// Rescans every stored term; true iff the class invariant holds.
  bool invariant_holds() const;

  HomPoly& operator+=(const HomPoly& rhs);
  HomPoly& operator-=(const HomPoly& rhs);
  HomPoly& operator*=(const Rat& scalar);

  friend bool operator==(const HomPoly& lhs, const HomPoly& rhs) {
    return lhs.degree_ == rhs.degree_ && lhs.terms_ == rhs.terms_;
  }

 private:
  int degree_ = 0;
  TermMap terms_;
};

HomPoly operator+(HomPoly lhs, const HomPoly& rhs);
HomPoly operator-(HomPoly lhs, const HomPoly& rhs);
HomPoly operator-(HomPoly p);
HomPoly operator*(const HomPoly& lhs, const HomPoly& rhs);
HomPoly scale(HomPoly p, const Rat& scalar);
HomPoly power(const HomPoly& p, unsigned n);
HomPoly shift(const HomPoly& p, const Monomial& m);

HomPoly derivative(const HomPoly& p, int var);

/// (f_x, f_y, f_z).
std::array<HomPoly, 3> partials(const HomPoly& f);

Rat evaluate(const HomPoly& p, const std::array<Rat, 3>& point);

/// Canonical text: descending grevlex terms, explicit '*', no spaces.
std::string to_string(const HomPoly& p);

/// Parses and fully expands; throws ParseError, or Error with
/// NotHomogeneous / ZeroPolynomial.
HomPoly parse(std::string_view text);

struct Factor {
  HomPoly poly;
  int multiplicity = 1;
};

/// Splits a product expression into its top-level factors, each expanded.
/// Numeric factors are dropped. An expression that is not a single product
/// comes back as one factor.
std::vector<Factor> parse_factors(std::string_view text);

/// 64-bit FNV-1a of the canonical text of p scaled to leading coefficient 1,
/// so proportional equations (the same curve) hash alike.
std::uint64_t canonical_hash(const HomPoly& p);

}  // namespace jacsyz
