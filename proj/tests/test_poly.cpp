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

#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "poly.hpp"

using namespace jacsyz;

namespace {

HomPoly xv() { return HomPoly::variable(0); }
HomPoly yv() { return HomPoly::variable(1); }
HomPoly zv() { return HomPoly::variable(2); }

}  // namespace

TEST_CASE("monomial basis sizes and order") {
  CHECK(monomial_basis(0).size() == 1);
  CHECK(monomial_basis(2).size() == 6);
  CHECK(monomial_basis(10).size() == 66);
  const auto b2 = monomial_basis(2);
  // x^2 > xy > y^2 > xz > yz > z^2
  CHECK(b2[0] == Monomial{2, 0, 0});
  CHECK(b2[1] == Monomial{1, 1, 0});
  CHECK(b2[2] == Monomial{0, 2, 0});
  CHECK(b2[3] == Monomial{1, 0, 1});
  CHECK(b2[4] == Monomial{0, 1, 1});
  CHECK(b2[5] == Monomial{0, 0, 2});
  for (int k = 0; k <= 12; ++k) {
    const auto basis = monomial_basis(k);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis_index(basis[i]) == i);
      if (i > 0) CHECK(grevlex_greater(basis[i - 1], basis[i]));
    }
  }
}

TEST_CASE("parse literal and factored forms") {
  const HomPoly fermat = parse("x^5+y^5+z^5");
  CHECK(fermat.degree() == 5);
  CHECK(fermat.size() == 3);

  const HomPoly f = parse("xyz*(x^2+y^2+z^2)");
  CHECK(f.degree() == 5);
  CHECK(f.size() == 3);
  CHECK(f.coefficient({3, 1, 1}) == 1);
  CHECK(f.coefficient({1, 3, 1}) == 1);
  CHECK(f.coefficient({1, 1, 3}) == 1);

  // coefficient juxtaposed with a variable, as in written equations
  CHECK(parse("(x-2y+z)(y-3z+x)") == parse("(x-2*y+z)*(y-3*z+x)"));
  CHECK(parse("z(x+y)") == parse("z*x+z*y"));
  CHECK(parse("x^{3}") == parse("x^3"));
  CHECK(parse("1/2*x - y") == scale(xv(), Rat(1, 2)) - yv());
  CHECK(parse(" - x + y ") == yv() - xv());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("x^2+y^3"), Error);
  try {
    parse("x^2+y^3");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHomogeneous);
  }
  try {
    parse("x-x");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroPolynomial);
  }
  try {
    parse("2 3");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse("x2"), ParseError);
  CHECK_THROWS_AS(parse("(x+y"), ParseError);
  CHECK_THROWS_AS(parse("x+*y"), ParseError);
  CHECK_THROWS_AS(parse("w"), ParseError);
  CHECK_THROWS_AS(parse("x/0"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("partials and the Euler relation") {
  auto p = partials(parse("x^3"));
  CHECK(p[0] == parse("3x^2"));
  CHECK(p[1].is_zero());
  CHECK(p[1].degree() == 2);
  CHECK(p[2].is_zero());

  p = partials(parse("x^5+y^5+z^5"));
  CHECK(p[0] == parse("5x^4"));
  CHECK(p[1] == parse("5y^4"));
  CHECK(p[2] == parse("5z^4"));

  p = partials(parse("xyz"));
  CHECK(p[0] == parse("yz"));
  CHECK(p[1] == parse("xz"));
  CHECK(p[2] == parse("xy"));

  const char* samples[] = {"xyz*(x^2+y^2+z^2)", "x^4y+3/7x^2z^3-11y^5", "(x-2y+z)^3(x+y)",
                           "z(x^3-z^3)(y^3-z^3)((x+y)^3-2z^3)"};
  for (const char* s : samples) {
    const HomPoly f = parse(s);
    const auto d = partials(f);
    const HomPoly euler = xv() * d[0] + yv() * d[1] + zv() * d[2];
    CHECK(euler == scale(f, f.degree()));
    CHECK(f.invariant_holds());
  }
}

TEST_CASE("arithmetic") {
  CHECK((xv() + yv()) * (xv() - yv()) == parse("x^2-y^2"));
  const HomPoly f = parse("x^3+2y^2z");
  CHECK(f * HomPoly::constant(1) == f);
  CHECK_THROWS_AS(f + xv(), Error);
  CHECK(power(xv() + yv(), 3) == parse("x^3+3x^2y+3xy^2+y^3"));
  CHECK(power(xv(), 0) == HomPoly::constant(1));

  // y * prod_{j=1,2} (jx-y-j^2 z)(jx+y-j^2 z), expanded independently
  HomPoly prod = yv();
  for (int j = 1; j <= 2; ++j) {
    prod = prod * (scale(xv(), j) - yv() - scale(zv(), j * j));
    prod = prod * (scale(xv(), j) + yv() - scale(zv(), j * j));
  }
  CHECK(prod == parse("4*x^4*y - 24*x^3*y*z - 5*x^2*y^3 + 52*x^2*y*z^2 + 18*x*y^3*z"
                      " - 48*x*y*z^3 + y^5 - 17*y^3*z^2 + 16*y*z^4"));
}

TEST_CASE("canonical print round-trips through the parser") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = trial % 7;
    HomPoly p(k);
    for (const auto& m : monomial_basis(k))
      if (rng() % 3 == 0) p.add_term(m, Rat(coeff(rng), den(rng)));
    if (p.is_zero()) continue;
    const std::string text = to_string(p);
    CHECK(parse(text) == p);
    CHECK(to_string(parse(text)) == text);
  }
  CHECK(to_string(parse("xyz*(x^2+y^2+z^2)")) == "x^3*y*z+x*y^3*z+x*y*z^3");
  CHECK(to_string(parse("-1/2x^2+3yz")) == "-1/2*x^2+3*y*z");
}

TEST_CASE("factor splitting") {
  const auto factors = parse_factors("y(4y^2-z^2)((x+y)^2-z^2)x^2");
  REQUIRE(factors.size() == 4);
  CHECK(factors[0].poly == yv());
  CHECK(factors[1].poly == parse("4y^2-z^2"));
  CHECK(factors[3].multiplicity == 2);
  const auto single = parse_factors("x+y");
  REQUIRE(single.size() == 1);
  CHECK(single[0].poly == parse("x+y"));
  CHECK(parse_factors("2xy").size() == 2);
}

TEST_CASE("canonical hash ignores scaling") {
  CHECK(canonical_hash(parse("2x^2-4yz")) == canonical_hash(parse("x^2-2yz")));
  CHECK(canonical_hash(parse("x^2-yz")) != canonical_hash(parse("x^2+yz")));
}
