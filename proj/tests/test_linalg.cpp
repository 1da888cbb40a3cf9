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
#include "linalg.hpp"
#include "poly.hpp"

using namespace jacsyz;

namespace {

/// Multiplication map S_k^3 -> S_{k+d-1} by the partials, built directly.
template <class F>
Matrix<F> jacobian_map(const F& field, const HomPoly& f, int k) {
  const auto parts = partials(f);
  const int target = k + f.degree() - 1;
  const auto src = monomial_basis(k);
  Matrix<F> m(field, basis_size(target), 3 * src.size());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t s = 0; s < src.size(); ++s)
      for (const auto& [mono, coeff] : parts[i].terms())
        m.at(basis_index(mono * src[s]), i * src.size() + s) = field.from_rational(coeff);
  return m;
}

template <class F>
Matrix<F> random_low_rank(const F& field, std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                          std::size_t r) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Matrix<F> a(field, rows, r), b(field, r, cols), out(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < r; ++j) a.at(i, j) = field.from_int(dist(rng));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) b.at(i, j) = field.from_int(dist(rng) * (rng() % 2));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      auto acc = F::zero();
      for (std::size_t t = 0; t < r; ++t) acc = field.add(acc, field.mul(a.at(i, t), b.at(t, j)));
      out.at(i, j) = acc;
    }
  return out;
}

Matrix<PrimeField> reduce_mod(const PrimeField& pf, const Matrix<RationalField>& m) {
  Matrix<PrimeField> out(pf, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = pf.from_rational(m.at(i, j));
  return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const PrimeField f;
  CHECK(f.prime() == 2147483647u);
  CHECK(f.mul(f.inv(12345), 12345) == 1);
  CHECK(f.from_rational(Rat(1, 2)) == f.inv(2));
  CHECK(f.from_int(-1) == f.prime() - 1);
  CHECK(f.reduce(~0ull) == (~0ull) % f.prime());
  CHECK_THROWS_AS(PrimeField(1000003u), Error);  // below 2^20
  CHECK_THROWS_AS(PrimeField(2147483646u), Error);
  CHECK(is_supported_prime(1048583u));
  CHECK_FALSE(is_supported_prime(4294967291ull));
}

TEST_CASE("rank basics") {
  const PrimeField pf;
  CHECK(rank(Matrix<PrimeField>::identity(pf, 3)) == 3);
  CHECK(rank(Matrix<PrimeField>(pf, 4, 5)) == 0);
  CHECK(rank(Matrix<RationalField>::identity(RationalField{}, 3)) == 3);
  CHECK(rank(Matrix<RationalField>(RationalField{}, 4, 5)) == 0);
}

TEST_CASE("kernel basics") {
  const PrimeField pf;
  CHECK(kernel(Matrix<PrimeField>::identity(pf, 4)).dimension() == 0);
  Matrix<RationalField> m(RationalField{}, 1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  const auto k = kernel(m);
  REQUIRE(k.dimension() == 1);
  // proportional to (1, -1)
  CHECK(k.vectors[0][0] == -k.vectors[0][1]);
  CHECK(sgn(k.vectors[0][0]) != 0);
}

TEST_CASE("Jacobian map of the Fermat quintic into degree 8 has rank 42") {
  // dim M(f)_8 = 3 from (1+t+t^2+t^3)^3, so rank = C(10,2) - 3
  const HomPoly f = parse("x^5+y^5+z^5");
  const auto mp = jacobian_map(PrimeField{}, f, 4);
  CHECK(mp.rows() == 45);
  CHECK(mp.cols() == 45);
  CHECK(rank(mp) == 42);
  CHECK(rank(jacobian_map(RationalField{}, f, 4)) == 42);
  // no syzygy below degree d-1 for a smooth curve
  CHECK(kernel(jacobian_map(RationalField{}, f, 3)).dimension() == 0);
  CHECK(kernel(jacobian_map(PrimeField{}, f, 3)).dimension() == 0);
}

TEST_CASE("span dimension") {
  const PrimeField pf;
  std::vector<std::vector<PrimeField::Elem>> copies(3, {1, 2, 3});
  CHECK(span_dimension(pf, 3, copies) == 1);
  CHECK(span_dimension(pf, 3, std::vector<std::vector<PrimeField::Elem>>{}) == 0);
}

TEST_CASE("rational and modular elimination agree on random low-rank matrices") {
  std::mt19937_64 rng(2024);
  const PrimeField pf;
  const RationalField qf;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 2 + rng() % 9;
    const std::size_t cols = 2 + rng() % 11;
    const std::size_t r = 1 + rng() % std::min(rows, cols);
    auto mq = random_low_rank(qf, rng, rows, cols, r);
    if (trial % 5 == 0) mq.at(0, 0) = Rat(1, 3 + trial);
    const auto mp = reduce_mod(pf, mq);
    const std::size_t rq = rank(mq);
    const std::size_t rp = rank(mp);
    CHECK(rq >= rp);
    CHECK(rq == rp);
    CHECK(rq <= r + (trial % 5 == 0 ? 1 : 0));

    const auto kq = kernel(mq);
    const auto kp = kernel(mp);
    CHECK(kq.dimension() + rq == cols);
    CHECK(kp.dimension() + rp == cols);
    for (const auto& v : kq.vectors)
      for (const auto& e : multiply(mq, std::span<const Rat>(v.data(), v.size()))) CHECK(sgn(e) == 0);
    for (const auto& v : kp.vectors)
      for (const auto& e : multiply(mp, std::span<const PrimeField::Elem>(v.data(), v.size()))) CHECK(e == 0);
    // canonical bases correspond under reduction mod p
    REQUIRE(kq.dimension() == kp.dimension());
    CHECK(kq.free_columns == kp.free_columns);
    for (std::size_t i = 0; i < kq.dimension(); ++i)
      for (std::size_t j = 0; j < cols; ++j)
        CHECK(pf.from_rational(kq.vectors[i][j]) == kp.vectors[i][j]);
  }
}

TEST_CASE("kernel is deterministic") {
  std::mt19937_64 rng(5);
  const auto m = random_low_rank(PrimeField{}, rng, 7, 9, 4);
  const auto a = kernel(m);
  const auto b = kernel(m);
  CHECK(a.vectors == b.vectors);
}

TEST_CASE("echelon space") {
  const PrimeField pf;
  EchelonSpace<PrimeField> space(pf, 3);
  CHECK(space.insert({0, 1, 2}));
  CHECK_FALSE(space.insert({0, 2, 4}));
  CHECK(space.insert({1, 1, 1}));
  CHECK(space.contains({1, 2, 3}));
  CHECK(space.dimension() == 2);
  CHECK(space.insert({0, 0, 5}));
  CHECK(space.dimension() == 3);
}
