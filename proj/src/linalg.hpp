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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace jacsyz {

/// Largest prime below 2^31.
inline constexpr std::uint32_t kDefaultPrime = 2147483647u;

/// Z/p for a word-size prime 2^20 < p < 2^31.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const noexcept { return p_; }

  static Elem zero() noexcept { return 0; }
  static Elem one() noexcept { return 1; }
  static bool is_zero(Elem a) noexcept { return a == 0; }

  /// Throws Error(BadPrime) when p divides the denominator.
  Elem from_rational(const Rat& q) const;
  Elem from_int(long v) const noexcept;

  Elem add(Elem a, Elem b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  Elem inv(Elem a) const;

  /// x mod p for any 64-bit x (Barrett reduction).
  Elem reduce(std::uint64_t x) const noexcept {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * mu_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return static_cast<Elem>(r);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::uint64_t mu_;
};

class RationalField {
 public:
  using Elem = Rat;

  static Elem zero() { return Rat(0); }
  static Elem one() { return Rat(1); }
  static bool is_zero(const Elem& a) { return sgn(a) == 0; }

  static Elem from_rational(const Rat& q) { return q; }
  static Elem from_int(long v) { return Rat(v); }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem neg(const Elem& a) { return -a; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem inv(const Elem& a) { return Rat(1) / a; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// True for 2^20 < p < 2^31 with p prime.
bool is_supported_prime(std::uint64_t p);

/// Dense row-major matrix over F.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, F::zero()) {}

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  static Matrix identity(F field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F::one();
    return m;
  }

  /// Matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_rows(F field, std::size_t cols, const std::vector<std::vector<Elem>>& rows) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    return m;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Right null space. Vector i has a 1 in free_columns[i], zeros in the other
/// free columns, and is otherwise determined by the reduced echelon form.
template <class F>
struct KernelBasis {
  std::vector<std::vector<typename F::Elem>> vectors;
  std::vector<std::size_t> pivot_columns;
  std::vector<std::size_t> free_columns;

  std::size_t dimension() const noexcept { return vectors.size(); }
};

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// Rank; elimination stops once `stop_at` pivots are found.
std::size_t rank(Matrix<PrimeField> m, std::size_t stop_at = kNoLimit);
/// Fraction-free (Bareiss) elimination over the integers after clearing
/// row denominators.
std::size_t rank(const Matrix<RationalField>& m, std::size_t stop_at = kNoLimit);

KernelBasis<PrimeField> kernel(Matrix<PrimeField> m);
KernelBasis<RationalField> kernel(const Matrix<RationalField>& m);

/// Dimension of the span of equal-length vectors.
template <class F>
std::size_t span_dimension(const F& field, std::size_t length,
                           const std::vector<std::vector<typename F::Elem>>& vectors) {
  if (vectors.empty() || length == 0) return 0;
  return rank(Matrix<F>::from_rows(field, length, vectors));
}

/// M·v.
template <class F>
std::vector<typename F::Elem> multiply(const Matrix<F>& m, std::span<const typename F::Elem> v) {
  const F& f = m.field();
  std::vector<typename F::Elem> out(m.rows(), F::zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto acc = F::zero();
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!F::is_zero(m.at(r, c)) && !F::is_zero(v[c])) acc = f.add(acc, f.mul(m.at(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

/// Incrementally built reduced row echelon basis of a subspace.
template <class F>
class EchelonSpace {
 public:
  using Elem = typename F::Elem;

  EchelonSpace(F field, std::size_t length) : field_(std::move(field)), length_(length) {}

  std::size_t dimension() const noexcept { return rows_.size(); }
  std::size_t length() const noexcept { return length_; }
  const std::vector<std::vector<Elem>>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Reduces v against the basis in place; returns true if v became zero.
  bool reduce(std::vector<Elem>& v) const {
    bool zero = true;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t pc = pivots_[i];
      if (F::is_zero(v[pc])) continue;
      const Elem factor = v[pc];
      const auto& row = rows_[i];
      for (std::size_t c = pc; c < length_; ++c)
        if (!F::is_zero(row[c])) v[c] = field_.sub(v[c], field_.mul(factor, row[c]));
    }
    for (const auto& e : v)
      if (!F::is_zero(e)) {
        zero = false;
        break;
      }
    return zero;
  }

  bool contains(std::vector<Elem> v) const { return reduce(v); }

  /// Adds v to the basis if independent; returns whether it was added.
  bool insert(std::vector<Elem> v) {
    if (reduce(v)) return false;
    std::size_t pc = 0;
    while (F::is_zero(v[pc])) ++pc;
    const Elem inv = field_.inv(v[pc]);
    for (std::size_t c = pc; c < length_; ++c)
      if (!F::is_zero(v[c])) v[c] = field_.mul(v[c], inv);
    // keep the basis fully reduced
    for (auto& row : rows_) {
      if (F::is_zero(row[pc])) continue;
      const Elem factor = row[pc];
      for (std::size_t c = pc; c < length_; ++c)
        if (!F::is_zero(v[c])) row[c] = field_.sub(row[c], field_.mul(factor, v[c]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pc);
    return true;
  }

 private:
  F field_;
  std::size_t length_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace jacsyz
