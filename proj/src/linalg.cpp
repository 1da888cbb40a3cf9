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

#include "linalg.hpp"

#include <gmp.h>

#include <algorithm>

#include "errors.hpp"

namespace jacsyz {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_supported_prime(p))
    throw Error(ErrorCode::BadPrime,
                "prime must satisfy 2^20 < p < 2^31 and be prime, got " + std::to_string(p));
  mu_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
}

bool is_supported_prime(std::uint64_t p) {
  if (p <= (1ull << 20) || p >= (1ull << 31)) return false;
  Int n(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

PrimeField::Elem PrimeField::from_rational(const Rat& q) const {
  Int num = q.get_num() % p_;
  if (num < 0) num += p_;
  Int den = q.get_den() % p_;
  if (den == 0)
    throw Error(ErrorCode::BadPrime,
                "prime " + std::to_string(p_) + " divides a coefficient denominator");
  return mul(static_cast<Elem>(num.get_ui()), inv(static_cast<Elem>(den.get_ui())));
}

PrimeField::Elem PrimeField::from_int(long v) const noexcept {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::BadPrime, "inverse of zero");
  // extended Euclid on signed 64-bit
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

namespace {

using Elem = PrimeField::Elem;

/// Forward elimination to row echelon form with pivot rows normalized to a
/// leading 1. Pivot choice: first column in order, first candidate row.
std::vector<std::size_t> echelonize(Matrix<PrimeField>& m, std::size_t stop_at) {
  const PrimeField& f = m.field();
  const std::uint32_t p = f.prime();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  nz.reserve(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows && pivots.size() < stop_at; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      auto a = m.row(piv);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(r);
    const Elem inv = f.inv(prow[c]);
    nz.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (prow[j] != 0) {
        prow[j] = f.mul(prow[j], inv);
        if (j > c) nz.push_back(j);
      }
    const bool sparse = nz.size() * 4 < cols - c;
    for (std::size_t i = r + 1; i < rows; ++i) {
      Elem* row = m.row(i).data();
      const Elem lead = row[c];
      if (lead == 0) continue;
      const std::uint64_t factor = p - lead;
      row[c] = 0;
      if (sparse) {
        for (std::size_t j : nz) row[j] = f.reduce(row[j] + factor * prow[j]);
      } else {
        const Elem* src = prow.data();
        for (std::size_t j = c + 1; j < cols; ++j)
          if (src[j] != 0) row[j] = f.reduce(row[j] + factor * src[j]);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Clears denominators row by row.
std::vector<std::vector<Int>> integer_rows(const Matrix<RationalField>& m) {
  std::vector<std::vector<Int>> out(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& q = m.at(r, c);
      if (sgn(q) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& q = m.at(r, c);
      if (sgn(q) == 0) continue;
      Int& dst = out[r][c];
      mpz_divexact(dst.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
      dst *= q.get_num();
    }
  }
  return out;
}

/// Fraction-free elimination. With `jordan`, rows above the pivot are also
/// cleared, which leaves every pivot equal to the final leading minor.
std::vector<std::size_t> bareiss(std::vector<std::vector<Int>>& a, std::size_t cols,
                                 bool jordan, std::size_t stop_at) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivots;
  Int prev = 1;
  Int tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows && pivots.size() < stop_at; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const Int pv = a[r][c];
    const auto& prow = a[r];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || (i < r && !jordan)) continue;
      auto& row = a[i];
      const Int lead = row[c];
      // rows below the pivot are zero left of c; rows above are not
      const std::size_t start = i < r ? 0 : c + 1;
      for (std::size_t j = start; j < cols; ++j) {
        if (j == c) continue;
        if (sgn(row[j]) == 0 && (sgn(lead) == 0 || sgn(prow[j]) == 0)) continue;
        // row[j] = (pv*row[j] - lead*prow[j]) / prev, exact
        mpz_mul(tmp.get_mpz_t(), pv.get_mpz_t(), row[j].get_mpz_t());
        if (sgn(lead) != 0 && sgn(prow[j]) != 0)
          mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), prow[j].get_mpz_t());
        mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = pv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix<PrimeField> m, std::size_t stop_at) {
  return echelonize(m, stop_at).size();
}

std::size_t rank(const Matrix<RationalField>& m, std::size_t stop_at) {
  auto a = integer_rows(m);
  return bareiss(a, m.cols(), false, stop_at).size();
}

KernelBasis<PrimeField> kernel(Matrix<PrimeField> m) {
  const PrimeField f = m.field();
  const auto pivots = echelonize(m, kNoLimit);
  const std::size_t cols = m.cols();
  // back substitution to reduced form
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    const auto prow = m.row(k);
    for (std::size_t i = 0; i < k; ++i) {
      auto row = m.row(i);
      const Elem lead = row[c];
      if (lead == 0) continue;
      const std::uint64_t factor = f.prime() - lead;
      for (std::size_t j = c; j < cols; ++j)
        if (prow[j] != 0) row[j] = f.reduce(row[j] + factor * prow[j]);
    }
  }
  KernelBasis<PrimeField> out;
  out.pivot_columns = pivots;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    out.free_columns.push_back(c);
    std::vector<Elem> v(cols, 0);
    v[c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(m.at(k, c));
    out.vectors.push_back(std::move(v));
  }
  return out;
}

KernelBasis<RationalField> kernel(const Matrix<RationalField>& m) {
  auto a = integer_rows(m);
  const std::size_t cols = m.cols();
  const auto pivots = bareiss(a, cols, true, kNoLimit);
  KernelBasis<RationalField> out;
  out.pivot_columns = pivots;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    out.free_columns.push_back(c);
    std::vector<Rat> v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      if (sgn(a[k][c]) == 0) continue;
      Rat q(a[k][c], a[k][pivots[k]]);
      q.canonicalize();
      v[pivots[k]] = -q;
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

}  // namespace jacsyz
