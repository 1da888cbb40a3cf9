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

#include <random>

#include "errors.hpp"
#include "syzygy.hpp"

namespace jacsyz {

namespace {

using UPoly = std::vector<Rat>;

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

UPoly remainder(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rat q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

constexpr int kLines = 8;

}  // namespace

std::vector<Rat> restrict_to_line(const HomPoly& f, const std::array<Rat, 3>& point,
                                  const std::array<Rat, 3>& direction) {
  const int d = f.degree();
  // powers[v][n] = (P_v + t Q_v)^n
  std::array<std::vector<UPoly>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    powers[v].push_back({Rat(1)});
    const UPoly lin{point[v], direction[v]};
    for (int n = 1; n <= d; ++n) powers[v].push_back(mul(powers[v].back(), lin));
  }
  UPoly out(static_cast<std::size_t>(d) + 1, Rat(0));
  for (const auto& [m, c] : f.terms()) {
    const UPoly term = mul(mul(powers[0][m.a], powers[1][m.b]), powers[2][m.c]);
    for (std::size_t i = 0; i < term.size(); ++i) out[i] += c * term[i];
  }
  return out;
}

int squarefree_defect(const std::vector<Rat>& g) {
  UPoly a = g;
  trim(a);
  if (a.size() <= 1) return 0;
  UPoly b(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) b[i - 1] = a[i] * Rat(static_cast<long>(i));
  trim(b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

ReducedCertificate is_reduced(const HomPoly& f, std::uint64_t seed, const Arithmetic& arith) {
  ReducedCertificate cert;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-97, 97);
  for (int i = 0; i < kLines; ++i) {
    std::array<Rat, 3> p, q;
    for (int v = 0; v < 3; ++v) {
      p[v] = Rat(coord(rng));
      q[v] = Rat(coord(rng));
    }
    ++cert.lines_tried;
    const auto u = restrict_to_line(f, p, q);
    if (sgn(u.back()) == 0) continue;  // line meets the curve at Q
    if (squarefree_defect(u) == 0) {
      cert.verdict = Reducedness::Reduced;
      cert.point = p;
      cert.direction = q;
      return cert;
    }
  }
  const int d = f.degree();
  if (d >= 2 && milnor_dim(f, 3 * d - 5, arith) != milnor_dim(f, 3 * d - 4, arith))
    cert.verdict = Reducedness::NotReduced;
  return cert;
}

}  // namespace jacsyz
