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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace jacsyz {

enum class ArithmeticMode { Prime, Rational };

/// Field used for the graded linear algebra. Rational is exact; Prime
/// computes every dimension modulo a word-size prime (dimensions can only
/// come out too large, never too small, under a bad prime).
struct Arithmetic {
  ArithmeticMode mode = ArithmeticMode::Prime;
  std::uint32_t prime = kDefaultPrime;

  static Arithmetic rational() { return {ArithmeticMode::Rational, kDefaultPrime}; }
  static Arithmetic modular(std::uint32_t p = kDefaultPrime) { return {ArithmeticMode::Prime, p}; }

  std::string describe() const;
};

/// A minimal generator (a, b, c) of the syzygy module, with a·f_x + b·f_y +
/// c·f_z = 0. Under prime arithmetic the coefficients are lifted by rational
/// reconstruction; `exact` records whether the lift is a syzygy over Q
/// (otherwise the components hold symmetric residues mod p).
struct SyzygyGenerator {
  int degree = 0;
  std::array<HomPoly, 3> components;
  bool exact = true;
};

struct SyzygyProfile {
  int d = 0;
  int bound = 0;
  std::vector<long> dims;     ///< dims[k] = dim D0(f)_k, 0 <= k <= bound
  std::vector<long> mingens;  ///< mingens[k] = minimal generators in degree k
  int mdr = 0;
  std::vector<int> exponents;  ///< ascending
  std::vector<SyzygyGenerator> generators;

  int m() const noexcept { return static_cast<int>(exponents.size()); }
};

/// Numeric content of the minimal resolution
/// 0 -> (+) S(-e_i) -> (+) S(1-d-d_j) -> S^3(1-d) -> S of the Milnor algebra.
struct ResolutionData {
  int d = 0;
  int m = 0;
  std::vector<int> exponents;         ///< d_1 <= ... <= d_m
  std::vector<int> relation_degrees;  ///< e_1 <= ... <= e_{m-2}
  std::vector<int> epsilons;          ///< e_j - d - d_{j+2} + 1
  long tau = 0;
  bool free = false;

  friend bool operator==(const ResolutionData&, const ResolutionData&) = default;
};

struct HilbertData {
  int d = 0;
  int T = 0;               ///< 3(d-2)
  std::vector<long> dims;  ///< dim M(f)_k for 0 <= k <= 3d-4
  long tau = 0;
  /// Coefficients of the Hilbert series numerator over (1-t)^3, index = power.
  std::vector<long> numerator;
};

struct SaturationProfile {
  int d = 0;
  int T = 0;
  std::vector<long> n_dims;  ///< dim N(f)_k for 0 <= k <= T
};

struct ResolveOptions {
  Arithmetic arithmetic;
  int bound = 0;           ///< generator search bound; 0 means 2d
  int escalation_cap = 3;  ///< bound += d at most this many times
  /// Count minimal relations from explicit relation kernels instead of the
  /// free-module dimension count. Slower; used to cross-check.
  bool explicit_relations = false;
};

long syz_dim(const HomPoly& f, int k, const Arithmetic& arith = {});
long milnor_dim(const HomPoly& f, int k, const Arithmetic& arith = {});

/// Throws Error(MdrZero) for d concurrent lines.
int mdr(const HomPoly& f, const Arithmetic& arith = {});

/// Throws Error(NotStabilized) when dim M(f)_{3d-5} != dim M(f)_{3d-4}.
long tau(const HomPoly& f, const Arithmetic& arith = {});

HilbertData hilbert_data(const HomPoly& f, const Arithmetic& arith = {});

SyzygyProfile syzygy_profile(const HomPoly& f, int bound = 0, const Arithmetic& arith = {});

/// Second syzygies of the generators in `profile`, up to relation degree
/// e <= bound + d. Throws Error(ClosureFailure) if the assembled Betti
/// numerator disagrees with the Hilbert series numerator.
ResolutionData relations(const HomPoly& f, const SyzygyProfile& profile, int bound = 0,
                         const Arithmetic& arith = {}, bool explicit_relations = false);

/// Full resolution with closure verification and bound escalation.
ResolutionData resolve(const HomPoly& f, const ResolveOptions& options = {});

/// Same, also returning the profile and Hilbert data computed on the way.
struct Resolution {
  ResolutionData data;
  SyzygyProfile profile;
  HilbertData hilbert;
  int escalations = 0;
};
Resolution resolve_full(const HomPoly& f, const ResolveOptions& options = {});

/// dim N(f)_k for k <= T, with N(f) = I_f / J_f.
SaturationProfile saturation_profile(const HomPoly& f, const Arithmetic& arith = {});

/// 1 - 3t^{d-1} + sum t^{d-1+d_j} - sum t^{e_i}.
std::vector<long> betti_numerator(const ResolutionData& res);

/// Exact equality after trimming trailing zeros.
bool same_polynomial(std::vector<long> a, std::vector<long> b);

enum class Reducedness { Reduced, NotReduced, Inconclusive };

struct ReducedCertificate {
  Reducedness verdict = Reducedness::Inconclusive;
  /// Line P + tQ along which f restricts to a squarefree polynomial of
  /// full degree (set when verdict == Reduced).
  std::array<Rat, 3> point;
  std::array<Rat, 3> direction;
  int lines_tried = 0;
};

/// Squarefree certificate along pseudo-random lines (8 lines, seeded),
/// falling back to the Hilbert-function growth witness.
ReducedCertificate is_reduced(const HomPoly& f, std::uint64_t seed = 0,
                              const Arithmetic& arith = {});

/// Restriction of f to the line P + tQ, as coefficients in t (index = power).
std::vector<Rat> restrict_to_line(const HomPoly& f, const std::array<Rat, 3>& point,
                                  const std::array<Rat, 3>& direction);

/// Degree of gcd(g, g') for a univariate rational polynomial.
int squarefree_defect(const std::vector<Rat>& g);

}  // namespace jacsyz
