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

#include <optional>
#include <string>
#include <vector>

#include "syzygy.hpp"

namespace jacsyz {

/// du Plessis–Wall bounds and the generator-count ceiling for (d, r).
struct Bounds {
  int d = 0;
  int r = 0;
  long tau_min = 0;
  long tau_max = 0;
  long tau_max_prime = 0;  ///< the stronger bound; applies when 2r >= d
  int m_max = 0;

  bool prime_applies() const noexcept { return 2 * r >= d; }
};

/// Throws Error(OutOfRange) unless d >= 3 and 1 <= r <= d-1.
Bounds bounds(int d, int r);

/// C(n, 2), taken as 0 for n < 2.
long choose2(long n);

enum Verdict : unsigned {
  kFree = 1u << 0,
  kNearlyFree = 1u << 1,
  kPlusOneGenerated = 1u << 2,
  kMaximalTjurina = 1u << 3,
  kTypeDrm = 1u << 4,
  kSmooth = 1u << 5,
  kGeneric3Syz = 1u << 6,
  kOther = 1u << 7,
};

/// Flag names in a fixed order, e.g. "FREE", "TYPE_DRM".
std::vector<std::string> verdict_names(unsigned flags);

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
  std::string expected;  ///< empty when the check is not a value comparison
  std::string computed;
};

/// One closed-form candidate for τ together with the ε pattern it requires
/// (ascending; empty when the formula does not constrain ε).
struct TauCase {
  std::string label;
  long value = 0;
  std::vector<int> epsilons;
};

struct Classification {
  unsigned flags = 0;
  int d = 0;
  int r = 0;  ///< mdr
  int m = 0;
  Bounds bounds;
  std::optional<int> delta_m;  ///< set for TYPE_DRM
  std::vector<TauCase> predicted;
  std::optional<std::string> realized_case;
  std::vector<Check> checks;

  bool has(Verdict v) const noexcept { return (flags & v) != 0; }
  bool all_checks_pass() const;
};

/// Closed-form τ candidates. Throws Error(UnsupportedDelta) for TYPE_DRM
/// curves with m > 3 and Δm > 3, and Error(OutOfRange) when no formula
/// applies (m != 3 and not TYPE_DRM).
std::vector<TauCase> predict_tau(const ResolutionData& res);

/// τ from the Betti numerator B: the Hilbert series minus τ/(1-t) is a
/// polynomial, which forces B''(1) = 2τ.
long tau_from_betti(const ResolutionData& res);

Check check_epsilon_pattern(const ResolutionData& res);
Check dpw_check(const ResolutionData& res);

Classification classify(const ResolutionData& res);

}  // namespace jacsyz
