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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "errors.hpp"
#include "syzygy.hpp"

namespace jacsyz {

struct Config {
  std::optional<std::uint32_t> prime;  ///< modulus for the prime-field pass
  bool exact = false;                  ///< rational arithmetic throughout
  int bound = 0;                       ///< generator bound; 0 means 2d
  bool saturation = false;
  std::uint64_t seed = 0;
  int escalation_cap = 3;
  bool explicit_relations = false;

  Arithmetic arithmetic() const;
};

/// Reads JACSYZ_PRIME and JACSYZ_SEED. Throws Error(BadPrime) or Error(Usage)
/// on malformed values.
Config config_from_environment(Config base = {});

/// Throws Error(BadPrime) unless 2^20 < p < 2^31 and p is prime.
void validate_prime(std::uint32_t p);

struct Analysis {
  std::string input;
  HomPoly f;
  Config config;
  ReducedCertificate reduced;
  Resolution resolution;
  Classification classification;
  std::optional<SaturationProfile> saturation;
  /// Cross-checks beyond the classification: closure, saturation symmetry,
  /// exactness of lifted generators.
  std::vector<Check> checks;
  double seconds = 0;

  bool all_checks_pass() const;
};

/// parse, reducedness, resolve, classify and (optionally) saturation.
/// Throws Error(NotReduced) when a line witness proves f is not reduced,
/// Error(MdrZero) for concurrent lines and Error(ClosureFailure) when the
/// resolution cannot be closed.
Analysis analyze(const std::string& text, const Config& config = {});
Analysis analyze(const HomPoly& f, const std::string& input, const Config& config = {});

/// dim D0(f)_k for 0 <= k <= top by rank-nullity on the Jacobian map
/// S_k^3 -> S_{k+d-1}: 3 N_k - N_{k+d-1} + dim M(f)_{k+d-1}.
std::vector<long> syzygy_dims(const HilbertData& h, int top);

/// Process exit code for an error: 1 usage, 2 invalid input, 3 closure failure.
int exit_code_for(ErrorCode code);

}  // namespace jacsyz
