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
#include <functional>
#include <string>
#include <vector>

#include "analysis.hpp"

namespace jacsyz {

inline constexpr const char* kDefaultPool = "-3,-1,1,2,3";

/// A text pattern with coefficient holes {a}, {b}, ... filled from the pool
/// and exponent holes <formula in d>, e.g. "x^<d-4>".
struct SearchTemplate {
  std::string name;
  std::string pattern;
};

/// Throws Error(Io) or Error(Registry).
std::vector<SearchTemplate> load_templates(const std::string& path);

/// Parses "-3,-1,1,2,3" (commas or spaces, rationals allowed). Throws
/// Error(Usage) on bad text or an empty pool.
std::vector<Rat> parse_pool(const std::string& text);

struct SearchRequest {
  int d = 0;
  int r = 0;
  int m = 0;
  std::vector<Rat> pool;
  std::vector<SearchTemplate> templates;
  int budget = 500;     ///< distinct candidates examined
  int max_results = 0;  ///< stop after this many certificates; 0 = no limit
  std::string store;    ///< JSON-lines certificate store; empty = none
};

struct Certificate {
  std::uint64_t hash = 0;
  std::string template_name;
  std::string expression;
  ResolutionData resolution;  ///< recomputed over Q
  Classification classification;
  bool prime_agrees = true;
  ReducedCertificate reduced;
};

struct SearchStats {
  int candidates = 0;        ///< distinct candidates examined (budget units)
  int duplicates = 0;        ///< same canonical form as an earlier candidate
  int prefilter_passed = 0;  ///< right type modulo p
  int disagreements = 0;     ///< prime and rational results differ
  int already_stored = 0;
};

struct SearchResult {
  std::vector<Certificate> certificates;
  SearchStats stats;
};

/// Certificate as one JSON line (no trailing newline).
std::string certificate_json(const Certificate& c, const SearchRequest& request);

/// Enumerates template instances in order, prefilters mod p and confirms
/// over Q. Certificates are appended to the store unless already present.
/// Throws Error(OutOfRange) unless d/2 <= r <= d-1 and 3 <= m < 2r-d+3.
SearchResult search(const SearchRequest& request, const Config& config = {},
                    const std::function<void(const Certificate&)>& on_certificate = {});

}  // namespace jacsyz
