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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"

namespace jacsyz {

/// Integer value of an expression in + - * / and parentheses over the given
/// variables, e.g. "3*(d-2)" at d = 7. Division must be exact. Throws
/// Error(Registry) on malformed text.
long eval_formula(const std::string& text, const std::map<char, long>& vars);

/// Claimed invariants, already evaluated at the instance parameter.
struct Expected {
  std::optional<int> d, r, m;  ///< "type (d,r,m)"
  std::optional<std::vector<int>> exponents;
  std::optional<int> mdr;
  std::optional<long> tau;
  std::optional<int> delta_m;
  std::optional<int> epsilon_case;  ///< which epsilon pattern is realized, numbered per delta_m
  std::optional<int> epsilon_all;   ///< every eps_j equals this value
  std::vector<std::string> verdicts;
};

/// One concrete curve of the registry.
struct CurveEntry {
  std::string id;
  std::string expression;
  int degree = 0;
  Expected expected;
  std::string source;
  bool flagged = false;
  std::string note;
};

struct RegistryOptions {
  bool all = false;     ///< include instances above the desk-scale degree cap
  int max_degree = 13;  ///< desk-scale cap used when all == false
};

/// Reads the registry fixture and expands families into instances. Throws
/// Error(Registry) or Error(Io).
std::vector<CurveEntry> load_registry(const std::string& path, const RegistryOptions& options = {});

/// Path of the shipped registry (JACSYZ_DATA_DIR/registry.json).
std::string default_registry_path();
std::string default_templates_path();

/// Shell-style glob on entry ids; an empty pattern matches everything.
bool id_matches(const std::string& pattern, const std::string& id);

struct FieldResult {
  std::string field;
  std::string claimed;
  std::string computed;
  bool match = true;
};

enum class EntryStatus { Match, Mismatch, Error };
const char* entry_status_name(EntryStatus s);

struct EntryResult {
  CurveEntry entry;
  EntryStatus status = EntryStatus::Match;
  std::vector<FieldResult> fields;
  std::string error;  ///< set when status == Error
  std::optional<Analysis> analysis;
};

/// Analyzes the curve and compares every claimed field.
EntryResult verify_entry(const CurveEntry& entry, const Config& config = {});

/// "MATCH id" or "MISMATCH id field: computed X, claimed Y; ..." with a
/// "(flagged)" marker for suspected typos.
std::string describe(const EntryResult& r);

/// Verifies entries on `threads` workers (0: JACSYZ_THREADS or the hardware
/// count). Results come back in input order and `on_result` sees them in
/// that order too, so output is deterministic.
std::vector<EntryResult> verify_entries(const std::vector<CurveEntry>& entries, const Config& config,
                                        unsigned threads = 0,
                                        const std::function<void(const EntryResult&)>& on_result = {});

}  // namespace jacsyz
