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

#include <json.hpp>
#include <string>

#include "analysis.hpp"

namespace jacsyz {

using Json = nlohmann::ordered_json;

/// Statement of the identity or bound a named check verifies.
std::string citation(const std::string& check_name);

/// Everything except timing is a pure function of the input and config,
/// so the dump is byte-reproducible. Timing is added only on request.
Json report_json(const Analysis& a, bool timing = false);
std::string render_text(const Analysis& a, bool timing = false);

/// Table of k, dim M(f)_k, dim D0(f)_k and, when given, n(f)_k.
Json hilbert_json(const HilbertData& h, const SaturationProfile* sat);
std::string hilbert_text(const HilbertData& h, const SaturationProfile* sat);

std::string join_ints(const std::vector<int>& v, const char* sep = ",");
std::string join_longs(const std::vector<long>& v, const char* sep = ",");

}  // namespace jacsyz
