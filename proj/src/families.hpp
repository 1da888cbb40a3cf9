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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace jacsyz {

struct FamilyParams {
  std::optional<int> d;
  std::optional<int> k;
  std::uint64_t seed = 1;
};

struct FamilyInfo {
  std::string name;
  char param;  ///< 'd' or 'k'
  int min;
  int max;  ///< largest parameter the source claims; 0 when unbounded
  std::string description;
};

const std::vector<FamilyInfo>& family_list();

/// Factored expression text for a family member. Throws Error(OutOfRange)
/// for parameters outside the family's range and Error(Usage) for an
/// unknown family or a missing parameter.
std::string family_expression(const std::string& name, const FamilyParams& params);

/// parse(family_expression(name, params)).
HomPoly build(const std::string& name, const FamilyParams& params);

using Line = std::array<Rat, 3>;
using Point = std::array<Rat, 3>;

struct ArrangementCombinatorics {
  int d = 0;
  /// Intersection points, normalized so the first nonzero coordinate is 1,
  /// with the indices of the lines through each.
  std::map<Point, std::vector<int>> points;
  std::map<int, int> n;  ///< n[j] = number of points of multiplicity j

  int count(int j) const {
    auto it = n.find(j);
    return it == n.end() ? 0 : it->second;
  }
  /// Sum of (m_p - 1)^2, which is n_2 + 4 n_3 when only double and triple
  /// points occur.
  long tau() const;
  bool only_double_and_triple() const;
};

/// Coefficients (a, b, c) of a linear form ax + by + cz.
Line line_of(const HomPoly& linear);

/// Throws Error(DuplicateLine) for proportional lines.
ArrangementCombinatorics line_arrangement_combinatorics(const std::vector<Line>& lines);

/// The lines of an arrangement given as a product of linear factors.
/// Throws Error(OutOfRange) for a nonlinear factor and Error(DuplicateLine)
/// for a repeated one.
std::vector<Line> arrangement_lines(const std::string& text);

struct Thm62Arrangement {
  int k = 0;
  std::vector<int> slopes;  ///< the values j used for the pairs jx -/+ y - j^2 z
  std::string expression;
  HomPoly poly;
  ArrangementCombinatorics combinatorics;
};

/// y · prod_j (jx - y - j^2 z)(jx + y - j^2 z) over k slopes. Slopes are
/// taken greedily from 1, 2, 3, ..., skipping any value that would put a
/// triple point off y = 0. Verifies that the 2k pair lines are nodal, that y = 0
/// passes through exactly k of their nodes, and that the full arrangement has
/// k triple points, all on y = 0; throws Error(HypothesisFailure) otherwise.
Thm62Arrangement build_thm62_arrangement(int k);

/// d lines with pseudo-random small integer coefficients, verified nodal.
/// Retries with a new sub-seed on collision; Error(RetryExhausted) after 32.
std::string nodal_arrangement_expression(int d, std::uint64_t seed);
HomPoly nodal_arrangement(int d, std::uint64_t seed);

}  // namespace jacsyz
