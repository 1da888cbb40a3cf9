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

#include <doctest.h>

#include <string>
#include <vector>

#include "classify.hpp"
#include "errors.hpp"

using namespace jacsyz;

namespace {

ResolutionData drm(int d, int r, int m, std::vector<int> eps, long tau = 0) {
  ResolutionData res;
  res.d = d;
  res.m = m;
  res.exponents.assign(m, r);
  res.epsilons = eps;
  for (std::size_t j = 0; j < eps.size(); ++j) res.relation_degrees.push_back(d + r - 1 + eps[j]);
  res.tau = tau;
  res.free = m == 2;
  return res;
}

std::vector<long> values(const std::vector<TauCase>& cases) {
  std::vector<long> out;
  for (const auto& c : cases) out.push_back(c.value);
  return out;
}

HomPoly lines_with_pairs(int k) {
  std::string s = "y";
  for (int j = 1; j <= k; ++j) {
    const std::string a = std::to_string(j), b = std::to_string(j * j);
    s += "*(" + a + "x-y-" + b + "z)*(" + a + "x+y-" + b + "z)";
  }
  return parse(s);
}

}  // namespace

TEST_CASE("bounds") {
  const Bounds b = bounds(5, 3);
  CHECK(b.tau_min == 4);
  CHECK(b.tau_max == 13);
  CHECK(b.tau_max_prime == 10);
  CHECK(b.m_max == 4);
  CHECK(bounds(7, 4).tau_max_prime == 25);
  for (int d = 3; d <= 20; ++d) {
    CHECK(bounds(d, d - 1).tau_min == 0);
    for (int r = 1; r <= d - 1; ++r) {
      const Bounds x = bounds(d, r);
      CHECK(x.tau_max_prime <= x.tau_max);
      CHECK(x.tau_min <= x.tau_max);
    }
  }
  CHECK_THROWS_AS(bounds(5, 5), Error);
  CHECK_THROWS_AS(bounds(2, 1), Error);
  CHECK(choose2(-3) == 0);
  CHECK(choose2(1) == 0);
  CHECK(choose2(4) == 6);
}

TEST_CASE("tau predictions") {
  CHECK(values(predict_tau(drm(10, 7, 6, {1, 1, 1, 2}))) == std::vector<long>{51});
  CHECK(values(predict_tau(drm(12, 10, 9, {1, 1, 1, 1, 1, 1, 3}))) == std::vector<long>{63, 64});
  CHECK(values(predict_tau(drm(12, 9, 6, {1, 2, 2, 2}))) == std::vector<long>{69, 71, 72});
  CHECK(values(predict_tau(drm(7, 4, 3, {2}))) == std::vector<long>{24});
  CHECK(values(predict_tau(drm(11, 6, 3, {2}))) == std::vector<long>{72});
  CHECK(values(predict_tau(drm(9, 7, 5, {1, 1, 4}))) == std::vector<long>{30, 32, 33});
  // Δm = 3 with m = 4 leaves room for only two ε entries
  CHECK(values(predict_tau(drm(10, 7, 4, {2, 3}))) == std::vector<long>{46, 48});
  CHECK_THROWS_AS(predict_tau(drm(13, 10, 6, {2, 2, 2, 2})), Error);
  try {
    predict_tau(drm(13, 10, 6, {2, 2, 2, 2}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedDelta);
  }
}

TEST_CASE("type (d,r,3) formula agrees with the general 3-syzygy formula") {
  for (int d = 4; d <= 15; ++d)
    for (int r = (d + 1) / 2; r <= d - 1; ++r) {
      ResolutionData res = drm(d, r, 3, {2 * r - d + 1});
      const long a = predict_tau(res).front().value;
      res.exponents = {r, r, r};
      const long general = (d - 1) * 3L * r - 3L * r * r;
      CHECK(a == general);
    }
}

TEST_CASE("epsilon patterns") {
  CHECK(check_epsilon_pattern(drm(5, 4, 3, {4})).passed);
  CHECK_FALSE(check_epsilon_pattern(drm(5, 4, 3, {3})).passed);
  CHECK(check_epsilon_pattern(drm(10, 7, 6, {1, 1, 1, 2})).passed);
  CHECK_FALSE(check_epsilon_pattern(drm(10, 7, 6, {1, 1, 2, 2})).passed);
  const Check c = check_epsilon_pattern(drm(12, 9, 6, {1, 2, 2, 2}));
  CHECK(c.passed);
  CHECK(c.detail.find("case 3") != std::string::npos);
}

TEST_CASE("tau from the Betti numerator") {
  // 1 - 3t^4 + 3t^7 - t^9: B''(1) = -36 + 126 - 72 = 18
  ResolutionData res;
  res.d = 5;
  res.m = 3;
  res.exponents = {3, 3, 3};
  res.relation_degrees = {9};
  CHECK(tau_from_betti(res) == 9);
}

TEST_CASE("classify computed curves") {
  const auto fermat = classify(resolve(parse("x^5+y^5+z^5")));
  CHECK(fermat.has(kSmooth));
  CHECK(fermat.has(kTypeDrm));
  CHECK_FALSE(fermat.has(kMaximalTjurina));
  CHECK(fermat.delta_m == 3);
  CHECK(fermat.all_checks_pass());

  const auto nodal = classify(resolve(parse("x*y*z*(x+y+z)*(x+2y+5z)*(3x-y+7z)")));
  CHECK(nodal.has(kMaximalTjurina));
  CHECK(nodal.r == 4);
  CHECK(nodal.all_checks_pass());

  const auto free_arr = resolve(lines_with_pairs(2));
  const auto fc = classify(free_arr);
  CHECK(fc.has(kFree));
  CHECK(free_arr.tau == bounds(5, 2).tau_max);
  CHECK(dpw_check(free_arr).passed);
  CHECK(fc.all_checks_pass());

  const auto k3 = classify(resolve(lines_with_pairs(3)));
  CHECK(k3.has(kTypeDrm));
  CHECK(k3.delta_m == 1);
  CHECK(k3.has(kGeneric3Syz));
  CHECK_FALSE(k3.has(kNearlyFree));
  CHECK(k3.all_checks_pass());

  const auto k4 = classify(resolve(lines_with_pairs(4)));
  CHECK(k4.realized_case == "delta_m=2 case 2");
  CHECK(k4.all_checks_pass());

  const auto c = classify(resolve(parse("x*(x^3+y^2z)*(y^3+z^2x)*(z^3+x^2y)")));
  CHECK(c.realized_case == "delta_m=1");
  CHECK(c.all_checks_pass());

  // conic with two tangent lines
  const auto pog = classify(resolve(parse("(x^2-y*z)*y*z")));
  CHECK(pog.m == 2);
  CHECK(pog.has(kFree));
}

TEST_CASE("nearly free curves sit one below tau_max") {
  // cuspidal cubic: exponents (1,2,2), tau = 2
  const auto res = resolve(parse("y^2*z-x^3"));
  CHECK(res.exponents == std::vector<int>{1, 2, 2});
  const auto c = classify(res);
  CHECK(c.has(kNearlyFree));
  CHECK(c.has(kPlusOneGenerated));
  CHECK(res.tau == bounds(3, 1).tau_max - 1);
  CHECK(c.all_checks_pass());
}

TEST_CASE("classification is deterministic") {
  const auto res = resolve(parse("x*y*z*(x^3+y^3+z^3)"));
  const auto a = classify(res), b = classify(res);
  CHECK(a.flags == b.flags);
  CHECK(verdict_names(a.flags) == verdict_names(b.flags));
  CHECK(verdict_names(kFree | kTypeDrm) == std::vector<std::string>{"FREE", "TYPE_DRM"});
}
