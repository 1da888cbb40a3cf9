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

#include "classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace jacsyz {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

/// (1,...,1, tail) of total length n, or empty when the tail does not fit.
std::vector<int> pattern(int n, std::vector<int> tail) {
  if (n < static_cast<int>(tail.size())) return {};
  std::vector<int> out(n - tail.size(), 1);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

bool all_equal(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

Check make_check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail), {}, {}};
}

Check compare(std::string name, long expected, long computed, std::string detail = {}) {
  return {std::move(name), expected == computed, std::move(detail), std::to_string(expected),
          std::to_string(computed)};
}

}  // namespace

long choose2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

Bounds bounds(int d, int r) {
  if (d < 3 || r < 1 || r > d - 1)
    throw Error(ErrorCode::OutOfRange, "bounds need d >= 3 and 1 <= r <= d-1");
  Bounds b;
  b.d = d;
  b.r = r;
  b.tau_min = static_cast<long>(d - 1) * (d - r - 1);
  b.tau_max = static_cast<long>(d - 1) * (d - 1) - static_cast<long>(r) * (d - r - 1);
  b.tau_max_prime = b.tau_max - choose2(2 * r + 2 - d);
  b.m_max = 2 * r - d + 3;
  return b;
}

std::vector<std::string> verdict_names(unsigned flags) {
  static const std::pair<Verdict, const char*> names[] = {
      {kFree, "FREE"},
      {kNearlyFree, "NEARLY_FREE"},
      {kPlusOneGenerated, "PLUS_ONE_GENERATED"},
      {kMaximalTjurina, "MAXIMAL_TJURINA"},
      {kTypeDrm, "TYPE_DRM"},
      {kSmooth, "SMOOTH"},
      {kGeneric3Syz, "GENERIC_3SYZ"},
      {kOther, "OTHER"},
  };
  std::vector<std::string> out;
  for (const auto& [flag, name] : names)
    if (flags & flag) out.emplace_back(name);
  return out;
}

bool Classification::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

long tau_from_betti(const ResolutionData& res) {
  const auto b = betti_numerator(res);
  long second = 0;
  for (std::size_t i = 2; i < b.size(); ++i) second += static_cast<long>(i * (i - 1)) * b[i];
  return second / 2;
}

std::vector<TauCase> predict_tau(const ResolutionData& res) {
  const int d = res.d, m = res.m;
  const auto& ex = res.exponents;
  std::vector<TauCase> out;
  if (m == 3) {
    const long s = ex[0] + ex[1] + ex[2];
    const long p = static_cast<long>(ex[0]) * ex[1] + static_cast<long>(ex[1]) * ex[2] +
                   static_cast<long>(ex[0]) * ex[2];
    if (all_equal(ex)) {
      const int r = ex[0];
      out.push_back({"type (d,r,3)", 3L * r * (d - 1 - r), {2 * r - d + 1}});
    } else {
      out.push_back({"3-syzygy", (d - 1) * s - p, {}});
    }
    return out;
  }
  if (!all_equal(ex)) throw Error(ErrorCode::OutOfRange, "no closed form for unequal exponents with m != 3");
  const int r = ex[0];
  const int dm = 2 * r - d + 3 - m;
  const long base = static_cast<long>(d) * (d - 1) / 2 + static_cast<long>(r) * (d - r - 2);
  const int n = m - 2;
  switch (dm) {
    case 0:
      out.push_back({"maximal Tjurina", bounds(d, r).tau_max_prime, pattern(n, {})});
      break;
    case 1:
      out.push_back({"delta_m=1", base - 1, pattern(n, {2})});
      break;
    case 2:
      out.push_back({"delta_m=2 case 1", base - 3, pattern(n, {3})});
      out.push_back({"delta_m=2 case 2", base - 2, pattern(n, {2, 2})});
      break;
    case 3:
      out.push_back({"delta_m=3 case 1", base - 6, pattern(n, {4})});
      out.push_back({"delta_m=3 case 2", base - 4, pattern(n, {2, 3})});
      out.push_back({"delta_m=3 case 3", base - 3, pattern(n, {2, 2, 2})});
      break;
    default:
      throw Error(ErrorCode::UnsupportedDelta,
                  "no closed form for delta_m = " + std::to_string(dm) + " with m > 3");
  }
  // drop cases whose ε pattern cannot have m-2 entries
  std::erase_if(out, [&](const TauCase& c) { return n > 0 && c.epsilons.empty(); });
  return out;
}

Check check_epsilon_pattern(const ResolutionData& res) {
  const std::string name = "epsilon_pattern";
  if (res.m < 3 || !all_equal(res.exponents))
    return make_check(name, true, "not applicable");
  std::vector<TauCase> cases;
  try {
    cases = predict_tau(res);
  } catch (const Error& e) {
    return make_check(name, true, "no pattern constraint: " + std::string(e.what()));
  }
  std::vector<int> eps = res.epsilons;
  std::sort(eps.begin(), eps.end());
  int matches = 0;
  std::string which;
  for (const auto& c : cases)
    if (c.epsilons == eps) {
      ++matches;
      which = c.label;
    }
  if (matches == 1) return make_check(name, true, which + " " + join(eps));
  return make_check(name, false, "epsilons " + join(eps) + " match " + std::to_string(matches) +
                                     " permitted patterns");
}

Check dpw_check(const ResolutionData& res) {
  const std::string name = "du_plessis_wall";
  const int d = res.d, r = res.exponents.empty() ? 0 : res.exponents[0];
  if (d < 3 || r < 1 || r > d - 1) return make_check(name, true, "not applicable");
  const Bounds b = bounds(d, r);
  const long t = res.tau;
  std::vector<std::string> failures;
  if (t < b.tau_min || t > b.tau_max) failures.push_back("tau outside [tau_min, tau_max]");
  if (b.prime_applies() && t > b.tau_max_prime) failures.push_back("tau above tau_max_prime");
  const bool free = res.m == 2;
  const bool nearly_free = res.m == 3 && res.exponents[0] + res.exponents[1] == d &&
                           res.exponents[1] == res.exponents[2];
  if ((t == b.tau_max) != free) failures.push_back("tau = tau_max disagrees with freeness");
  if (free && 2 * r >= d) failures.push_back("free curve with 2r >= d");
  if ((t == b.tau_max - 1) != nearly_free)
    failures.push_back("tau = tau_max - 1 disagrees with near freeness");
  if (nearly_free && 2 * r > d) failures.push_back("nearly free curve with 2r > d");
  std::ostringstream detail;
  detail << "tau_min=" << b.tau_min << " tau=" << t << " tau_max=" << b.tau_max;
  if (b.prime_applies()) detail << " tau_max_prime=" << b.tau_max_prime;
  for (const auto& f : failures) detail << "; " << f;
  return make_check(name, failures.empty(), detail.str());
}

Classification classify(const ResolutionData& res) {
  Classification c;
  c.d = res.d;
  c.m = res.m;
  const auto& ex = res.exponents;
  c.r = ex.empty() ? 0 : ex[0];
  const bool have_bounds = c.d >= 3 && c.r >= 1 && c.r <= c.d - 1;
  if (have_bounds) c.bounds = bounds(c.d, c.r);

  if (c.m == 2) c.flags |= kFree;
  if (c.m == 3 && ex[0] + ex[1] == c.d) {
    c.flags |= kPlusOneGenerated;
    if (ex[1] == ex[2]) c.flags |= kNearlyFree;
  }
  if (c.m == 3 && !(c.flags & kPlusOneGenerated)) c.flags |= kGeneric3Syz;
  if (!ex.empty() && all_equal(ex)) {
    c.flags |= kTypeDrm;
    c.delta_m = 2 * c.r - c.d + 3 - c.m;
    if (*c.delta_m == 0) c.flags |= kMaximalTjurina;
  }
  if (res.tau == 0) c.flags |= kSmooth;
  if (c.flags == 0) c.flags = kOther;

  // identities every resolution satisfies
  const int sum_eps = std::accumulate(res.epsilons.begin(), res.epsilons.end(), 0);
  c.checks.push_back(make_check("generator_count",
                                c.m >= 2 && (c.m < 2 || c.m <= ex[0] + ex[1] - c.d + 3)));
  c.checks.push_back(make_check(
      "epsilon_positive",
      std::all_of(res.epsilons.begin(), res.epsilons.end(), [](int e) { return e >= 1; })));
  if (c.m >= 2)
    c.checks.push_back(compare("exponent_sum", c.d - 1 + sum_eps, ex[0] + ex[1], "d1+d2 = d-1+sum(eps)"));
  const long betti_tau = tau_from_betti(res);
  c.checks.push_back(compare("tau_from_betti", res.tau, betti_tau, "B''(1)/2 of the Betti numerator"));
  if (c.delta_m) {
    int excess = 0;
    for (int e : res.epsilons) excess += e - 1;
    if (c.m > 2) c.checks.push_back(compare("delta_m_sum", *c.delta_m, excess, "delta_m = sum(eps-1)"));
  }
  if (c.m == 3) {
    const long s = ex[0] + ex[1] + ex[2];
    const long p = static_cast<long>(ex[0]) * ex[1] + static_cast<long>(ex[1]) * ex[2] +
                   static_cast<long>(ex[0]) * ex[2];
    const long value = (c.d - 1) * s - p;
    c.checks.push_back(compare("three_syzygy_tau", value, res.tau, "(d-1)(d1+d2+d3)-(d1d2+d2d3+d1d3)"));
  }
  if (c.m >= 3) {
    try {
      c.predicted = predict_tau(res);
      std::vector<int> eps = res.epsilons;
      std::sort(eps.begin(), eps.end());
      for (const auto& tc : c.predicted)
        if (tc.epsilons.empty() || tc.epsilons == eps) {
          c.realized_case = tc.label;
          c.checks.push_back(compare("tau_prediction", tc.value, res.tau, tc.label));
          break;
        }
      if (!c.realized_case)
        c.checks.push_back(make_check("tau_prediction", false, "no case matches epsilons " + join(eps)));
    } catch (const Error&) {
      // Δm > 3 or unequal exponents: no closed form to compare
    }
    c.checks.push_back(check_epsilon_pattern(res));
  }
  if (have_bounds) {
    c.checks.push_back(dpw_check(res));
    if (c.has(kMaximalTjurina))
      c.checks.push_back(compare("maximal_tjurina_tau", c.bounds.tau_max_prime, res.tau, "tau = tau_max_prime"));
  }
  return c;
}

}  // namespace jacsyz
