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

#include "families.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace jacsyz {

namespace {

std::string pw(const char* var, int n) {
  if (n == 0) return "1";
  if (n == 1) return var;
  return std::string(var) + "^" + std::to_string(n);
}

/// x^n + y^n - z^n style factor.
std::string fermat_like(int n, const char* sign_z) {
  return "(" + pw("x", n) + "+" + pw("y", n) + sign_z + pw("z", n) + ")";
}

std::string linear_text(long a, long b, long c) {
  HomPoly p(1);
  p.add_term({1, 0, 0}, Rat(a));
  p.add_term({0, 1, 0}, Rat(b));
  p.add_term({0, 0, 1}, Rat(c));
  return "(" + to_string(p) + ")";
}

std::string pair_lines(const std::vector<int>& first, const std::vector<int>& second) {
  std::string s = "y";
  for (int j : first) s += "*" + linear_text(j, -1, -static_cast<long>(j) * j);
  for (int j : second) s += "*" + linear_text(j, 1, -static_cast<long>(j) * j);
  return s;
}

std::vector<Line> pair_line_list(const std::vector<int>& slopes) {
  std::vector<Line> out;
  for (int j : slopes) {
    out.push_back({Rat(j), Rat(-1), Rat(-static_cast<long>(j) * j)});
    out.push_back({Rat(j), Rat(1), Rat(-static_cast<long>(j) * j)});
  }
  return out;
}

const Line kLineY{Rat(0), Rat(1), Rat(0)};

int require(const FamilyInfo& info, const FamilyParams& params) {
  const std::optional<int>& v = info.param == 'd' ? params.d : params.k;
  if (!v)
    throw Error(ErrorCode::Usage,
                "family " + info.name + " takes parameter " + std::string(1, info.param));
  if (*v < info.min || (info.max > 0 && *v > info.max)) {
    std::ostringstream msg;
    msg << "family " << info.name << " needs " << info.param << " >= " << info.min;
    if (info.max > 0) msg << " and " << info.param << " <= " << info.max;
    throw Error(ErrorCode::OutOfRange, msg.str());
  }
  return *v;
}

Point normalize(Point p) {
  for (const auto& c : p)
    if (sgn(c) != 0) {
      const Rat lead = c;
      for (auto& e : p) e /= lead;
      break;
    }
  return p;
}

bool proportional(const Line& a, const Line& b) {
  return normalize(a) == normalize(b);
}

}  // namespace

const std::vector<FamilyInfo>& family_list() {
  static const std::vector<FamilyInfo> list = {
      {"fermat", 'd', 2, 0, "x^d+y^d+z^d"},
      {"prop4.2", 'd', 5, 0, "xyz(x^(d-3)+y^(d-3)+z^(d-3))"},
      {"prop4.3", 'd', 8, 0, "xyz(x^(d-4)y+x^(d-5)z^2+z^(d-5)xy+y^(d-4)z)"},
      {"ex4.8", 'k', 3, 20, "z(x^k-z^k)(y^k-z^k)((x+y)^k-2z^k), degree 3k+1"},
      {"ex5.1", 'd', 6, 20, "(x-2y)(y-3z)(z-5x)(2y+3z+5x)(x^(d-4)+y^(d-4)-z^(d-4))"},
      {"ex5.2", 'd', 7, 20, "z(x^(d-5)+y^(d-5)-z^(d-5))(x^2-yz)(y^2-xz)"},
      {"ex5.3", 'd', 8, 20, "(x^(d-6)+y^(d-6)-z^(d-6))(yz-x^2)(xz-y^2)(xy-z^2)"},
      {"ex5.4", 'd', 8, 20, "(x-z)(2x+3y-5z)(x^2-yz)(y^3+xz^2)(x^(d-7)+y^(d-7)-z^(d-7))"},
      {"thm6.2", 'k', 2, 0, "y times k pairs of lines jx-y-j^2z, jx+y-j^2z, degree 2k+1"},
      {"rk6.3", 'k', 3, 0, "y prod_{j<=k}(jx-y-j^2z) prod_{j<k}(jx+y-j^2z), degree 2k"},
      {"nodal", 'd', 3, 0, "d lines in general position (seeded)"},
  };
  return list;
}

std::string family_expression(const std::string& name, const FamilyParams& params) {
  const FamilyInfo* info = nullptr;
  for (const auto& f : family_list())
    if (f.name == name) info = &f;
  if (!info) throw Error(ErrorCode::Usage, "unknown family: " + name);
  const int v = require(*info, params);

  if (name == "fermat") return pw("x", v) + "+" + pw("y", v) + "+" + pw("z", v);
  if (name == "prop4.2") return "x*y*z*" + fermat_like(v - 3, "+");
  if (name == "prop4.3")
    return "x*y*z*(" + pw("x", v - 4) + "*y+" + pw("x", v - 5) + "*z^2+" + pw("z", v - 5) +
           "*x*y+" + pw("y", v - 4) + "*z)";
  if (name == "ex4.8") {
    const std::string k = std::to_string(v);
    return "z*(x^" + k + "-z^" + k + ")*(y^" + k + "-z^" + k + ")*((x+y)^" + k + "-2*z^" + k + ")";
  }
  if (name == "ex5.1") return "(x-2*y)*(y-3*z)*(z-5*x)*(2*y+3*z+5*x)*" + fermat_like(v - 4, "-");
  if (name == "ex5.2") return "z*" + fermat_like(v - 5, "-") + "*(x^2-y*z)*(y^2-x*z)";
  if (name == "ex5.3") return fermat_like(v - 6, "-") + "*(y*z-x^2)*(x*z-y^2)*(x*y-z^2)";
  if (name == "ex5.4")
    return "(x-z)*(2*x+3*y-5*z)*(x^2-y*z)*(y^3+x*z^2)*" + fermat_like(v - 7, "-");
  if (name == "thm6.2") return build_thm62_arrangement(v).expression;
  if (name == "rk6.3") {
    std::vector<int> first, second;
    for (int j = 1; j <= v; ++j) first.push_back(j);
    for (int j = 1; j < v; ++j) second.push_back(j);
    return pair_lines(first, second);
  }
  return nodal_arrangement_expression(v, params.seed);
}

HomPoly build(const std::string& name, const FamilyParams& params) {
  return parse(family_expression(name, params));
}

long ArrangementCombinatorics::tau() const {
  long t = 0;
  for (const auto& [p, through] : points) {
    const long m = static_cast<long>(through.size());
    t += (m - 1) * (m - 1);
  }
  return t;
}

bool ArrangementCombinatorics::only_double_and_triple() const {
  for (const auto& [j, count] : n)
    if (j > 3 && count > 0) return false;
  return true;
}

Line line_of(const HomPoly& linear) {
  if (linear.degree() != 1) throw Error(ErrorCode::OutOfRange, "not a linear form: " + to_string(linear));
  return {linear.coefficient({1, 0, 0}), linear.coefficient({0, 1, 0}),
          linear.coefficient({0, 0, 1})};
}

ArrangementCombinatorics line_arrangement_combinatorics(const std::vector<Line>& lines) {
  ArrangementCombinatorics out;
  out.d = static_cast<int>(lines.size());
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      if (proportional(lines[a], lines[b]))
        throw Error(ErrorCode::DuplicateLine,
                    "lines " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
      const Line& u = lines[a];
      const Line& v = lines[b];
      const Point p = normalize({u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                 u[0] * v[1] - u[1] * v[0]});
      auto& through = out.points[p];
      for (int idx : {static_cast<int>(a), static_cast<int>(b)})
        if (std::find(through.begin(), through.end(), idx) == through.end()) through.push_back(idx);
    }
  for (auto& [p, through] : out.points) {
    std::sort(through.begin(), through.end());
    ++out.n[static_cast<int>(through.size())];
  }
  return out;
}

std::vector<Line> arrangement_lines(const std::string& text) {
  std::vector<Line> out;
  for (const auto& f : parse_factors(text)) {
    if (f.poly.degree() != 1) throw Error(ErrorCode::OutOfRange, "factor of degree " +
                                                                     std::to_string(f.poly.degree()) +
                                                                     " in a line arrangement");
    if (f.multiplicity != 1) throw Error(ErrorCode::DuplicateLine, "repeated line " + to_string(f.poly));
    const Line l = line_of(f.poly);
    for (const auto& prev : out)
      if (proportional(prev, l)) throw Error(ErrorCode::DuplicateLine, "repeated line " + to_string(f.poly));
    out.push_back(l);
  }
  return out;
}

Thm62Arrangement build_thm62_arrangement(int k) {
  if (k < 2) throw Error(ErrorCode::OutOfRange, "thm6.2 needs k >= 2");
  auto off_axis_triples = [](const ArrangementCombinatorics& c) {
    for (const auto& [p, through] : c.points)
      if (through.size() >= 3 && (sgn(p[1]) != 0 || through.size() > 3)) return true;
    return false;
  };
  std::vector<int> slopes;
  for (int j = 1; static_cast<int>(slopes.size()) < k; ++j) {
    if (j > 20 * k) throw Error(ErrorCode::HypothesisFailure, "no admissible slope found");
    std::vector<int> trial = slopes;
    trial.push_back(j);
    auto lines = pair_line_list(trial);
    lines.push_back(kLineY);
    if (!off_axis_triples(line_arrangement_combinatorics(lines))) slopes = std::move(trial);
  }

  Thm62Arrangement out;
  out.k = k;
  out.slopes = slopes;
  const auto pairs = pair_line_list(slopes);
  const auto sub = line_arrangement_combinatorics(pairs);
  const long dprime = 2L * k;
  if (sub.count(2) != dprime * (dprime - 1) / 2 || sub.points.size() != static_cast<std::size_t>(sub.count(2)))
    throw Error(ErrorCode::HypothesisFailure, "pair lines are not a nodal arrangement");
  int nodes_on_axis = 0;
  for (const auto& [p, through] : sub.points)
    if (sgn(p[1]) == 0) ++nodes_on_axis;
  if (nodes_on_axis != k)
    throw Error(ErrorCode::HypothesisFailure, "y = 0 meets " + std::to_string(nodes_on_axis) + " nodes");

  auto all = pairs;
  all.push_back(kLineY);
  out.combinatorics = line_arrangement_combinatorics(all);
  const long d = dprime + 1;
  bool triples_on_axis = true;
  for (const auto& [p, through] : out.combinatorics.points)
    if (through.size() == 3 && sgn(p[1]) != 0) triples_on_axis = false;
  if (out.combinatorics.count(3) != k || !triples_on_axis || !out.combinatorics.only_double_and_triple() ||
      out.combinatorics.count(2) != d * (d - 1) / 2 - 3L * k)
    throw Error(ErrorCode::HypothesisFailure, "triple points are not exactly the k nodes on y = 0");

  out.expression = "y";
  for (int j : slopes)
    out.expression += "*" + linear_text(j, -1, -static_cast<long>(j) * j) + "*" +
                      linear_text(j, 1, -static_cast<long>(j) * j);
  out.poly = parse(out.expression);
  return out;
}

std::string nodal_arrangement_expression(int d, std::uint64_t seed) {
  if (d < 3) throw Error(ErrorCode::OutOfRange, "nodal arrangement needs d >= 3");
  for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
    std::seed_seq seq{seed, attempt, static_cast<std::uint64_t>(d)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<Line> lines;
    std::vector<std::array<long, 3>> raw;
    for (int i = 0; i < d; ++i) {
      std::array<long, 3> c{0, 0, 0};
      while (c[0] == 0 && c[1] == 0 && c[2] == 0) c = {coeff(rng), coeff(rng), coeff(rng)};
      raw.push_back(c);
      lines.push_back({Rat(c[0]), Rat(c[1]), Rat(c[2])});
    }
    try {
      const auto comb = line_arrangement_combinatorics(lines);
      if (comb.count(2) != d * (d - 1) / 2) continue;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DuplicateLine) continue;
      throw;
    }
    std::string s;
    for (const auto& c : raw) s += (s.empty() ? "" : "*") + linear_text(c[0], c[1], c[2]);
    return s;
  }
  throw Error(ErrorCode::RetryExhausted, "no nodal arrangement after 32 attempts");
}

HomPoly nodal_arrangement(int d, std::uint64_t seed) {
  return parse(nodal_arrangement_expression(d, seed));
}

}  // namespace jacsyz
