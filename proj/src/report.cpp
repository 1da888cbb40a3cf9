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

#include "report.hpp"

#include <iomanip>
#include <map>
#include <sstream>

namespace jacsyz {

namespace {

const char* reduced_name(Reducedness r) {
  switch (r) {
    case Reducedness::Reduced: return "REDUCED";
    case Reducedness::NotReduced: return "NOT_REDUCED";
    default: return "INCONCLUSIVE";
  }
}

Json rat_triple(const std::array<Rat, 3>& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(c.get_str());
  return out;
}

Json check_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["citation"] = citation(c.name);
  j["expected"] = c.expected.empty() ? Json(nullptr) : Json(c.expected);
  j["computed"] = c.computed.empty() ? Json(nullptr) : Json(c.computed);
  j["status"] = c.passed ? "PASS" : "FAIL";
  j["detail"] = c.detail;
  return j;
}

}  // namespace

std::string citation(const std::string& name) {
  static const std::map<std::string, std::string> table = {
      {"generator_count", "m <= d1 + d2 - d + 3 (at most 2r-d+3 generators of one degree)"},
      {"epsilon_positive", "e_j = d + d_{j+2} - 1 + eps_j with eps_j >= 1"},
      {"exponent_sum", "d1 + d2 = d - 1 + sum eps_j"},
      {"tau_from_betti", "D''(1) = 0 for the Hilbert series denominator D(t)"},
      {"delta_m_sum", "delta_m = sum (eps_j - 1) for curves of type (d,r,m)"},
      {"three_syzygy_tau", "tau = (d-1)(d1+d2+d3) - (d1d2+d2d3+d1d3) for 3-syzygy curves"},
      {"tau_prediction", "closed-form tau of a type (d,r,m) curve for its eps pattern"},
      {"epsilon_pattern", "eps pattern permitted for the given delta_m"},
      {"du_plessis_wall", "tau_min <= tau <= tau_max (tau_max' when 2r >= d); equality iff free; "
                          "tau_max - 1 iff nearly free"},
      {"maximal_tjurina_tau", "tau = tau_max' for maximal Tjurina curves"},
      {"hilbert_closure", "Betti numerator of the resolution equals the Hilbert numerator"},
      {"reducedness", "squarefree restriction to a line certifies a reduced curve"},
      {"rank_nullity", "dim D0(f)_k = 3 dim S_k - dim S_{k+d-1} + dim M(f)_{k+d-1}"},
      {"generators_exact", "every minimal generator is a syzygy over Q"},
      {"saturation_symmetry", "n(f)_a = n(f)_b whenever a + b = 3(d-2)"},
  };
  auto it = table.find(name);
  return it == table.end() ? std::string() : it->second;
}

namespace {

std::string join_strings(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
  return s;
}

}  // namespace

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string join_longs(const std::vector<long>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

Json hilbert_json(const HilbertData& h, const SaturationProfile* sat) {
  Json j;
  j["T"] = h.T;
  j["tau"] = h.tau;
  j["numerator"] = h.numerator;
  const auto syz = syzygy_dims(h, static_cast<int>(h.dims.size()) - 1);
  Json rows = Json::array();
  for (std::size_t k = 0; k < h.dims.size(); ++k) {
    Json row;
    row["k"] = k;
    row["milnor"] = h.dims[k];
    row["syzygies"] = syz[k];
    if (sat) row["saturation"] = k < sat->n_dims.size() ? Json(sat->n_dims[k]) : Json(nullptr);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

std::string hilbert_text(const HilbertData& h, const SaturationProfile* sat) {
  const auto syz = syzygy_dims(h, static_cast<int>(h.dims.size()) - 1);
  std::ostringstream out;
  out << std::setw(4) << "k" << std::setw(10) << "dim M_k" << std::setw(10) << "dim D0_k";
  if (sat) out << std::setw(10) << "n_k";
  out << "\n";
  for (std::size_t k = 0; k < h.dims.size(); ++k) {
    out << std::setw(4) << k << std::setw(10) << h.dims[k] << std::setw(10) << syz[k];
    if (sat) {
      if (k < sat->n_dims.size())
        out << std::setw(10) << sat->n_dims[k];
      else
        out << std::setw(10) << "-";
    }
    out << "\n";
  }
  out << "tau = " << h.tau << "  (dim M_k for k > " << h.T << ")\n";
  return out.str();
}

Json report_json(const Analysis& a, bool timing) {
  const auto& res = a.resolution.data;
  const auto& cls = a.classification;
  Json j;
  j["input"] = a.input;
  j["polynomial"] = to_string(a.f);
  j["degree"] = res.d;
  j["arithmetic"] = a.config.arithmetic().describe();
  j["seed"] = a.config.seed;
  Json red;
  red["verdict"] = reduced_name(a.reduced.verdict);
  red["lines_tried"] = a.reduced.lines_tried;
  if (a.reduced.verdict == Reducedness::Reduced) {
    red["point"] = rat_triple(a.reduced.point);
    red["direction"] = rat_triple(a.reduced.direction);
  }
  j["reduced"] = red;
  j["mdr"] = cls.r;
  j["exponents"] = res.exponents;
  j["m"] = res.m;
  j["e"] = res.relation_degrees;
  j["epsilons"] = res.epsilons;
  j["tau"] = res.tau;
  j["generator_bound"] = a.resolution.profile.bound;
  j["escalations"] = a.resolution.escalations;
  j["hilbert"] = hilbert_json(a.resolution.hilbert, a.saturation ? &*a.saturation : nullptr);
  j["saturation"] = a.saturation ? Json(a.saturation->n_dims) : Json(nullptr);
  j["verdicts"] = verdict_names(cls.flags);
  j["delta_m"] = cls.delta_m ? Json(*cls.delta_m) : Json(nullptr);
  if (cls.bounds.d != 0) {
    Json b;
    b["tau_min"] = cls.bounds.tau_min;
    b["tau_max"] = cls.bounds.tau_max;
    b["tau_max_prime"] = cls.bounds.tau_max_prime;
    b["prime_applies"] = cls.bounds.prime_applies();
    b["m_max"] = cls.bounds.m_max;
    j["bounds"] = b;
  } else {
    j["bounds"] = nullptr;
  }
  Json cases = Json::array();
  for (const auto& c : cls.predicted) {
    Json cj;
    cj["label"] = c.label;
    cj["value"] = c.value;
    cj["epsilons"] = c.epsilons;
    cases.push_back(cj);
  }
  j["tau_candidates"] = cases;
  j["realized_case"] = cls.realized_case ? Json(*cls.realized_case) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& c : cls.checks) checks.push_back(check_json(c));
  for (const auto& c : a.checks) checks.push_back(check_json(c));
  j["checks"] = checks;
  j["status"] = a.all_checks_pass() ? "OK" : "CHECK_FAILED";
  if (timing) j["timing"] = {{"seconds", a.seconds}};
  return j;
}

std::string render_text(const Analysis& a, bool timing) {
  const auto& res = a.resolution.data;
  const auto& cls = a.classification;
  std::ostringstream out;
  out << "input       " << a.input << "\n";
  out << "polynomial  " << to_string(a.f) << "\n";
  out << "degree      " << res.d << "\n";
  out << "arithmetic  " << a.config.arithmetic().describe() << "  seed " << a.config.seed << "\n";
  out << "reduced     " << reduced_name(a.reduced.verdict) << " (" << a.reduced.lines_tried
      << " line(s) tried)\n";
  out << "mdr         " << cls.r << "\n";
  out << "exponents   (" << join_ints(res.exponents) << ")  m = " << res.m << "\n";
  out << "e           (" << join_ints(res.relation_degrees) << ")\n";
  out << "epsilons    (" << join_ints(res.epsilons) << ")\n";
  out << "tau         " << res.tau << "\n";
  out << "verdicts    " << join_strings(verdict_names(cls.flags)) << "\n";
  if (cls.delta_m) out << "delta_m     " << *cls.delta_m << "\n";
  if (cls.bounds.d != 0) {
    out << "bounds      tau_min=" << cls.bounds.tau_min << " tau_max=" << cls.bounds.tau_max
        << " tau_max_prime=" << cls.bounds.tau_max_prime
        << (cls.bounds.prime_applies() ? "" : " (not applicable)") << " m_max=" << cls.bounds.m_max
        << "\n";
  }
  for (const auto& c : cls.predicted)
    out << "candidate   " << c.label << ": tau=" << c.value
        << (c.epsilons.empty() ? "" : " eps=(" + join_ints(c.epsilons) + ")") << "\n";
  if (cls.realized_case) out << "realized    " << *cls.realized_case << "\n";
  out << "generators  bound " << a.resolution.profile.bound << ", escalations "
      << a.resolution.escalations << "\n";
  out << "\n";
  out << hilbert_text(a.resolution.hilbert, a.saturation ? &*a.saturation : nullptr);
  out << "\nchecks\n";
  auto line = [&](const Check& c) {
    out << "  " << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.expected.empty()) out << "  expected " << c.expected << " computed " << c.computed;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << "\n";
  };
  for (const auto& c : cls.checks) line(c);
  for (const auto& c : a.checks) line(c);
  out << "status      " << (a.all_checks_pass() ? "OK" : "CHECK_FAILED") << "\n";
  if (timing) out << "time        " << std::fixed << std::setprecision(3) << a.seconds << " s\n";
  return out.str();
}

}  // namespace jacsyz
