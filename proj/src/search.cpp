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

#include "search.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "errors.hpp"
#include "parallel.hpp"
#include "registry.hpp"

namespace jacsyz {

namespace {

using SJson = nlohmann::ordered_json;

std::string hex(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Pattern with exponent holes evaluated, plus the coefficient hole names
/// in order of first appearance. Returns false when some exponent is < 1.
bool prepare(const std::string& pattern, int d, std::string& out, std::vector<char>& holes) {
  out.clear();
  holes.clear();
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const char c = pattern[i];
    if (c == '<') {
      const auto close = pattern.find('>', i);
      if (close == std::string::npos) throw Error(ErrorCode::Registry, "unclosed '<' in " + pattern);
      const long e = eval_formula(pattern.substr(i + 1, close - i - 1), {{'d', d}});
      if (e < 1) return false;
      out += std::to_string(e);
      i = close;
    } else if (c == '{') {
      if (i + 2 >= pattern.size() || pattern[i + 2] != '}' ||
          !std::islower(static_cast<unsigned char>(pattern[i + 1])))
        throw Error(ErrorCode::Registry, "coefficient holes are {a}..{z} in " + pattern);
      const char h = pattern[i + 1];
      if (std::find(holes.begin(), holes.end(), h) == holes.end()) holes.push_back(h);
      out += pattern.substr(i, 3);
      i += 2;
    } else {
      out += c;
    }
  }
  return true;
}

std::string fill(const std::string& prepared, const std::vector<char>& holes,
                 const std::vector<Rat>& values) {
  std::string out;
  for (std::size_t i = 0; i < prepared.size(); ++i) {
    if (prepared[i] == '{') {
      const char h = prepared[i + 1];
      const auto at = std::find(holes.begin(), holes.end(), h) - holes.begin();
      out += "(" + values[static_cast<std::size_t>(at)].get_str() + ")";
      i += 2;
    } else {
      out += prepared[i];
    }
  }
  return out;
}

std::set<std::uint64_t> stored_hashes(const std::string& path) {
  std::set<std::uint64_t> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const auto j = SJson::parse(line);
      out.insert(std::stoull(j.at("hash").get<std::string>(), nullptr, 16));
    } catch (const std::exception& e) {
      throw Error(ErrorCode::Io, "corrupt certificate store " + path + ": " + e.what());
    }
  }
  return out;
}

bool has_type(const ResolutionData& res, int d, int r, int m) {
  if (res.d != d || res.m != m) return false;
  for (int e : res.exponents)
    if (e != r) return false;
  return true;
}

}  // namespace

std::vector<SearchTemplate> load_templates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open templates " + path);
  std::vector<SearchTemplate> out;
  try {
    const auto doc = SJson::parse(in);
    for (const auto& t : doc.at("templates"))
      out.push_back({t.at("name").get<std::string>(), t.at("pattern").get<std::string>()});
  } catch (const SJson::exception& e) {
    throw Error(ErrorCode::Registry, "templates " + path + ": " + e.what());
  }
  return out;
}

std::vector<Rat> parse_pool(const std::string& text) {
  std::vector<Rat> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    Rat q;
    if (q.set_str(token, 10) != 0 || (token.find('/') != std::string::npos && token.back() == '/'))
      throw Error(ErrorCode::Usage, "bad pool entry '" + token + "'");
    q.canonicalize();
    out.push_back(q);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token += c;
  }
  flush();
  if (out.empty()) throw Error(ErrorCode::Usage, "empty coefficient pool");
  return out;
}

std::string certificate_json(const Certificate& c, const SearchRequest& request) {
  SJson j;
  j["hash"] = hex(c.hash);
  j["id"] = "search:(" + std::to_string(request.d) + "," + std::to_string(request.r) + "," +
            std::to_string(request.m) + "):" + hex(c.hash);
  j["template"] = c.template_name;
  j["expression"] = c.expression;
  j["polynomial"] = to_string(parse(c.expression));
  SJson expected;
  expected["type"] = {request.d, request.r, request.m};
  expected["tau"] = c.resolution.tau;
  if (c.classification.delta_m) expected["delta_m"] = *c.classification.delta_m;
  j["expected"] = expected;
  SJson res;
  res["d"] = c.resolution.d;
  res["m"] = c.resolution.m;
  res["exponents"] = c.resolution.exponents;
  res["e"] = c.resolution.relation_degrees;
  res["epsilons"] = c.resolution.epsilons;
  res["tau"] = c.resolution.tau;
  res["free"] = c.resolution.free;
  j["resolution"] = res;
  j["verdicts"] = verdict_names(c.classification.flags);
  j["realized_case"] = c.classification.realized_case ? SJson(*c.classification.realized_case) : SJson(nullptr);
  j["arithmetic"] = "rational";
  j["prime_agrees"] = c.prime_agrees;
  SJson line;
  for (const auto& q : c.reduced.point) line["point"].push_back(q.get_str());
  for (const auto& q : c.reduced.direction) line["direction"].push_back(q.get_str());
  j["reduced_line"] = line;
  j["source"] = "search";
  return j.dump();
}

SearchResult search(const SearchRequest& req, const Config& config,
                    const std::function<void(const Certificate&)>& on_certificate) {
  if (2 * req.r < req.d || req.r > req.d - 1 || req.m < 3 || req.m >= 2 * req.r - req.d + 3)
    throw Error(ErrorCode::OutOfRange, "search needs d/2 <= r <= d-1 and 3 <= m < 2r-d+3");
  if (req.pool.empty()) throw Error(ErrorCode::Usage, "empty coefficient pool");

  SearchResult result;
  std::set<std::uint64_t> in_store;
  std::ofstream store;
  if (!req.store.empty()) {
    in_store = stored_hashes(req.store);
    store.open(req.store, std::ios::app);
    if (!store) throw Error(ErrorCode::Io, "cannot append to " + req.store);
  }
  const Arithmetic prime = Arithmetic::modular(config.prime.value_or(kDefaultPrime));

  // Enumerate first so the budget and the candidate order do not depend on
  // how the evaluation is scheduled.
  struct Candidate {
    const SearchTemplate* tmpl;
    std::string text;
    HomPoly f;
    std::uint64_t hash;
  };
  std::vector<Candidate> candidates;
  std::set<std::uint64_t> seen;
  for (const auto& t : req.templates) {
    if (static_cast<int>(candidates.size()) >= req.budget) break;
    std::string prepared;
    std::vector<char> holes;
    if (!prepare(t.pattern, req.d, prepared, holes)) continue;
    std::vector<std::size_t> digit(holes.size(), 0);
    for (bool more = true; more && static_cast<int>(candidates.size()) < req.budget;) {
      std::vector<Rat> values;
      for (auto i : digit) values.push_back(req.pool[i]);
      // advance the mixed-radix counter, last hole fastest
      more = false;
      for (std::size_t i = digit.size(); i-- > 0;) {
        if (++digit[i] < req.pool.size()) {
          more = true;
          break;
        }
        digit[i] = 0;
      }

      std::string text = fill(prepared, holes, values);
      HomPoly f;
      try {
        f = parse(text);
      } catch (const Error&) {
        continue;
      }
      if (f.degree() != req.d) break;  // the whole template has the wrong degree
      const auto h = canonical_hash(f);
      if (!seen.insert(h).second) {
        ++result.stats.duplicates;
        continue;
      }
      candidates.push_back({&t, std::move(text), std::move(f), h});
    }
  }
  result.stats.candidates = static_cast<int>(candidates.size());

  enum class Stage { Rejected, Prefiltered, Disagrees, Certified };
  struct Outcome {
    Stage stage = Stage::Rejected;
    Certificate cert;
  };
  std::vector<Outcome> outcomes(candidates.size());

  auto evaluate = [&](std::size_t k) {
    const Candidate& c = candidates[k];
    Outcome& out = outcomes[k];
    Certificate& cert = out.cert;
    try {
      if (mdr(c.f, prime) != req.r) return;
      cert.reduced = is_reduced(c.f, config.seed, prime);
      if (cert.reduced.verdict != Reducedness::Reduced) return;
      // generators above the bound would break closure and escalate it
      ResolveOptions opts;
      opts.arithmetic = prime;
      opts.bound = std::max(req.r, req.d - 1);
      const auto modp = resolve(c.f, opts);
      if (!has_type(modp, req.d, req.r, req.m)) return;
      out.stage = Stage::Prefiltered;
      opts.arithmetic = Arithmetic::rational();
      cert.resolution = resolve(c.f, opts);
      cert.prime_agrees = cert.resolution == modp;
    } catch (const Error&) {
      return;
    }
    if (!cert.prime_agrees) {
      out.stage = Stage::Disagrees;
      return;
    }
    if (!has_type(cert.resolution, req.d, req.r, req.m)) return;
    cert.classification = classify(cert.resolution);
    if (!cert.classification.all_checks_pass()) return;
    cert.hash = c.hash;
    cert.template_name = c.tmpl->name;
    cert.expression = c.text;
    out.stage = Stage::Certified;
  };

  auto commit = [&](std::size_t k) {
    Outcome& out = outcomes[k];
    if (out.stage != Stage::Rejected) ++result.stats.prefilter_passed;
    if (out.stage == Stage::Disagrees) ++result.stats.disagreements;
    if (out.stage != Stage::Certified) return true;
    Certificate& cert = out.cert;
    if (in_store.count(cert.hash)) {
      ++result.stats.already_stored;
    } else if (store.is_open()) {
      store << certificate_json(cert, req) << "\n";
      store.flush();
      in_store.insert(cert.hash);
    }
    if (on_certificate) on_certificate(cert);
    result.certificates.push_back(std::move(cert));
    return req.max_results <= 0 || static_cast<int>(result.certificates.size()) < req.max_results;
  };

  ordered_parallel(candidates.size(), 0, evaluate, commit);
  return result;
}

}  // namespace jacsyz
