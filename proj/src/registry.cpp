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

#include "registry.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <json.hpp>

#include "errors.hpp"
#include "families.hpp"
#include "parallel.hpp"
#include "report.hpp"

namespace jacsyz {

namespace {

class FormulaParser {
 public:
  FormulaParser(const std::string& text, const std::map<char, long>& vars) : s_(text), vars_(vars) {}

  long run() {
    const long v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing text");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Registry, "bad formula '" + s_ + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long expr() {
    long v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  long term() {
    long v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const long w = unary();
        if (w == 0 || v % w != 0) fail("inexact division");
        v /= w;
      } else {
        return v;
      }
    }
  }
  long unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return atom();
  }
  long atom() {
    skip();
    if (eat('(')) {
      const long v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = v * 10 + (s_[pos_++] - '0');
      return v;
    }
    auto it = vars_.find(c);
    if (it == vars_.end()) fail(std::string("unknown symbol '") + c + "'");
    ++pos_;
    return it->second;
  }

  const std::string& s_;
  const std::map<char, long>& vars_;
  std::size_t pos_ = 0;
};

using RJson = nlohmann::json;

long value_of(const RJson& j, const std::map<char, long>& vars) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) return eval_formula(j.get<std::string>(), vars);
  throw Error(ErrorCode::Registry, "expected a number or formula, got " + j.dump());
}

/// Adds the claims in `j` on top of `e`.
void merge_expected(Expected& e, const RJson& j, const std::map<char, long>& vars) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const RJson& v = it.value();
    if (key == "type") {
      if (!v.is_array() || v.size() != 3) throw Error(ErrorCode::Registry, "type needs [d, r, m]");
      e.d = static_cast<int>(value_of(v[0], vars));
      e.r = static_cast<int>(value_of(v[1], vars));
      e.m = static_cast<int>(value_of(v[2], vars));
    } else if (key == "exponents") {
      std::vector<int> ex;
      for (const auto& x : v) ex.push_back(static_cast<int>(value_of(x, vars)));
      e.exponents = ex;
    } else if (key == "mdr") {
      e.mdr = static_cast<int>(value_of(v, vars));
    } else if (key == "tau") {
      e.tau = value_of(v, vars);
    } else if (key == "delta_m") {
      e.delta_m = static_cast<int>(value_of(v, vars));
    } else if (key == "epsilon_case") {
      e.epsilon_case = static_cast<int>(value_of(v, vars));
    } else if (key == "epsilon_all") {
      e.epsilon_all = static_cast<int>(value_of(v, vars));
    } else if (key == "verdicts") {
      e.verdicts = v.get<std::vector<std::string>>();
    } else {
      throw Error(ErrorCode::Registry, "unknown expected field '" + key + "'");
    }
  }
}

std::string substitute(std::string pattern, char param, long value) {
  const std::string hole = std::string("{") + param + "}";
  for (std::size_t at; (at = pattern.find(hole)) != std::string::npos;)
    pattern.replace(at, hole.size(), std::to_string(value));
  return pattern;
}

std::string tuple(const std::vector<int>& v) { return "(" + join_ints(v) + ")"; }

}  // namespace

long eval_formula(const std::string& text, const std::map<char, long>& vars) {
  return FormulaParser(text, vars).run();
}

std::string default_registry_path() { return std::string(JACSYZ_DATA_DIR) + "/registry.json"; }
std::string default_templates_path() { return std::string(JACSYZ_DATA_DIR) + "/templates.json"; }

bool id_matches(const std::string& pattern, const std::string& id) {
  return pattern.empty() || fnmatch(pattern.c_str(), id.c_str(), 0) == 0;
}

std::vector<CurveEntry> load_registry(const std::string& path, const RegistryOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open registry " + path);
  RJson doc;
  try {
    doc = RJson::parse(in);
  } catch (const RJson::exception& e) {
    throw Error(ErrorCode::Registry, "registry " + path + ": " + e.what());
  }
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw Error(ErrorCode::Registry, "registry has no entries array");

  std::vector<CurveEntry> out;
  try {
    for (const auto& item : doc["entries"]) {
      const std::string id = item.at("id").get<std::string>();
      const std::string source = item.value("source", "");
      const bool flagged = item.value("flagged", false);
      const std::string note = item.value("note", "");
      const RJson expected = item.value("expected", RJson::object());

      if (item.contains("expression")) {
        CurveEntry e;
        e.id = id;
        e.expression = item["expression"].get<std::string>();
        e.degree = parse(e.expression).degree();
        merge_expected(e.expected, expected, {});
        e.source = source;
        e.flagged = flagged;
        e.note = note;
        if (options.all || e.degree <= options.max_degree) out.push_back(std::move(e));
        continue;
      }

      const std::string family = item.at("family").get<std::string>();
      const std::string param_name = item.at("param").get<std::string>();
      if (param_name != "d" && param_name != "k")
        throw Error(ErrorCode::Registry, id + ": param must be d or k");
      const char param = param_name[0];
      const auto range = item.at("range").get<std::vector<int>>();
      if (range.size() != 2) throw Error(ErrorCode::Registry, id + ": range needs [lo, hi]");
      const std::string degree_formula = item.value("degree", std::string(1, param));
      const RJson instances = item.value("instances", RJson::object());

      for (int v = range[0]; v <= range[1]; ++v) {
        const std::map<char, long> vars{{param, v}};
        const int degree = static_cast<int>(eval_formula(degree_formula, vars));
        if (!options.all && degree > options.max_degree) continue;
        CurveEntry e;
        e.id = substitute(id, param, v);
        FamilyParams fp;
        (param == 'd' ? fp.d : fp.k) = v;
        e.expression = family_expression(family, fp);
        e.degree = degree;
        merge_expected(e.expected, expected, vars);
        e.source = source;
        e.flagged = flagged;
        e.note = note;
        const std::string key = std::to_string(v);
        if (instances.contains(key)) {
          const RJson& inst = instances[key];
          merge_expected(e.expected, inst.value("expected", RJson::object()), vars);
          e.flagged = inst.value("flagged", e.flagged);
          if (inst.contains("note")) e.note = inst["note"].get<std::string>();
        }
        out.push_back(std::move(e));
      }
    }
  } catch (const RJson::exception& e) {
    throw Error(ErrorCode::Registry, "registry " + path + ": " + e.what());
  }
  return out;
}

const char* entry_status_name(EntryStatus s) {
  switch (s) {
    case EntryStatus::Match: return "MATCH";
    case EntryStatus::Mismatch: return "MISMATCH";
    default: return "ERROR";
  }
}

EntryResult verify_entry(const CurveEntry& entry, const Config& config) {
  EntryResult r;
  r.entry = entry;
  try {
    r.analysis = analyze(entry.expression, config);
  } catch (const Error& e) {
    r.status = EntryStatus::Error;
    r.error = std::string(error_code_name(e.code())) + ": " + e.what();
    return r;
  }
  const Analysis& a = *r.analysis;
  const auto& res = a.resolution.data;
  const auto& cls = a.classification;
  const Expected& x = entry.expected;
  auto add = [&](std::string field, std::string claimed, std::string computed, bool match) {
    r.fields.push_back({std::move(field), std::move(claimed), std::move(computed), match});
  };

  if (x.d && x.r && x.m) {
    const bool equal = std::all_of(res.exponents.begin(), res.exponents.end(),
                                   [&](int e) { return e == res.exponents.front(); });
    std::string computed = equal ? "(" + std::to_string(res.d) + "," + std::to_string(cls.r) + "," +
                                       std::to_string(res.m) + ")"
                                 : "d=" + std::to_string(res.d) + " exponents " + tuple(res.exponents);
    add("type", "(" + std::to_string(*x.d) + "," + std::to_string(*x.r) + "," + std::to_string(*x.m) + ")",
        computed, equal && res.d == *x.d && cls.r == *x.r && res.m == *x.m);
  }
  if (x.exponents) add("exponents", tuple(*x.exponents), tuple(res.exponents), res.exponents == *x.exponents);
  if (x.mdr) add("mdr", std::to_string(*x.mdr), std::to_string(cls.r), cls.r == *x.mdr);
  if (x.tau) add("tau", std::to_string(*x.tau), std::to_string(res.tau), res.tau == *x.tau);
  if (x.delta_m) {
    const std::string computed = cls.delta_m ? std::to_string(*cls.delta_m) : "n/a";
    add("delta_m", std::to_string(*x.delta_m), computed, cls.delta_m && *cls.delta_m == *x.delta_m);
  }
  if (x.epsilon_case) {
    const std::string suffix = " case " + std::to_string(*x.epsilon_case);
    const std::string computed = cls.realized_case.value_or("none");
    const bool match = computed.size() >= suffix.size() &&
                       computed.compare(computed.size() - suffix.size(), suffix.size(), suffix) == 0;
    add("epsilon_case", "case " + std::to_string(*x.epsilon_case), computed + " " + tuple(res.epsilons),
        match);
  }
  if (x.epsilon_all) {
    const bool match = std::all_of(res.epsilons.begin(), res.epsilons.end(),
                                   [&](int e) { return e == *x.epsilon_all; });
    add("epsilons", "all " + std::to_string(*x.epsilon_all), tuple(res.epsilons), match);
  }
  if (!x.verdicts.empty()) {
    const auto names = verdict_names(cls.flags);
    std::string claimed, computed;
    bool match = true;
    for (const auto& v : x.verdicts) {
      claimed += (claimed.empty() ? "" : " ") + v;
      if (std::find(names.begin(), names.end(), v) == names.end()) match = false;
    }
    for (const auto& v : names) computed += (computed.empty() ? "" : " ") + v;
    add("verdicts", claimed, computed, match);
  }
  for (const auto& f : r.fields)
    if (!f.match) r.status = EntryStatus::Mismatch;
  return r;
}

std::string describe(const EntryResult& r) {
  std::string s = std::string(entry_status_name(r.status)) + " " + r.entry.id;
  if (r.status == EntryStatus::Error) {
    s += " " + r.error;
  } else {
    std::string mismatched;
    for (const auto& f : r.fields)
      if (!f.match) mismatched += (mismatched.empty() ? " " : "; ") + f.field + ": computed " + f.computed + ", claimed " + f.claimed;
    s += mismatched;
  }
  if (r.entry.flagged) s += " (flagged)";
  return s;
}

std::vector<EntryResult> verify_entries(const std::vector<CurveEntry>& entries, const Config& config,
                                        unsigned threads, const std::function<void(const EntryResult&)>& on_result) {
  std::vector<EntryResult> results(entries.size());
  ordered_parallel(
      entries.size(), threads, [&](std::size_t i) { results[i] = verify_entry(entries[i], config); },
      [&](std::size_t i) {
        if (on_result) on_result(results[i]);
        return true;
      });
  return results;
}

}  // namespace jacsyz
