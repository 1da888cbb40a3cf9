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

// Command-line front end. Talks to the engine only through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jacsyz/jacsyz.h"

namespace {

struct ConfigDeleter {
  void operator()(jacsyz_config* c) const { jacsyz_config_free(c); }
};
using ConfigPtr = std::unique_ptr<jacsyz_config, ConfigDeleter>;

struct Common {
  std::optional<std::uint32_t> prime;
  std::optional<std::uint64_t> seed;
  int bound = 0;
  bool exact = false;
  bool saturation = false;
  bool json = false;
};

int fail(int status) {
  std::cerr << "jacsyz: " << jacsyz_last_error_code() << ": " << jacsyz_last_error() << "\n";
  return status;
}

/// Emits an owned C string and frees it.
void emit(char* text, std::FILE* to = stdout) {
  std::fputs(text, to);
  jacsyz_string_free(text);
}

int make_config(const Common& c, ConfigPtr& out) {
  out.reset(jacsyz_config_new());
  if (!out) return fail(JACSYZ_ERR_INTERNAL);
  int s = jacsyz_config_load_environment(out.get());
  if (s != JACSYZ_OK) return s;
  if (c.prime && (s = jacsyz_config_set_prime(out.get(), *c.prime)) != JACSYZ_OK) return s;
  if (c.seed && (s = jacsyz_config_set_seed(out.get(), *c.seed)) != JACSYZ_OK) return s;
  if ((s = jacsyz_config_set_bound(out.get(), c.bound)) != JACSYZ_OK) return s;
  jacsyz_config_set_exact(out.get(), c.exact ? 1 : 0);
  jacsyz_config_set_saturation(out.get(), c.saturation ? 1 : 0);
  return JACSYZ_OK;
}

void add_arith(CLI::App* cmd, Common& c) {
  cmd->add_option("--prime", c.prime, "prime modulus for the prime-field pass (2^20 < P < 2^31)");
  cmd->add_flag("--exact", c.exact, "rational arithmetic throughout (slow on large curves)");
  cmd->add_option("--seed", c.seed, "seed for the reducedness lines and the nodal builder");
}

int run_analysis(const std::string& poly, const Common& c, bool timing) {
  ConfigPtr cfg;
  if (int s = make_config(c, cfg); s != JACSYZ_OK) return fail(s);
  jacsyz_analysis* a = nullptr;
  if (int s = jacsyz_analyze(poly.c_str(), cfg.get(), &a); s != JACSYZ_OK) return fail(s);
  char* text = nullptr;
  const int s = jacsyz_analysis_report(a, c.json ? 1 : 0, timing ? 1 : 0, &text);
  const bool ok = jacsyz_analysis_checks_pass(a) == 1;
  jacsyz_analysis_free(a);
  if (s != JACSYZ_OK) return fail(s);
  emit(text);
  return ok ? 0 : JACSYZ_ERR_CLOSURE;
}

void print_line(const char* line, void*) {
  std::printf("%s\n", line);
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jacsyz: Jacobian syzygies, resolutions and Tjurina numbers of plane curves"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(jacsyz_version()));

  Common common;
  bool timing = false;

  std::string poly;
  auto* analyze = app.add_subcommand("analyze", "resolve and classify one curve");
  analyze->add_option("poly", poly, "homogeneous polynomial in x, y, z")->required();
  analyze->add_flag("--json", common.json, "JSON report");
  analyze->add_flag("--saturation", common.saturation, "also compute n(f)_k = dim N(f)_k");
  analyze->add_option("--bound", common.bound, "generator search bound (default 2d)");
  analyze->add_flag("--timing", timing, "include wall-clock time in the report");
  add_arith(analyze, common);

  std::string glob, registry;
  bool all = false;
  auto* verify = app.add_subcommand("verify-paper", "check every registry example against its claims");
  verify->add_option("glob", glob, "id filter, e.g. 'prop4.2:*'");
  verify->add_option("--registry", registry, "registry file (default: the shipped one)");
  verify->add_flag("--all", all, "include instances above degree 13");
  verify->add_flag("--json", common.json, "JSON summary");
  add_arith(verify, common);

  std::string family_name;
  std::vector<std::string> family_params;
  bool family_analyze = false, family_list = false;
  auto* family = app.add_subcommand("family", "print a member of a curve family");
  family->add_option("name", family_name, "family name (see --list)");
  family->add_option("params", family_params, "k=.. or d=.., optionally seed=..");
  family->add_flag("--list", family_list, "list the families");
  family->add_flag("--analyze", family_analyze, "analyze the curve as well");
  family->add_flag("--json", common.json, "JSON report with --analyze");
  add_arith(family, common);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function table of the Milnor algebra");
  hilbert->add_option("poly", poly, "homogeneous polynomial in x, y, z")->required();
  hilbert->add_flag("--saturation", common.saturation, "add the n(f)_k column");
  hilbert->add_flag("--json", common.json, "JSON table");
  add_arith(hilbert, common);

  int sd = 0, sr = 0, sm = 0, budget = 500;
  std::string pool = "-3,-1,1,2,3", store, templates;
  auto* search = app.add_subcommand("search", "look for certified curves of type (d,r,m)");
  search->add_option("--d", sd, "degree")->required();
  search->add_option("--r", sr, "common exponent")->required();
  search->add_option("--m", sm, "number of generators")->required();
  search->add_option("--pool", pool, "coefficient pool, e.g. \"-3,-1,1,2,3\"");
  search->add_option("--budget", budget, "distinct candidates to examine");
  search->add_option("--store", store, "append certificates to this JSON-lines file");
  search->add_option("--templates", templates, "template file (default: the shipped one)");
  add_arith(search, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : JACSYZ_ERR_USAGE;
  }

  if (analyze->parsed()) return run_analysis(poly, common, timing);

  if (hilbert->parsed()) {
    ConfigPtr cfg;
    if (int s = make_config(common, cfg); s != JACSYZ_OK) return fail(s);
    char* text = nullptr;
    if (int s = jacsyz_hilbert(poly.c_str(), cfg.get(), common.json ? 1 : 0, &text); s != JACSYZ_OK)
      return fail(s);
    emit(text);
    return 0;
  }

  if (family->parsed()) {
    if (family_list || family_name.empty()) {
      char* text = nullptr;
      if (int s = jacsyz_family_list(&text); s != JACSYZ_OK) return fail(s);
      emit(text);
      return family_list ? 0 : JACSYZ_ERR_USAGE;
    }
    char param = 0;
    long value = 0;
    std::uint64_t seed = common.seed.value_or(0);
    for (const auto& p : family_params) {
      const auto eq = p.find('=');
      const std::string key = p.substr(0, eq);
      char* end = nullptr;
      const std::string rhs = eq == std::string::npos ? "" : p.substr(eq + 1);
      const long v = std::strtol(rhs.c_str(), &end, 10);
      if (eq == std::string::npos || rhs.empty() || *end != '\0') {
        std::cerr << "jacsyz: expected k=N, d=N or seed=N, got '" << p << "'\n";
        return JACSYZ_ERR_USAGE;
      }
      if (key == "seed") {
        seed = static_cast<std::uint64_t>(v);
      } else if (key == "d" || key == "k") {
        param = key[0];
        value = v;
      } else {
        std::cerr << "jacsyz: unknown family parameter '" << key << "'\n";
        return JACSYZ_ERR_USAGE;
      }
    }
    if (!param) {
      std::cerr << "jacsyz: family " << family_name << " needs k=N or d=N\n";
      return JACSYZ_ERR_USAGE;
    }
    char* expr = nullptr;
    if (int s = jacsyz_family(family_name.c_str(), param, static_cast<int>(value), seed, &expr); s != JACSYZ_OK)
      return fail(s);
    const std::string text = expr;
    jacsyz_string_free(expr);
    if (!family_analyze) {
      std::printf("%s\n", text.c_str());
      return 0;
    }
    if (!common.json) std::printf("%s\n\n", text.c_str());
    return run_analysis(text, common, false);
  }

  if (verify->parsed()) {
    ConfigPtr cfg;
    if (int s = make_config(common, cfg); s != JACSYZ_OK) return fail(s);
    jacsyz_verify_run* run = nullptr;
    const int s = jacsyz_verify_paper(registry.empty() ? nullptr : registry.c_str(), glob.c_str(), all ? 1 : 0,
                                      cfg.get(), common.json ? nullptr : print_line, nullptr, &run);
    if (s != JACSYZ_OK) return fail(s);
    char* text = nullptr;
    if (common.json) {
      if (int rs = jacsyz_verify_report(run, 1, &text); rs != JACSYZ_OK) {
        jacsyz_verify_free(run);
        return fail(rs);
      }
      emit(text);
    } else if (jacsyz_verify_report(run, 0, &text) == JACSYZ_OK) {
      // entries were streamed already; print only the summary line
      std::string all_text = text;
      jacsyz_string_free(text);
      const auto cut = all_text.rfind('\n', all_text.size() - 2);
      std::printf("%s", cut == std::string::npos ? all_text.c_str() : all_text.c_str() + cut + 1);
    }
    const bool ok = jacsyz_verify_ok(run) == 1;
    const bool empty = jacsyz_verify_count(run) == 0;
    jacsyz_verify_free(run);
    if (empty) {
      std::cerr << "jacsyz: no registry entry matches '" << glob << "'\n";
      return JACSYZ_ERR_USAGE;
    }
    return ok ? 0 : JACSYZ_ERR_CLOSURE;
  }

  if (search->parsed()) {
    ConfigPtr cfg;
    if (int s = make_config(common, cfg); s != JACSYZ_OK) return fail(s);
    jacsyz_search_run* run = nullptr;
    const int s = jacsyz_search(sd, sr, sm, pool.c_str(), budget, templates.empty() ? nullptr : templates.c_str(),
                                store.empty() ? nullptr : store.c_str(), cfg.get(), print_line, nullptr, &run);
    if (s != JACSYZ_OK) return fail(s);
    char* summary = nullptr;
    if (jacsyz_search_summary(run, &summary) == JACSYZ_OK) {
      std::fprintf(stderr, "%s\n", summary);
      jacsyz_string_free(summary);
    }
    jacsyz_search_free(run);
    return 0;
  }
  return JACSYZ_ERR_USAGE;
}
