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

#include "jacsyz/jacsyz.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "registry.hpp"
#include "report.hpp"
#include "search.hpp"

struct jacsyz_config {
  jacsyz::Config config;
};

struct jacsyz_analysis {
  jacsyz::Analysis analysis;
};

struct jacsyz_verify_run {
  std::vector<jacsyz::EntryResult> results;
};

struct jacsyz_search_run {
  jacsyz::SearchResult result;
  std::vector<std::string> lines;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_error_code;

void set_error(const std::string& code, const std::string& message) {
  last_error_code = code;
  last_error = message;
}

template <typename F>
int guard(F&& body) {
  try {
    body();
    set_error("", "");
    return JACSYZ_OK;
  } catch (const jacsyz::Error& e) {
    set_error(jacsyz::error_code_name(e.code()), e.what());
    return jacsyz::exit_code_for(e.code());
  } catch (const std::bad_alloc&) {
    set_error("INTERNAL", "out of memory");
  } catch (const std::exception& e) {
    set_error("INTERNAL", e.what());
  } catch (...) {
    set_error("INTERNAL", "unknown failure");
  }
  return JACSYZ_ERR_INTERNAL;
}

int usage(const std::string& message) {
  set_error("USAGE", message);
  return JACSYZ_ERR_USAGE;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

size_t copy_out(const std::vector<int>& v, int* buf, size_t cap) {
  for (size_t i = 0; i < v.size() && i < cap && buf; ++i) buf[i] = v[i];
  return v.size();
}

jacsyz::Config config_of(const jacsyz_config* cfg) { return cfg ? cfg->config : jacsyz::Config{}; }

}  // namespace

extern "C" {

const char* jacsyz_version(void) { return "1.0.0"; }
const char* jacsyz_last_error(void) { return last_error.c_str(); }
const char* jacsyz_last_error_code(void) { return last_error_code.c_str(); }
void jacsyz_string_free(char* s) { std::free(s); }

jacsyz_config* jacsyz_config_new(void) { return new (std::nothrow) jacsyz_config(); }
void jacsyz_config_free(jacsyz_config* cfg) { delete cfg; }

int jacsyz_config_set_prime(jacsyz_config* cfg, uint32_t prime) {
  if (!cfg) return usage("null config");
  return guard([&] {
    jacsyz::validate_prime(prime);
    cfg->config.prime = prime;
  });
}

int jacsyz_config_set_exact(jacsyz_config* cfg, int exact) {
  if (!cfg) return usage("null config");
  cfg->config.exact = exact != 0;
  return JACSYZ_OK;
}

int jacsyz_config_set_bound(jacsyz_config* cfg, int bound) {
  if (!cfg) return usage("null config");
  if (bound < 0) return usage("bound must be non-negative");
  cfg->config.bound = bound;
  return JACSYZ_OK;
}

int jacsyz_config_set_saturation(jacsyz_config* cfg, int on) {
  if (!cfg) return usage("null config");
  cfg->config.saturation = on != 0;
  return JACSYZ_OK;
}

int jacsyz_config_set_seed(jacsyz_config* cfg, uint64_t seed) {
  if (!cfg) return usage("null config");
  cfg->config.seed = seed;
  return JACSYZ_OK;
}

int jacsyz_config_set_escalation_cap(jacsyz_config* cfg, int cap) {
  if (!cfg) return usage("null config");
  if (cap < 0) return usage("escalation cap must be non-negative");
  cfg->config.escalation_cap = cap;
  return JACSYZ_OK;
}

int jacsyz_config_load_environment(jacsyz_config* cfg) {
  if (!cfg) return usage("null config");
  return guard([&] { cfg->config = jacsyz::config_from_environment(cfg->config); });
}

int jacsyz_analyze(const char* poly, const jacsyz_config* cfg, jacsyz_analysis** out) {
  if (!poly || !out) return usage("null argument");
  *out = nullptr;
  return guard([&] {
    auto a = std::make_unique<jacsyz_analysis>();
    a->analysis = jacsyz::analyze(std::string(poly), config_of(cfg));
    *out = a.release();
  });
}

void jacsyz_analysis_free(jacsyz_analysis* a) { delete a; }
int jacsyz_analysis_degree(const jacsyz_analysis* a) { return a ? a->analysis.resolution.data.d : 0; }
int jacsyz_analysis_mdr(const jacsyz_analysis* a) { return a ? a->analysis.classification.r : 0; }
int jacsyz_analysis_m(const jacsyz_analysis* a) { return a ? a->analysis.resolution.data.m : 0; }
long long jacsyz_analysis_tau(const jacsyz_analysis* a) { return a ? a->analysis.resolution.data.tau : 0; }

size_t jacsyz_analysis_exponents(const jacsyz_analysis* a, int* buf, size_t cap) {
  return a ? copy_out(a->analysis.resolution.data.exponents, buf, cap) : 0;
}
size_t jacsyz_analysis_relation_degrees(const jacsyz_analysis* a, int* buf, size_t cap) {
  return a ? copy_out(a->analysis.resolution.data.relation_degrees, buf, cap) : 0;
}
size_t jacsyz_analysis_epsilons(const jacsyz_analysis* a, int* buf, size_t cap) {
  return a ? copy_out(a->analysis.resolution.data.epsilons, buf, cap) : 0;
}

int jacsyz_analysis_delta_m(const jacsyz_analysis* a, int* out) {
  if (!a || !a->analysis.classification.delta_m) return 0;
  if (out) *out = *a->analysis.classification.delta_m;
  return 1;
}

unsigned jacsyz_analysis_verdicts(const jacsyz_analysis* a) {
  return a ? a->analysis.classification.flags : 0;
}

int jacsyz_analysis_checks_pass(const jacsyz_analysis* a) {
  return a && a->analysis.all_checks_pass() ? 1 : 0;
}

int jacsyz_analysis_report(const jacsyz_analysis* a, int json, int timing, char** out) {
  if (!a || !out) return usage("null argument");
  *out = nullptr;
  return guard([&] {
    *out = dup(json ? jacsyz::report_json(a->analysis, timing != 0).dump(2) + "\n"
                    : jacsyz::render_text(a->analysis, timing != 0));
  });
}

int jacsyz_hilbert(const char* poly, const jacsyz_config* cfg, int json, char** out) {
  if (!poly || !out) return usage("null argument");
  *out = nullptr;
  return guard([&] {
    const jacsyz::Config c = config_of(cfg);
    const auto f = jacsyz::parse(poly);
    const auto h = jacsyz::hilbert_data(f, c.arithmetic());
    std::optional<jacsyz::SaturationProfile> sat;
    if (c.saturation) sat = jacsyz::saturation_profile(f, c.arithmetic());
    const jacsyz::SaturationProfile* s = sat ? &*sat : nullptr;
    if (json) {
      jacsyz::Json j;
      j["input"] = poly;
      j["degree"] = f.degree();
      j["arithmetic"] = c.arithmetic().describe();
      j["hilbert"] = jacsyz::hilbert_json(h, s);
      *out = dup(j.dump(2) + "\n");
    } else {
      *out = dup(jacsyz::hilbert_text(h, s));
    }
  });
}

int jacsyz_family(const char* name, char param, int value, uint64_t seed, char** out) {
  if (!name || !out) return usage("null argument");
  if (param != 'd' && param != 'k') return usage("family parameter must be d or k");
  *out = nullptr;
  return guard([&] {
    jacsyz::FamilyParams p;
    (param == 'd' ? p.d : p.k) = value;
    p.seed = seed;
    *out = dup(jacsyz::family_expression(name, p));
  });
}

int jacsyz_family_list(char** out) {
  if (!out) return usage("null argument");
  *out = nullptr;
  return guard([&] {
    std::ostringstream s;
    for (const auto& f : jacsyz::family_list()) {
      s << f.name << "  " << f.param << " >= " << f.min;
      if (f.max > 0) s << ", " << f.param << " <= " << f.max;
      s << "  " << f.description << "\n";
    }
    *out = dup(s.str());
  });
}

int jacsyz_verify_paper(const char* registry, const char* glob, int all, const jacsyz_config* cfg,
                        jacsyz_line_fn on_line, void* user, jacsyz_verify_run** out) {
  if (!out) return usage("null argument");
  *out = nullptr;
  return guard([&] {
    jacsyz::RegistryOptions opts;
    opts.all = all != 0;
    const auto entries = jacsyz::load_registry(
        registry && *registry ? std::string(registry) : jacsyz::default_registry_path(), opts);
    const std::string pattern = glob ? glob : "";
    std::vector<jacsyz::CurveEntry> selected;
    for (const auto& e : entries)
      if (jacsyz::id_matches(pattern, e.id)) selected.push_back(e);
    auto run = std::make_unique<jacsyz_verify_run>();
    run->results = jacsyz::verify_entries(selected, config_of(cfg), 0, [&](const jacsyz::EntryResult& r) {
      if (on_line) on_line(jacsyz::describe(r).c_str(), user);
    });
    *out = run.release();
  });
}

void jacsyz_verify_free(jacsyz_verify_run* run) { delete run; }
size_t jacsyz_verify_count(const jacsyz_verify_run* run) { return run ? run->results.size() : 0; }

const char* jacsyz_verify_entry_id(const jacsyz_verify_run* run, size_t i) {
  return run && i < run->results.size() ? run->results[i].entry.id.c_str() : nullptr;
}

const char* jacsyz_verify_entry_status(const jacsyz_verify_run* run, size_t i) {
  return run && i < run->results.size() ? jacsyz::entry_status_name(run->results[i].status) : nullptr;
}

int jacsyz_verify_entry_flagged(const jacsyz_verify_run* run, size_t i) {
  return run && i < run->results.size() && run->results[i].entry.flagged ? 1 : 0;
}

int jacsyz_verify_ok(const jacsyz_verify_run* run) {
  if (!run) return 0;
  for (const auto& r : run->results)
    if (!r.entry.flagged && r.status != jacsyz::EntryStatus::Match) return 0;
  return 1;
}

int jacsyz_verify_report(const jacsyz_verify_run* run, int json, char** out) {
  if (!run || !out) return usage("null argument");
  *out = nullptr;
  return guard([&] {
    int match = 0, mismatch = 0, error = 0, flagged = 0;
    for (const auto& r : run->results) {
      if (r.status == jacsyz::EntryStatus::Match) ++match;
      if (r.status == jacsyz::EntryStatus::Mismatch) ++mismatch;
      if (r.status == jacsyz::EntryStatus::Error) ++error;
      if (r.entry.flagged && r.status != jacsyz::EntryStatus::Match) ++flagged;
    }
    if (!json) {
      std::ostringstream s;
      for (const auto& r : run->results) s << jacsyz::describe(r) << "\n";
      s << run->results.size() << " entries: " << match << " MATCH, " << mismatch << " MISMATCH, " << error
        << " ERROR; " << flagged << " of the failures are flagged\n";
      *out = dup(s.str());
      return;
    }
    jacsyz::Json entries = jacsyz::Json::array();
    for (const auto& r : run->results) {
      jacsyz::Json e;
      e["id"] = r.entry.id;
      e["status"] = jacsyz::entry_status_name(r.status);
      e["flagged"] = r.entry.flagged;
      e["source"] = r.entry.source;
      e["expression"] = r.entry.expression;
      if (!r.entry.note.empty()) e["note"] = r.entry.note;
      jacsyz::Json fields = jacsyz::Json::array();
      for (const auto& f : r.fields)
        fields.push_back({{"field", f.field}, {"claimed", f.claimed}, {"computed", f.computed}, {"match", f.match}});
      e["fields"] = fields;
      if (r.status == jacsyz::EntryStatus::Error) e["error"] = r.error;
      entries.push_back(e);
    }
    jacsyz::Json j;
    j["entries"] = entries;
    j["summary"] = {{"total", run->results.size()}, {"match", match}, {"mismatch", mismatch},
                    {"error", error}, {"flagged_failures", flagged}, {"ok", jacsyz_verify_ok(run) == 1}};
    *out = dup(j.dump(2) + "\n");
  });
}

int jacsyz_search(int d, int r, int m, const char* pool, int budget, const char* templates, const char* store,
                  const jacsyz_config* cfg, jacsyz_line_fn on_line, void* user, jacsyz_search_run** out) {
  if (!out) return usage("null argument");
  if (budget < 0) return usage("budget must be non-negative");
  *out = nullptr;
  return guard([&] {
    jacsyz::SearchRequest req;
    req.d = d;
    req.r = r;
    req.m = m;
    req.pool = jacsyz::parse_pool(pool && *pool ? pool : jacsyz::kDefaultPool);
    req.budget = budget;
    req.templates = jacsyz::load_templates(templates && *templates ? std::string(templates)
                                                                   : jacsyz::default_templates_path());
    if (store) req.store = store;
    auto run = std::make_unique<jacsyz_search_run>();
    run->result = jacsyz::search(req, config_of(cfg), [&](const jacsyz::Certificate& c) {
      run->lines.push_back(jacsyz::certificate_json(c, req));
      if (on_line) on_line(run->lines.back().c_str(), user);
    });
    *out = run.release();
  });
}

void jacsyz_search_free(jacsyz_search_run* run) { delete run; }
size_t jacsyz_search_count(const jacsyz_search_run* run) { return run ? run->lines.size() : 0; }

const char* jacsyz_search_certificate(const jacsyz_search_run* run, size_t i) {
  return run && i < run->lines.size() ? run->lines[i].c_str() : nullptr;
}

int jacsyz_search_candidates(const jacsyz_search_run* run) { return run ? run->result.stats.candidates : 0; }

int jacsyz_search_summary(const jacsyz_search_run* run, char** out) {
  if (!run || !out) return usage("null argument");
  *out = nullptr;
  return guard([&] {
    const auto& s = run->result.stats;
    std::ostringstream o;
    o << "candidates " << s.candidates << ", duplicates " << s.duplicates << ", prefilter passes "
      << s.prefilter_passed << ", prime/rational disagreements " << s.disagreements << ", certificates "
      << run->lines.size() << " (" << s.already_stored << " already stored)";
    *out = dup(o.str());
  });
}

}  // extern "C"
