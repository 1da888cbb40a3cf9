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

/* Exercises the public API from plain C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "jacsyz/jacsyz.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: FAILED %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static int lines_seen = 0;
static void count_line(const char* line, void* user) {
  (void)line;
  ++*(int*)user;
}

static void test_analysis(void) {
  jacsyz_config* cfg = jacsyz_config_new();
  jacsyz_analysis* a = NULL;
  int exps[8];
  int delta = -1;
  char* text = NULL;

  EXPECT(cfg != NULL);
  EXPECT(jacsyz_analyze("x^5+y^5+z^5", cfg, &a) == JACSYZ_OK);
  EXPECT(jacsyz_analysis_degree(a) == 5);
  EXPECT(jacsyz_analysis_mdr(a) == 4);
  EXPECT(jacsyz_analysis_m(a) == 3);
  EXPECT(jacsyz_analysis_tau(a) == 0);
  EXPECT(jacsyz_analysis_exponents(a, exps, 8) == 3);
  EXPECT(exps[0] == 4 && exps[1] == 4 && exps[2] == 4);
  EXPECT(jacsyz_analysis_verdicts(a) & JACSYZ_SMOOTH);
  EXPECT(jacsyz_analysis_checks_pass(a) == 1);
  EXPECT(jacsyz_analysis_report(a, 1, 0, &text) == JACSYZ_OK);
  EXPECT(text != NULL && strstr(text, "\"tau\": 0") != NULL);
  jacsyz_string_free(text);
  jacsyz_analysis_free(a);

  a = NULL;
  EXPECT(jacsyz_analyze("xyz(x^2+y^2+z^2)", cfg, &a) == JACSYZ_OK);
  EXPECT(jacsyz_analysis_tau(a) == 9);
  EXPECT(jacsyz_analysis_delta_m(a, &delta) == 1 && delta == 1);
  EXPECT(jacsyz_analysis_epsilons(a, exps, 8) == 1 && exps[0] == 2);
  jacsyz_analysis_free(a);

  a = NULL;
  EXPECT(jacsyz_analyze("x^2*y", cfg, &a) == JACSYZ_ERR_INPUT);
  EXPECT(a == NULL);
  EXPECT(strcmp(jacsyz_last_error_code(), "NOT_REDUCED") == 0);
  EXPECT(jacsyz_analyze("x^2+y", cfg, &a) == JACSYZ_ERR_INPUT);
  EXPECT(jacsyz_analyze("x^3+y^3+z^3", cfg, NULL) == JACSYZ_ERR_USAGE);

  EXPECT(jacsyz_config_set_prime(cfg, 1000) == JACSYZ_ERR_USAGE);
  EXPECT(jacsyz_config_set_prime(cfg, 1048583) == JACSYZ_OK);
  EXPECT(jacsyz_analyze("xyz(x^2+y^2+z^2)", cfg, &a) == JACSYZ_OK);
  EXPECT(jacsyz_analysis_tau(a) == 9);
  jacsyz_analysis_free(a);

  EXPECT(jacsyz_config_set_exact(cfg, 1) == JACSYZ_OK);
  a = NULL;
  EXPECT(jacsyz_analyze("xyz(x^2+y^2+z^2)", cfg, &a) == JACSYZ_OK);
  EXPECT(jacsyz_analysis_report(a, 0, 0, &text) == JACSYZ_OK);
  EXPECT(strstr(text, "rational") != NULL);
  jacsyz_string_free(text);
  jacsyz_analysis_free(a);
  jacsyz_config_free(cfg);
}

static void test_family_and_hilbert(void) {
  char* text = NULL;
  EXPECT(jacsyz_family("fermat", 'd', 3, 0, &text) == JACSYZ_OK);
  EXPECT(text && strcmp(text, "x^3+y^3+z^3") == 0);
  jacsyz_string_free(text);
  EXPECT(jacsyz_family("fermat", 'd', 1, 0, &text) == JACSYZ_ERR_USAGE);
  EXPECT(jacsyz_family("nosuch", 'd', 5, 0, &text) == JACSYZ_ERR_USAGE);

  EXPECT(jacsyz_hilbert("x^4+y^4+z^4", NULL, 1, &text) == JACSYZ_OK);
  EXPECT(text && strstr(text, "\"milnor\": 7") != NULL);
  jacsyz_string_free(text);
}

static void test_verify(void) {
  jacsyz_verify_run* run = NULL;
  size_t i;
  int lines = 0;
  EXPECT(jacsyz_verify_paper(NULL, "prop4.2:*", 0, NULL, count_line, &lines, &run) == JACSYZ_OK);
  EXPECT(jacsyz_verify_count(run) == 9);
  EXPECT((size_t)lines == jacsyz_verify_count(run));
  for (i = 0; i < jacsyz_verify_count(run); ++i) EXPECT(strcmp(jacsyz_verify_entry_status(run, i), "MATCH") == 0);
  EXPECT(jacsyz_verify_ok(run) == 1);
  jacsyz_verify_free(run);

  run = NULL;
  EXPECT(jacsyz_verify_paper(NULL, "ex5.2:C'", 0, NULL, NULL, NULL, &run) == JACSYZ_OK);
  EXPECT(jacsyz_verify_count(run) == 1);
  EXPECT(strcmp(jacsyz_verify_entry_status(run, 0), "MISMATCH") == 0);
  EXPECT(jacsyz_verify_entry_flagged(run, 0) == 1);
  EXPECT(jacsyz_verify_ok(run) == 1);
  jacsyz_verify_free(run);

  EXPECT(jacsyz_verify_paper("/nonexistent/registry.json", "", 0, NULL, NULL, NULL, &run) == JACSYZ_ERR_INPUT);
}

static void test_search(void) {
  jacsyz_search_run* run = NULL;
  char* summary = NULL;
  EXPECT(jacsyz_search(6, 4, 4, "-3,-1,1,2,3", 60, NULL, NULL, NULL, count_line, &lines_seen, &run) == JACSYZ_OK);
  EXPECT(jacsyz_search_count(run) >= 1);
  EXPECT((size_t)lines_seen == jacsyz_search_count(run));
  EXPECT(jacsyz_search_candidates(run) <= 60);
  EXPECT(strstr(jacsyz_search_certificate(run, 0), "\"prime_agrees\":true") != NULL);
  EXPECT(jacsyz_search_summary(run, &summary) == JACSYZ_OK);
  jacsyz_string_free(summary);
  jacsyz_search_free(run);
  EXPECT(jacsyz_search(6, 2, 4, "1", 10, NULL, NULL, NULL, NULL, NULL, &run) == JACSYZ_ERR_USAGE);
}

int main(void) {
  EXPECT(jacsyz_version() != NULL && *jacsyz_version() != '\0');
  test_analysis();
  test_family_and_hilbert();
  test_verify();
  test_search();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("C API: all checks passed\n");
  return 0;
}
