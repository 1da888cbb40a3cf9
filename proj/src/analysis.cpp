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

#include "analysis.hpp"

#include <chrono>
#include <cstdlib>
#include <gmpxx.h>

#include "errors.hpp"

namespace jacsyz {

Arithmetic Config::arithmetic() const {
  if (exact) return Arithmetic::rational();
  return Arithmetic::modular(prime.value_or(kDefaultPrime));
}

void validate_prime(std::uint32_t p) {
  if (p <= (1u << 20) || p >= (1u << 31))
    throw Error(ErrorCode::BadPrime, "prime must lie strictly between 2^20 and 2^31");
  if (mpz_probab_prime_p(Int(p).get_mpz_t(), 30) == 0)
    throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not prime");
}

namespace {

std::uint64_t parse_unsigned(const char* name, const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text[0] == '-')
    throw Error(ErrorCode::Usage, std::string(name) + " is not a non-negative integer: " + text);
  return v;
}

Check make(std::string name, bool passed, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.passed = passed;
  c.detail = std::move(detail);
  return c;
}

}  // namespace

Config config_from_environment(Config base) {
  if (const char* p = std::getenv("JACSYZ_PRIME"); p && *p) {
    const std::uint64_t v = parse_unsigned("JACSYZ_PRIME", p);
    if (v >= (1ull << 31)) throw Error(ErrorCode::BadPrime, "JACSYZ_PRIME too large");
    validate_prime(static_cast<std::uint32_t>(v));
    base.prime = static_cast<std::uint32_t>(v);
  }
  if (const char* s = std::getenv("JACSYZ_SEED"); s && *s) base.seed = parse_unsigned("JACSYZ_SEED", s);
  return base;
}

bool Analysis::all_checks_pass() const {
  if (!classification.all_checks_pass()) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Analysis analyze(const std::string& text, const Config& config) {
  return analyze(parse(text), text, config);
}

Analysis analyze(const HomPoly& f, const std::string& input, const Config& config) {
  const auto start = std::chrono::steady_clock::now();
  if (config.prime) validate_prime(*config.prime);
  Analysis a;
  a.input = input;
  a.f = f;
  a.config = config;
  const Arithmetic arith = config.arithmetic();

  a.reduced = is_reduced(f, config.seed, arith);
  if (a.reduced.verdict == Reducedness::NotReduced)
    throw Error(ErrorCode::NotReduced, "the polynomial has a repeated factor");

  ResolveOptions opts;
  opts.arithmetic = arith;
  opts.bound = config.bound;
  opts.escalation_cap = config.escalation_cap;
  opts.explicit_relations = config.explicit_relations;
  try {
    a.resolution = resolve_full(f, opts);
  } catch (const Error& e) {
    // a Milnor algebra that never stabilizes means a non-isolated singularity
    if (e.code() == ErrorCode::NotStabilized) throw Error(ErrorCode::NotReduced, e.what());
    throw;
  }
  a.classification = classify(a.resolution.data);

  const auto numerator = betti_numerator(a.resolution.data);
  a.checks.push_back(make("hilbert_closure", same_polynomial(numerator, a.resolution.hilbert.numerator),
                          "Betti numerator equals the Hilbert series numerator"));
  a.checks.push_back(make("reducedness", a.reduced.verdict == Reducedness::Reduced,
                          a.reduced.verdict == Reducedness::Reduced
                              ? "squarefree restriction to a line"
                              : "no squarefree line restriction found; Hilbert function stabilized"));
  const auto& dims = a.resolution.profile.dims;
  a.checks.push_back(make("rank_nullity",
                          dims == syzygy_dims(a.resolution.hilbert, static_cast<int>(dims.size()) - 1),
                          "dim D0(f)_k = 3N_k - N_{k+d-1} + dim M(f)_{k+d-1}"));
  int inexact = 0;
  for (const auto& g : a.resolution.profile.generators)
    if (!g.exact) ++inexact;
  a.checks.push_back(make("generators_exact", inexact == 0,
                          std::to_string(inexact) + " generator(s) without a rational lift"));
  if (config.saturation) {
    a.saturation = saturation_profile(f, arith);
    const auto& n = a.saturation->n_dims;
    bool symmetric = true;
    for (std::size_t i = 0; i < n.size(); ++i)
      if (n[i] != n[n.size() - 1 - i]) symmetric = false;
    a.checks.push_back(make("saturation_symmetry", symmetric, "n(f)_k = n(f)_{T-k}"));
  }
  a.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return a;
}

std::vector<long> syzygy_dims(const HilbertData& h, int top) {
  auto n = [](long k) { return k < 0 ? 0L : (k + 1) * (k + 2) / 2; };
  auto milnor = [&](long k) {
    return k < static_cast<long>(h.dims.size()) ? h.dims[static_cast<std::size_t>(k)] : h.tau;
  };
  std::vector<long> out;
  for (long k = 0; k <= top; ++k) out.push_back(3 * n(k) - n(k + h.d - 1) + milnor(k + h.d - 1));
  return out;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::NotHomogeneous:
    case ErrorCode::ZeroPolynomial:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::NotReduced:
    case ErrorCode::MdrZero:
    case ErrorCode::NotStabilized:
    case ErrorCode::DuplicateLine:
    case ErrorCode::HypothesisFailure:
    case ErrorCode::RetryExhausted:
    case ErrorCode::Registry:
    case ErrorCode::Io:
      return 2;
    case ErrorCode::ClosureFailure:
    case ErrorCode::SaturationUnstable:
      return 3;
    default:
      return 1;
  }
}

}  // namespace jacsyz
