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

#include "syzygy.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <tuple>
#include <type_traits>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace jacsyz {

namespace {

long dim_s(int k) { return k < 0 ? 0 : static_cast<long>(basis_size(k)); }

Rat to_rat(const PrimeField& field, PrimeField::Elem a) {
  const long p = field.prime();
  const long v = a;
  return Rat(v > p / 2 ? v - p : v);
}

/// Graded linear algebra of one curve over one field. Ranks of the Jacobian
/// maps are cached, since every invariant is assembled from them.
template <class F>
class Engine {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  Engine(const HomPoly& f, F field) : f_(f), d_(f.degree()), field_(std::move(field)) {
    const auto parts = partials(f);
    for (int i = 0; i < 3; ++i)
      for (const auto& [mono, coeff] : parts[i].terms())
        grad_[i].emplace_back(mono, field_.from_rational(coeff));
  }

  int d() const noexcept { return d_; }
  const HomPoly& poly() const noexcept { return f_; }
  const F& field() const noexcept { return field_; }

  const std::vector<Monomial>& basis(int k) {
    auto it = bases_.find(k);
    if (it == bases_.end()) it = bases_.emplace(k, monomial_basis(k)).first;
    return it->second;
  }

  /// Rows u·f_i for u in S_k, written in the basis of S_{k+d-1}.
  Matrix<F> jacobian_rows(int k) {
    const auto& src = basis(k);
    const std::size_t n = src.size();
    Matrix<F> m(field_, 3 * n, basis_size(k + d_ - 1));
    for (int i = 0; i < 3; ++i)
      for (std::size_t u = 0; u < n; ++u)
        for (const auto& [mono, c] : grad_[i]) m.at(i * n + u, basis_index(src[u] * mono)) = c;
    return m;
  }

  /// The same map with syzygy coordinates (i, u) as columns.
  Matrix<F> jacobian_cols(int k) {
    const auto& src = basis(k);
    const std::size_t n = src.size();
    Matrix<F> m(field_, basis_size(k + d_ - 1), 3 * n);
    for (int i = 0; i < 3; ++i)
      for (std::size_t u = 0; u < n; ++u)
        for (const auto& [mono, c] : grad_[i]) m.at(basis_index(src[u] * mono), i * n + u) = c;
    return m;
  }

  /// J_k over Q, with syzygy coordinates as columns.
  Matrix<RationalField> rational_jacobian_cols(int k) {
    const auto parts = partials(f_);
    const auto& src = basis(k);
    const std::size_t n = src.size();
    Matrix<RationalField> m(RationalField{}, basis_size(k + d_ - 1), 3 * n);
    for (int i = 0; i < 3; ++i)
      for (std::size_t u = 0; u < n; ++u)
        for (const auto& [mono, c] : parts[i].terms()) m.at(basis_index(src[u] * mono), i * n + u) = c;
    return m;
  }

  void set_lift_generators(bool on) { lift_generators_ = on; }

  long jacobian_rank(int k) {
    if (k < 0) return 0;
    auto it = ranks_.find(k);
    if (it != ranks_.end()) return it->second;
    const long r = static_cast<long>(rank(jacobian_rows(k)));
    ranks_.emplace(k, r);
    return r;
  }

  long milnor(int j) { return dim_s(j) - jacobian_rank(j - d_ + 1); }

  long syz_direct(int k) { return 3 * dim_s(k) - jacobian_rank(k); }

  long tau() {
    if (d_ < 2) throw Error(ErrorCode::OutOfRange, "degree must be at least 2");
    const long a = milnor(3 * d_ - 5);
    const long b = milnor(3 * d_ - 4);
    if (a != b) {
      std::ostringstream msg;
      msg << "Milnor algebra not stabilized: dim M_" << 3 * d_ - 5 << " = " << a << ", dim M_"
          << 3 * d_ - 4 << " = " << b;
      throw Error(ErrorCode::NotStabilized, msg.str());
    }
    return a;
  }

  /// dim D_k, using the stabilized Hilbert function past 2d-3.
  long syz(int k) {
    if (k < 0) return 0;
    if (k <= 2 * d_ - 3) return syz_direct(k);
    return 3 * dim_s(k) - dim_s(k + d_ - 1) + tau();
  }

  /// Moves a vector of S_a^3 to S_{a+b}^3 by multiplying with v in S_b.
  void shift_into(const Vec& vec, int a, const Monomial& v, std::span<Elem> out) {
    const auto& src = basis(a);
    const std::size_t n = src.size();
    const std::size_t nt = basis_size(a + v.degree());
    for (int i = 0; i < 3; ++i)
      for (std::size_t w = 0; w < n; ++w) {
        const Elem& c = vec[i * n + w];
        if (!F::is_zero(c)) out[i * nt + basis_index(src[w] * v)] = c;
      }
  }

  struct Gen {
    int degree;
    Vec vec;
    std::vector<Rat> exact;  ///< rational lift of vec, when known
  };

  /// Rows u·ρ_j for all generators of degree below k.
  Matrix<F> lower_generated(const std::vector<Gen>& gens, int k) {
    std::size_t rows = 0;
    for (const auto& g : gens)
      if (g.degree < k) rows += basis_size(k - g.degree);
    Matrix<F> m(field_, rows, 3 * basis_size(k));
    std::size_t r = 0;
    for (const auto& g : gens) {
      if (g.degree >= k) continue;
      for (const auto& v : basis(k - g.degree)) shift_into(g.vec, g.degree, v, m.row(r++));
    }
    return m;
  }

  struct Profile {
    std::vector<long> dims;
    std::vector<long> mingens;
    std::vector<Gen> gens;
  };

  Profile profile(int bound) {
    Profile out;
    for (int k = 0; k <= bound; ++k) {
      const long dim = syz(k);
      out.dims.push_back(dim);
      long mu = dim;
      if (dim > 0) {
        Matrix<F> lower = lower_generated(out.gens, k);
        if (lower.rows() > 0) mu = dim - static_cast<long>(rank(lower, static_cast<std::size_t>(dim)));
        if (mu > 0) pick_generators(lower, k, mu, out.gens);
      }
      out.mingens.push_back(mu);
    }
    return out;
  }

  /// Kernel vectors of J_k outside the span of the lower generated part,
  /// taken in kernel-basis order.
  void pick_generators(const Matrix<F>& lower, int k, long mu, std::vector<Gen>& gens) {
    EchelonSpace<F> space(field_, 3 * basis_size(k));
    for (std::size_t r = 0; r < lower.rows(); ++r) {
      const auto row = lower.row(r);
      space.insert(Vec(row.begin(), row.end()));
    }
    long found = 0;
    if constexpr (std::is_same_v<F, PrimeField>) {
      // exact kernel vectors are reduced mod p and tested for independence there
      if (lift_generators_) {
        const auto exact = kernel(rational_jacobian_cols(k));
        std::vector<Vec> reduced;
        try {
          for (const auto& q : exact.vectors) {
            Vec v(q.size());
            for (std::size_t i = 0; i < q.size(); ++i) v[i] = field_.from_rational(q[i]);
            reduced.push_back(std::move(v));
          }
        } catch (const Error&) {
          reduced.clear();
        }
        if (reduced.size() == exact.vectors.size()) {
          EchelonSpace<F> trial = space;
          std::vector<Gen> picked;
          for (std::size_t i = 0; i < reduced.size() && static_cast<long>(picked.size()) < mu; ++i)
            if (trial.insert(reduced[i])) picked.push_back({k, reduced[i], exact.vectors[i]});
          if (static_cast<long>(picked.size()) == mu) {
            for (auto& g : picked) gens.push_back(std::move(g));
            return;
          }
        }
      }
    }
    const auto ker = kernel(jacobian_cols(k));
    for (const auto& v : ker.vectors) {
      if (found == mu) break;
      if (space.insert(v)) {
        gens.push_back({k, v, {}});
        ++found;
      }
    }
    if (found != mu)
      throw Error(ErrorCode::ClosureFailure, "syzygy kernel smaller than its dimension count");
  }

  /// Minimal relations per syzygy degree, counted in the free relation
  /// module: dim R_δ minus the part generated by lower relations.
  std::vector<long> relation_counts(const std::vector<Gen>& gens, int top) {
    std::vector<long> nu;
    std::vector<int> found;
    for (int delta = 0; delta <= top; ++delta) {
      long dim_r = -syz(delta);
      for (const auto& g : gens) dim_r += dim_s(delta - g.degree);
      for (int e : found) dim_r -= dim_s(delta - e);
      nu.push_back(dim_r);
      for (long i = 0; i < dim_r; ++i) found.push_back(delta);
    }
    return nu;
  }

  /// Same counts from explicit relation kernels and the span of S_1·R_{δ-1}.
  std::vector<long> relation_counts_explicit(const std::vector<Gen>& gens, int top) {
    std::vector<long> nu;
    std::vector<Vec> prev;
    for (int delta = 0; delta <= top; ++delta) {
      std::vector<std::size_t> offset;
      std::size_t cols = 0;
      for (const auto& g : gens) {
        offset.push_back(cols);
        cols += static_cast<std::size_t>(dim_s(delta - g.degree));
      }
      std::vector<Vec> current;
      if (cols > 0) {
        Matrix<F> a(field_, 3 * basis_size(delta), cols);
        std::size_t c = 0;
        Vec column(a.rows());
        for (const auto& g : gens) {
          if (g.degree > delta) continue;
          for (const auto& v : basis(delta - g.degree)) {
            std::fill(column.begin(), column.end(), F::zero());
            shift_into(g.vec, g.degree, v, column);
            for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, c) = column[r];
            ++c;
          }
        }
        current = kernel(std::move(a)).vectors;
      }
      long lifted = 0;
      if (!prev.empty() && !current.empty()) {
        // S_1·R_{δ-1}, re-indexed from (j, S_{δ-1-d_j}) to (j, S_{δ-d_j})
        std::vector<Vec> products;
        for (const auto& r : prev)
          for (int var = 0; var < 3; ++var) {
            Vec out(cols, F::zero());
            std::size_t pos = 0;
            for (std::size_t j = 0; j < gens.size(); ++j) {
              const int a = delta - 1 - gens[j].degree;
              if (a < 0) continue;
              const Monomial step{var == 0, var == 1, var == 2};
              for (const auto& w : basis(a)) {
                if (!F::is_zero(r[pos])) out[offset[j] + basis_index(w * step)] = r[pos];
                ++pos;
              }
            }
            products.push_back(std::move(out));
          }
        lifted = static_cast<long>(
            rank(Matrix<F>::from_rows(field_, cols, products), current.size()));
      }
      nu.push_back(static_cast<long>(current.size()) - lifted);
      prev = std::move(current);
    }
    return nu;
  }

  /// dim (J_f : m^e)_k for k = W - e, e = 0..W, by descending colon steps
  /// from (J_f)_W.
  std::vector<long> colon_chain(int top) {
    std::vector<long> dims(top + 1, 0);
    EchelonSpace<F> space(field_, basis_size(top));
    if (top - d_ + 1 >= 0) {
      Matrix<F> jr = jacobian_rows(top - d_ + 1);
      for (std::size_t r = 0; r < jr.rows(); ++r) {
          const auto row = jr.row(r);
          space.insert(Vec(row.begin(), row.end()));
        }
    }
    dims[top] = static_cast<long>(space.dimension());
    for (int j = top; j >= 1; --j) {
      // normal forms of S_j modulo the current subspace, in non-pivot coordinates
      const std::size_t nj = basis_size(j);
      std::vector<long> slot(nj, -1);
      std::vector<bool> is_pivot(nj, false);
      for (auto p : space.pivots()) is_pivot[p] = true;
      std::size_t free_count = 0;
      for (std::size_t c = 0; c < nj; ++c)
        if (!is_pivot[c]) slot[c] = static_cast<long>(free_count++);
      std::vector<std::size_t> row_of(nj, 0);
      for (std::size_t i = 0; i < space.pivots().size(); ++i) row_of[space.pivots()[i]] = i;

      const auto& lower = basis(j - 1);
      const std::size_t nl = lower.size();
      if (free_count == 0) {
        EchelonSpace<F> next(field_, nl);
        for (std::size_t g = 0; g < nl; ++g) {
          Vec e(nl, F::zero());
          e[g] = F::one();
          next.insert(std::move(e));
        }
        space = std::move(next);
        dims[j - 1] = static_cast<long>(nl);
        continue;
      }
      Matrix<F> m(field_, 3 * free_count, nl);
      for (std::size_t g = 0; g < nl; ++g)
        for (int var = 0; var < 3; ++var) {
          const Monomial step{var == 0, var == 1, var == 2};
          const std::size_t w = basis_index(lower[g] * step);
          const std::size_t base = var * free_count;
          if (!is_pivot[w]) {
            m.at(base + slot[w], g) = field_.add(m.at(base + slot[w], g), F::one());
          } else {
            const auto& row = space.rows()[row_of[w]];
            for (std::size_t c = w + 1; c < nj; ++c)
              if (!is_pivot[c] && !F::is_zero(row[c]))
                m.at(base + slot[c], g) = field_.sub(m.at(base + slot[c], g), row[c]);
          }
        }
      auto ker = kernel(std::move(m));
      EchelonSpace<F> next(field_, nl);
      for (auto& v : ker.vectors) next.insert(std::move(v));
      dims[j - 1] = static_cast<long>(next.dimension());
      space = std::move(next);
    }
    return dims;
  }

 private:
  HomPoly f_;
  int d_;
  F field_;
  std::array<std::vector<std::pair<Monomial, Elem>>, 3> grad_;
  std::map<int, std::vector<Monomial>> bases_;
  std::map<int, long> ranks_;
  bool lift_generators_ = true;
};

/// r/s with |r|, |s| <= sqrt(p/2) and r = s·a mod p, if one exists.
std::optional<Rat> reconstruct(std::uint32_t p, std::uint32_t a) {
  if (a == 0) return Rat(0);
  long r0 = p, r1 = a, s0 = 0, s1 = 1;
  const long limit = static_cast<long>(std::sqrt(static_cast<double>(p) / 2.0));
  while (r1 > limit) {
    const long q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (s1 == 0 || std::labs(s1) > limit) return std::nullopt;
  if (s1 < 0) {
    r1 = -r1;
    s1 = -s1;
  }
  Rat q{Int(r1), Int(s1)};
  q.canonicalize();
  return q;
}

SyzygyGenerator assemble(int degree, const std::vector<Rat>& coeffs) {
  const auto basis = monomial_basis(degree);
  const std::size_t n = basis.size();
  // primitive integer triple
  Int den = 1, num = 0;
  for (const auto& c : coeffs) {
    if (sgn(c) == 0) continue;
    den = lcm(den, Int(c.get_den()));
    num = gcd(num, Int(c.get_num()));
  }
  SyzygyGenerator g;
  g.degree = degree;
  for (int i = 0; i < 3; ++i) g.components[i] = HomPoly(degree);
  for (int i = 0; i < 3; ++i)
    for (std::size_t w = 0; w < n; ++w) {
      const Rat& c = coeffs[i * n + w];
      if (sgn(c) != 0) g.components[i].add_term(basis[w], c * Rat(den) / Rat(num));
    }
  return g;
}

bool annihilates(const HomPoly& f, const SyzygyGenerator& g) {
  const auto p = partials(f);
  return (g.components[0] * p[0] + g.components[1] * p[1] + g.components[2] * p[2]).is_zero();
}

SyzygyGenerator to_generator(const HomPoly&, const RationalField&, int degree,
                             const std::vector<Rat>& vec, const std::vector<Rat>&) {
  return assemble(degree, vec);
}

SyzygyGenerator to_generator(const HomPoly& f, const PrimeField& field, int degree,
                             const std::vector<PrimeField::Elem>& vec,
                             const std::vector<Rat>& exact) {
  if (!exact.empty()) return assemble(degree, exact);
  std::vector<Rat> lifted(vec.size());
  bool ok = true;
  for (std::size_t i = 0; i < vec.size() && ok; ++i) {
    const auto q = reconstruct(field.prime(), vec[i]);
    if (q) lifted[i] = *q;
    else ok = false;
  }
  if (ok) {
    SyzygyGenerator g = assemble(degree, lifted);
    if (annihilates(f, g)) return g;
  }
  for (std::size_t i = 0; i < vec.size(); ++i) lifted[i] = to_rat(field, vec[i]);
  SyzygyGenerator g = assemble(degree, lifted);
  g.exact = false;
  return g;
}

std::vector<long> hilbert_numerator(long tau, const std::vector<long>& dims, int K) {
  std::vector<long> out(static_cast<std::size_t>(K) + 4, 0);
  static constexpr long cube[4] = {1, -3, 3, -1};
  for (int k = 0; k <= K; ++k)
    for (int i = 0; i < 4; ++i) out[k + i] += cube[i] * dims[k];
  out[K + 1] += tau;
  out[K + 2] -= 2 * tau;
  out[K + 3] += tau;
  return out;
}

template <class F>
HilbertData hilbert_from(Engine<F>& eng) {
  HilbertData h;
  h.d = eng.d();
  h.T = 3 * (h.d - 2);
  h.tau = eng.tau();
  for (int k = 0; k <= 3 * h.d - 4; ++k) h.dims.push_back(eng.milnor(k));
  h.numerator = hilbert_numerator(h.tau, h.dims, 3 * h.d - 5);
  return h;
}

template <class F>
SyzygyProfile profile_from(Engine<F>& eng, int bound, std::vector<typename Engine<F>::Gen>* raw) {
  const int d = eng.d();
  if (bound <= 0) bound = 2 * d;
  if (bound < d - 1) throw Error(ErrorCode::BoundTooLow, "generator bound below d-1");
  auto p = eng.profile(bound);
  SyzygyProfile out;
  out.d = d;
  out.bound = bound;
  out.dims = p.dims;
  out.mingens = p.mingens;
  out.mdr = -1;
  for (int k = 0; k <= bound; ++k)
    if (out.dims[k] > 0) {
      out.mdr = k;
      break;
    }
  for (int k = 0; k <= bound; ++k)
    for (long i = 0; i < out.mingens[k]; ++i) out.exponents.push_back(k);
  for (const auto& g : p.gens) out.generators.push_back(to_generator(eng.poly(), eng.field(), g.degree, g.vec, g.exact));
  if (raw) *raw = std::move(p.gens);
  return out;
}

template <class F>
ResolutionData relations_from(Engine<F>& eng, const SyzygyProfile& profile,
                              const std::vector<typename Engine<F>::Gen>& gens, bool explicit_rel,
                              const HilbertData& hilbert) {
  const int d = eng.d();
  const int top = profile.bound + d;
  const auto nu =
      explicit_rel ? eng.relation_counts_explicit(gens, top) : eng.relation_counts(gens, top);
  ResolutionData res;
  res.d = d;
  res.exponents = profile.exponents;
  res.m = static_cast<int>(res.exponents.size());
  res.tau = hilbert.tau;
  for (int delta = 0; delta <= top; ++delta) {
    if (nu[delta] < 0)
      throw Error(ErrorCode::ClosureFailure,
                  "negative relation count in degree " + std::to_string(delta));
    for (long i = 0; i < nu[delta]; ++i) res.relation_degrees.push_back(delta + d - 1);
  }
  if (res.m < 2 || static_cast<int>(res.relation_degrees.size()) != res.m - 2)
    throw Error(ErrorCode::ClosureFailure,
                "found " + std::to_string(res.relation_degrees.size()) + " relations for " +
                    std::to_string(res.m) + " generators");
  res.free = res.m == 2;
  for (std::size_t j = 0; j < res.relation_degrees.size(); ++j)
    res.epsilons.push_back(res.relation_degrees[j] - d - res.exponents[j + 2] + 1);
  if (!same_polynomial(betti_numerator(res), hilbert.numerator))
    throw Error(ErrorCode::ClosureFailure, "Betti numerator differs from the Hilbert numerator");
  return res;
}

template <class F>
Resolution resolve_with(const HomPoly& f, F field, const ResolveOptions& opt) {
  Engine<F> eng(f, std::move(field));
  const int d = f.degree();
  Resolution out;
  out.hilbert = hilbert_from(eng);
  int bound = opt.bound > 0 ? opt.bound : 2 * d;
  for (int attempt = 0;; ++attempt) {
    std::vector<typename Engine<F>::Gen> gens;
    out.profile = profile_from(eng, bound, &gens);
    if (out.profile.mdr == 0)
      throw Error(ErrorCode::MdrZero, "curve is a union of concurrent lines (mdr = 0)");
    try {
      out.data = relations_from(eng, out.profile, gens, opt.explicit_relations, out.hilbert);
      out.escalations = attempt;
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ClosureFailure || attempt >= opt.escalation_cap) throw;
    }
    bound += d;
  }
}

template <class Fn>
decltype(auto) dispatch(const Arithmetic& arith, Fn&& fn) {
  if (arith.mode == ArithmeticMode::Rational) return fn(RationalField{});
  return fn(PrimeField(arith.prime));
}

}  // namespace

std::string Arithmetic::describe() const {
  if (mode == ArithmeticMode::Rational) return "rational";
  return "mod " + std::to_string(prime);
}

long syz_dim(const HomPoly& f, int k, const Arithmetic& arith) {
  if (k < 0) return 0;
  return dispatch(arith, [&](auto field) {
    Engine<decltype(field)> eng(f, field);
    return eng.syz_direct(k);
  });
}

long milnor_dim(const HomPoly& f, int k, const Arithmetic& arith) {
  if (k < 0) return 0;
  return dispatch(arith, [&](auto field) {
    Engine<decltype(field)> eng(f, field);
    return eng.milnor(k);
  });
}

int mdr(const HomPoly& f, const Arithmetic& arith) {
  return dispatch(arith, [&](auto field) {
    Engine<decltype(field)> eng(f, field);
    for (int k = 0;; ++k) {
      if (eng.syz_direct(k) > 0) {
        if (k == 0) throw Error(ErrorCode::MdrZero, "curve is a union of concurrent lines (mdr = 0)");
        return k;
      }
      if (k > 2 * f.degree()) throw Error(ErrorCode::NotReduced, "no Jacobian syzygy found");
    }
  });
}

long tau(const HomPoly& f, const Arithmetic& arith) {
  return dispatch(arith, [&](auto field) {
    Engine<decltype(field)> eng(f, field);
    return eng.tau();
  });
}

HilbertData hilbert_data(const HomPoly& f, const Arithmetic& arith) {
  return dispatch(arith, [&](auto field) {
    Engine<decltype(field)> eng(f, field);
    return hilbert_from(eng);
  });
}

SyzygyProfile syzygy_profile(const HomPoly& f, int bound, const Arithmetic& arith) {
  return dispatch(arith, [&](auto field) {
    Engine<decltype(field)> eng(f, field);
    return profile_from(eng, bound, nullptr);
  });
}

ResolutionData relations(const HomPoly& f, const SyzygyProfile& profile, int bound,
                         const Arithmetic& arith, bool explicit_relations) {
  return dispatch(arith, [&](auto field) {
    using F = decltype(field);
    Engine<F> eng(f, field);
    const HilbertData h = hilbert_from(eng);
    std::vector<typename Engine<F>::Gen> gens;
    const SyzygyProfile own =
        profile_from(eng, bound > 0 ? bound : std::max(profile.bound, 2 * f.degree()), &gens);
    if (own.exponents != profile.exponents)
      throw Error(ErrorCode::BoundTooLow, "profile does not hold all minimal generators");
    return relations_from(eng, own, gens, explicit_relations, h);
  });
}

Resolution resolve_full(const HomPoly& f, const ResolveOptions& options) {
  return dispatch(options.arithmetic,
                  [&](auto field) { return resolve_with(f, std::move(field), options); });
}

ResolutionData resolve(const HomPoly& f, const ResolveOptions& options) {
  return resolve_full(f, options).data;
}

SaturationProfile saturation_profile(const HomPoly& f, const Arithmetic& arith) {
  return dispatch(arith, [&](auto field) {
    Engine<decltype(field)> eng(f, field);
    const int d = f.degree();
    SaturationProfile out;
    out.d = d;
    out.T = 3 * (d - 2);
    if (out.T < 0) return out;
    const int top = 3 * d - 4;
    const auto chain = eng.colon_chain(top);
    const auto check = eng.colon_chain(top + 1);
    for (int k = 0; k <= out.T; ++k) {
      // e = top - k here, e + 1 comes from the chain one degree higher
      if (chain[k] != check[k]) {
        std::ostringstream msg;
        msg << "saturation degree " << top - k << " unstable in degree " << k;
        throw Error(ErrorCode::SaturationUnstable, msg.str());
      }
      const long jacobian_part = dim_s(k) - eng.milnor(k);
      out.n_dims.push_back(chain[k] - jacobian_part);
    }
    return out;
  });
}

std::vector<long> betti_numerator(const ResolutionData& res) {
  int top = 0;
  for (int dj : res.exponents) top = std::max(top, res.d - 1 + dj);
  for (int e : res.relation_degrees) top = std::max(top, e);
  top = std::max(top, res.d - 1);
  std::vector<long> out(static_cast<std::size_t>(top) + 1, 0);
  out[0] += 1;
  out[res.d - 1] -= 3;
  for (int dj : res.exponents) out[res.d - 1 + dj] += 1;
  for (int e : res.relation_degrees) out[e] -= 1;
  return out;
}

bool same_polynomial(std::vector<long> a, std::vector<long> b) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (!b.empty() && b.back() == 0) b.pop_back();
  return a == b;
}

}  // namespace jacsyz
