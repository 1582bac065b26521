/*
 *   Copyright 2026 The tropsolve Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Shared fixtures for the unit and acceptance tests: the worked example
// matrices, seeded random instances, and small reference routines written
// directly on rationals so expected values do not come from the code under
// test.

#ifndef TROPSOLVE_TESTS_FIXTURES_HPP
#define TROPSOLVE_TESTS_FIXTURES_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tropsolve/io.hpp"
#include "tropsolve/optimizer.hpp"
#include "tropsolve/systems.hpp"

namespace fixtures {

using namespace tropsolve;

/// "r c e11 e12 ..." in the matrix file syntax.
inline TropMatrix mat(const std::string& text) { return parse_matrix(text); }

inline TropVector vec(const std::vector<std::string>& entries) { return parse_vector(entries); }

inline TropMatrix example_a() { return mat("3 3  1 -inf -inf  3 2 -inf  -inf 0 -1"); }

// ---------------------------------------------------------------------------
// Reference arithmetic on optional rationals (nullopt is -inf).

using RefScalar = std::optional<Rational>;
using RefMatrix = std::vector<std::vector<RefScalar>>;

inline RefMatrix to_ref(const TropMatrix& m) {
  RefMatrix r(static_cast<std::size_t>(m.rows()), std::vector<RefScalar>(static_cast<std::size_t>(m.cols())));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r[i][j] = m(i, j).value();
  return r;
}

inline TropMatrix from_ref(const RefMatrix& r) {
  TropMatrix m(static_cast<Index>(r.size()), static_cast<Index>(r.empty() ? 0 : r[0].size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = r[i][j] ? Trop(*r[i][j]) : Trop::zero();
  return m;
}

inline void ref_max(RefScalar& acc, const RefScalar& v) {
  if (v && (!acc || *v > *acc)) acc = v;
}

inline RefMatrix ref_mul(const RefMatrix& a, const RefMatrix& b) {
  RefMatrix c(a.size(), std::vector<RefScalar>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        if (a[i][k] && b[k][j]) ref_max(c[i][j], RefScalar(*a[i][k] + *b[k][j]));
  return c;
}

inline RefMatrix ref_identity(std::size_t n) {
  RefMatrix e(n, std::vector<RefScalar>(n));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = Rational(0);
  return e;
}

inline RefMatrix ref_add(RefMatrix a, const RefMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) ref_max(a[i][j], b[i][j]);
  return a;
}

/// max over m = 1..n of the diagonal of A^m.
inline RefScalar ref_big_tr(const RefMatrix& a) {
  RefScalar t;
  RefMatrix p = a;
  for (std::size_t m = 1; m <= a.size(); ++m) {
    for (std::size_t i = 0; i < a.size(); ++i) ref_max(t, p[i][i]);
    p = ref_mul(p, a);
  }
  return t;
}

/// I (+) A (+) ... (+) A^(n-1), summing explicit powers.
inline RefMatrix ref_star(const RefMatrix& a) {
  RefMatrix s = ref_identity(a.size()), p = ref_identity(a.size());
  for (std::size_t m = 1; m < a.size(); ++m) {
    p = ref_mul(p, a);
    s = ref_add(s, p);
  }
  return s;
}

/// Plain objective on a regular rational vector.
inline Rational ref_objective(ProblemKind kind, const RefMatrix& a, const std::vector<Rational>& x) {
  RefScalar best;
  for (std::size_t i = 0; i < x.size(); ++i) {
    RefScalar ax;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (a[i][j]) {
        ref_max(ax, RefScalar(*a[i][j] + x[j]));
        if (kind == ProblemKind::Composite) ref_max(best, RefScalar(*a[i][j] + x[j] - x[i]));
      }
    if (ax) ref_max(best, RefScalar(x[i] - *ax));
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Random instances.

/// Square integer matrix, n in [2, 5], entries in [-5, 5], each entry the zero
/// with probability 2/5; matrices with a zero row are drawn again.
inline TropMatrix random_instance(std::mt19937_64& rng, int min_n = 2, int max_n = 5) {
  std::uniform_int_distribution<int> size(min_n, max_n), entry(-5, 5), coin(0, 4);
  const Index n = size(rng);
  TropMatrix m(n, n);
  for (;;) {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) m(i, j) = coin(rng) < 2 ? Trop::zero() : Trop(long(entry(rng)));
    if (is_row_regular(m)) return m;
  }
}

inline TropVector random_regular(std::mt19937_64& rng, Index n, int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> entry(lo, hi);
  TropVector x(n);
  for (Index i = 0; i < n; ++i) x(i) = Trop(long(entry(rng)));
  return x;
}

/// Regular vectors satisfying the characterization at level c, found without
/// the solver: random starts pushed down by x <- x /\ c A x and, for the
/// composite problem, up by x <- x (+) c^-1 A x, then checked directly.
inline std::vector<TropVector> sample_members(ProblemKind kind, const TropMatrix& a, const Trop& c,
                                              std::mt19937_64& rng, std::size_t want,
                                              std::size_t tries = 4000) {
  std::vector<TropVector> out;
  const Index n = a.rows();
  const Trop c_inv = inv(c);
  for (std::size_t t = 0; t < tries && out.size() < want; ++t) {
    TropVector x = random_regular(rng, n);
    for (int round = 0; round < 40 && is_regular(x); ++round) {
      if (satisfies_characterization(kind, a, c, x)) break;
      const TropVector up = scalar_mul(c, mat_mul(a, x));
      for (Index i = 0; i < n; ++i)
        if (up(i) < x(i)) x(i) = up(i);
      if (kind == ProblemKind::Composite && is_regular(x))
        x = mat_add(x, scalar_mul(c_inv, mat_mul(a, x)));
    }
    if (is_regular(x) && satisfies_characterization(kind, a, c, x)) out.push_back(x);
  }
  return out;
}

/// Every column of `b` lies in the span of `a`.
inline bool spans(const TropMatrix& a, const TropMatrix& b) {
  for (Index j = 0; j < b.cols(); ++j) {
    const TropVector col = b.col(j);
    if (!is_zero(col) && !is_dependent(col, a)) return false;
  }
  return true;
}

inline bool same_span(const TropMatrix& a, const TropMatrix& b) { return spans(a, b) && spans(b, a); }

}  // namespace fixtures

#endif  // TROPSOLVE_TESTS_FIXTURES_HPP
