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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "tropsolve/linalg.hpp"

using namespace tropsolve;
using fixtures::mat;

namespace {

// Scaling by Tr(A)^-1 brings Tr down to at most the unit, so star is defined.
TropMatrix tame(TropMatrix a) {
  const Trop t = big_tr(a);
  if (t <= Trop::one()) return a;
  return scalar_mul(inv(t), a);
}

TropMatrix permute(const TropMatrix& a, const std::vector<Index>& p) {
  TropMatrix out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = a(p[i], p[j]);
  return out;
}

}  // namespace

TEST_CASE("products of the example matrix", "[linalg]") {
  const TropMatrix a = fixtures::example_a();
  const TropMatrix a2 = mat_mul(a, a);
  CHECK(equal(a2.row(1), mat("1 3  5 4 -inf")));
  CHECK(trace(a) == Trop(2L));
  CHECK(big_tr(a) == Trop(6L));
  CHECK(conjugate_transpose(a)(0, 1) == Trop(-3L));
  CHECK(conjugate_transpose(a)(2, 0).is_zero());
  CHECK(equal(mat_power(a, 0), identity<MaxPlus>(3)));
  CHECK(equal(mat_power(a, 3), mat_mul(a2, a)));
}

TEST_CASE("products agree with the reference", "[linalg]") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const TropMatrix a = fixtures::random_instance(rng), b = fixtures::random_instance(rng, 2, 5);
    if (a.cols() != b.rows()) continue;
    CHECK(equal(mat_mul(a, b), fixtures::from_ref(fixtures::ref_mul(fixtures::to_ref(a), fixtures::to_ref(b)))));
    const auto ref_t = fixtures::ref_big_tr(fixtures::to_ref(a));
    CHECK(big_tr(a) == (ref_t ? Trop(*ref_t) : Trop::zero()));
  }
}

TEST_CASE("shape and domain errors", "[linalg]") {
  const TropMatrix a = fixtures::example_a();
  CHECK_THROWS_AS(mat_mul(a, mat("2 2 0 0 0 0")), ShapeError);
  CHECK_THROWS_AS(mat_add(a, mat("2 2 0 0 0 0")), ShapeError);
  CHECK_THROWS_AS(trace(mat("2 3 0 0 0 0 0 0")), ShapeError);
  CHECK_THROWS_AS(conjugate_transpose(zeros<MaxPlus>(2, 2)), DomainError);
  CHECK_THROWS_AS(star(a), TraceError);
  CHECK_THROWS_AS(times_operator(mat("1 1 -1")), EmptyColumnSet);
}

TEST_CASE("star and plus", "[linalg]") {
  const TropMatrix b = mat("3 3  0 -1 -inf  -inf 0 1  -inf -inf -inf");
  CHECK(equal(star(b), mat("3 3  0 -1 0  -inf 0 1  -inf -inf 0")));
  CHECK(equal(plus(b), mat_mul(b, star(b))));
  CHECK(equal(times_operator(mat("2 2  -1 0  0 -2")), mat("2 2  0 0  0 0")));
}

TEST_CASE("star laws on random matrices", "[linalg]") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const TropMatrix a = tame(fixtures::random_instance(rng));
    const Index n = a.rows();
    const TropMatrix s = star(a);
    CHECK(equal(s, fixtures::from_ref(fixtures::ref_star(fixtures::to_ref(a)))));
    for (int k = 0; k <= 2 * n; ++k) CHECK(leq(mat_power(a, k), s));
    CHECK(leq(plus(a), s));
    for (Index i = 0; i < n; ++i) CHECK(s(i, i) >= Trop::one());
    CHECK(equal(star(s), s));
  }
}

TEST_CASE("conjugate laws", "[linalg]") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> col(0, 4);
  for (int t = 0; t < 100; ++t) {
    const TropMatrix a = fixtures::random_instance(rng);
    const Index n = a.rows();
    // One finite entry per row.
    TropMatrix p = zeros<MaxPlus>(n, n);
    for (Index i = 0; i < n; ++i) {
      std::vector<Index> finite;
      for (Index j = 0; j < n; ++j)
        if (!a(i, j).is_zero()) finite.push_back(j);
      const Index j = finite[static_cast<std::size_t>(col(rng)) % finite.size()];
      p(i, j) = a(i, j);
    }
    CHECK(leq(mat_mul(conjugate_transpose(p), p), identity<MaxPlus>(n)));
    CHECK(leq(identity<MaxPlus>(n), mat_mul(p, conjugate_transpose(p))));

    const TropVector x = fixtures::random_regular(rng, n), y = fixtures::random_regular(rng, n);
    const TropMatrix xy = mat_mul(x, conjugate_transpose(y));
    const Trop s = mat_mul(conjugate_transpose(x), y)(0, 0);
    CHECK(leq(scalar_mul(inv(s), identity<MaxPlus>(n)), xy));
    CHECK(leq(identity<MaxPlus>(n), mat_mul(x, conjugate_transpose(x))));
  }
}

TEST_CASE("trace is invariant under permutation", "[linalg]") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 50; ++t) {
    const TropMatrix a = fixtures::random_instance(rng);
    std::vector<Index> p(static_cast<std::size_t>(a.rows()));
    std::iota(p.begin(), p.end(), Index{0});
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(trace(permute(a, p)) == trace(a));
    CHECK(big_tr(permute(a, p)) == big_tr(a));
  }
}

TEST_CASE("min-plus matrices", "[linalg]") {
  using M = Element<MinPlus>;
  Matrix<MinPlus> a(2, 2);
  a << M(1L), M(4L), M::zero(), M(2L);
  const Matrix<MinPlus> a2 = mat_mul(a, a);
  CHECK(a2(0, 0) == M(2L));
  CHECK(a2(0, 1) == M(5L));
  CHECK(a2(1, 0).is_zero());
  CHECK(trace(a) == M(1L));
}
