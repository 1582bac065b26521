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

#include "fixtures.hpp"
#include "tropsolve/systems.hpp"

using namespace tropsolve;
using fixtures::mat;
using fixtures::vec;

namespace {

// x_j = min over finite a_ij of d_i - a_ij.
TropVector upper_by_hand(const TropMatrix& a, const TropVector& d) {
  TropVector x(a.cols());
  for (Index j = 0; j < a.cols(); ++j) {
    std::optional<Rational> best;
    for (Index i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero()) {
        const Rational v = d(i).value() - a(i, j).value();
        if (!best || v < *best) best = v;
      }
    x(j) = Trop(*best);
  }
  return x;
}

TropMatrix random_column_regular(std::mt19937_64& rng) {
  for (;;) {
    const TropMatrix a = fixtures::random_instance(rng);
    if (is_column_regular(a)) return a;
  }
}

const TropMatrix kStarB1 = mat("3 3  0 -1 0  -inf 0 1  -inf -inf 0");
const TropMatrix kStarB2 = mat("3 3  0 -inf -inf  1 0 1  -inf -inf 0");

}  // namespace

TEST_CASE("greatest solution of A x <= d", "[systems]") {
  const TropMatrix a = fixtures::example_a();
  const TropVector d = vec({"0", "0", "0"});
  CHECK(equal(solve_upper(a, d), vec({"-3", "-2", "1"})));
  CHECK(equal(solve_upper(a, d), upper_by_hand(a, d)));
  CHECK(equal(solve_upper(identity<MaxPlus>(3), vec({"4", "-1", "2/3"})), vec({"4", "-1", "2/3"})));
  CHECK_THROWS_AS(solve_upper(mat("2 2 0 -inf 0 -inf"), vec({"0", "0"})), DomainError);
  CHECK_THROWS_AS(solve_upper(a, vec({"0", "-inf", "0"})), DomainError);
}

TEST_CASE("greatest solution is maximal", "[systems]") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const TropMatrix a = random_column_regular(rng);
    const TropVector d = fixtures::random_regular(rng, a.rows());
    const TropVector x = solve_upper(a, d);
    CHECK(equal(x, upper_by_hand(a, d)));
    CHECK(leq(mat_mul(a, x), d));
    for (Index j = 0; j < x.rows(); ++j) {
      TropVector bumped = x;
      bumped(j) = mul(x(j), Trop(Rational(1, 7)));
      CHECK_FALSE(leq(mat_mul(a, bumped), d));
    }
  }
}

TEST_CASE("fixed-point inequality", "[systems]") {
  const EquationSolution none = solve_fixpoint_inequality(zeros<MaxPlus>(2, 2));
  CHECK(none.kind == SolutionKind::Family);
  CHECK(equal(*none.generator, identity<MaxPlus>(2)));

  const EquationSolution b1 = solve_fixpoint_inequality(mat("3 3  0 -1 -inf  -inf 0 1  -inf -inf -inf"));
  CHECK(b1.kind == SolutionKind::Family);
  CHECK(equal(*b1.generator, kStarB1));

  const EquationSolution b3 = solve_fixpoint_inequality(mat("3 3  0 -1 -inf  -inf -inf -inf  -inf 1 2"));
  CHECK(b3.kind == SolutionKind::Infeasible);
  CHECK_FALSE(b3.particular);
  CHECK_FALSE(b3.generator);

  std::mt19937_64 rng(32);
  for (int t = 0; t < 100; ++t) {
    const TropMatrix a = fixtures::random_instance(rng);
    const EquationSolution s = solve_fixpoint_inequality(a);
    CHECK((s.kind == SolutionKind::Family) == (big_tr(a) <= Trop::one()));
    if (s.kind == SolutionKind::Family) CHECK(leq(mat_mul(a, *s.generator), *s.generator));
  }
}

TEST_CASE("affine equation", "[systems]") {
  const EquationSolution scalar = solve_affine(mat("1 1 0"), vec({"5"}));
  CHECK(scalar.kind == SolutionKind::Family);
  CHECK(equal(*scalar.particular, vec({"5"})));
  CHECK(equal(*scalar.generator, mat("1 1 0")));

  const EquationSolution unique = solve_affine(mat("1 1 -2"), vec({"3"}));
  CHECK(unique.kind == SolutionKind::Unique);
  CHECK(equal(*unique.particular, vec({"3"})));
  CHECK_FALSE(unique.generator);

  CHECK(solve_affine(mat("1 1 1"), vec({"0"})).kind == SolutionKind::Infeasible);
  CHECK_THROWS_AS(solve_affine(fixtures::example_a(), vec({"0", "0", "0"})), DomainError);
  CHECK_THROWS_AS(solve_affine(mat("1 1 0"), vec({"-inf"})), DomainError);

  std::mt19937_64 rng(33);
  int families = 0;
  for (int t = 0; t < 400; ++t) {
    TropMatrix a = fixtures::random_instance(rng);
    if (!is_irreducible(a)) continue;
    // Half the instances are scaled to the unit eigenvalue so the family branch runs.
    if (t % 2 == 0) a = scalar_mul(inv(trace_radius(a)), a);
    const TropVector b = fixtures::random_regular(rng, a.rows());
    const EquationSolution s = solve_affine(a, b);
    if (s.kind == SolutionKind::Infeasible) continue;
    CHECK(equal(mat_add(mat_mul(a, *s.particular), b), *s.particular));
    if (s.kind == SolutionKind::Family) {
      ++families;
      const TropVector u = fixtures::random_regular(rng, s.generator->cols());
      const TropVector x = mat_add(*s.particular, mat_mul(*s.generator, u));
      CHECK(equal(mat_add(mat_mul(a, x), b), x));
    }
  }
  CHECK(families > 5);
}

TEST_CASE("linear dependence", "[systems]") {
  const TropMatrix m = fixtures::example_a();
  CHECK(is_dependent(TropVector(m.col(0)), m));
  // (-1, 0, -inf) = (-1) (0, -inf, -inf) (+) (-inf, 0, -inf)
  CHECK(is_dependent(vec({"-1", "0", "-inf"}), mat("3 2  0 -inf  -inf 0  -inf -inf")));
  CHECK(is_dependent(vec({"0", "1", "0"}), mat("3 2  0 -inf  -inf 1  -inf 0")));
  CHECK_FALSE(is_dependent(vec({"0", "0", "0"}), mat("3 2  0 -inf  0 0  -inf -inf")));
  CHECK_FALSE(is_dependent(vec({"0", "0"}), mat("2 2  0 1  -1 0")));
  CHECK_THROWS_AS(is_dependent(vec({"-inf", "-inf"}), mat("2 1 0 0")), DomainError);
}

TEST_CASE("independent columns reproduce the generator", "[systems]") {
  const TropMatrix s = independent_columns(hcat<MaxPlus>({kStarB1, kStarB2}));
  CHECK(equal(s, mat("3 3  0 -inf -inf  -inf 0 1  -inf -inf 0")));

  const TropMatrix stars = hcat<MaxPlus>({
      mat("3 3  0 -1 -2  1 0 -1  -1 -2 0"),
      mat("3 3  0 -inf -inf  1 0 -1  -1 -2 0"),
      mat("3 3  0 -1 -inf  1 0 -inf  2 1 0"),
      mat("3 3  0 -inf -inf  1 0 -inf  2 1 0"),
  });
  CHECK(equal(independent_columns(stars), mat("3 3  0 -inf -inf  1 0 -inf  -1 -2 0")));

  CHECK(independent_columns(mat("2 3  1 1 1  0 0 0")).cols() == 1);
}

TEST_CASE("independent columns are idempotent and span-preserving", "[systems]") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 100; ++t) {
    const TropMatrix m = fixtures::random_instance(rng);
    const TropMatrix r = independent_columns(m);
    CHECK(equal(independent_columns(r), r));
    CHECK(fixtures::same_span(r, m));
    for (Index j = 0; j < r.cols(); ++j) {
      if (r.cols() == 1) break;
      TropMatrix others(r.rows(), r.cols() - 1);
      for (Index k = 0, at = 0; k < r.cols(); ++k)
        if (k != j) others.col(at++) = r.col(k);
      CHECK_FALSE(is_dependent(TropVector(r.col(j)), others));
    }
  }
}
