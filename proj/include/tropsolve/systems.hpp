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

/**
 * @file
 *
 * Vector inequalities and equations, and tropical linear dependence.
 */

#ifndef TROPSOLVE_SYSTEMS_HPP
#define TROPSOLVE_SYSTEMS_HPP

#include <optional>

#include "tropsolve/linalg.hpp"

namespace tropsolve {

enum class SolutionKind { Unique, Family, Infeasible };

/// Regular solutions written as x = particular (+) generator u, u regular.
/// A Family without a particular part carries the zero vector there.
struct EquationSolution {
  SolutionKind kind = SolutionKind::Infeasible;
  std::optional<TropVector> particular;
  std::optional<TropMatrix> generator;
};

/// Greatest solution (d- A)- of A x <= d; A column-regular, d regular.
TropVector solve_upper(const TropMatrix& a, const TropVector& d);

/// Greatest x with A x <= b for arbitrary A and b. Coordinates that can only be
/// the zero come out as the zero; coordinates left unconstrained by an all-zero
/// column also come out as the zero.
TropVector residuate(const TropMatrix& a, const TropVector& b);

/// Regular solutions of A x <= x.
EquationSolution solve_fixpoint_inequality(const TropMatrix& a);

/// Regular solutions of A x (+) b = x for irreducible A and non-zero b.
EquationSolution solve_affine(const TropMatrix& a, const TropVector& b);

/// True iff b lies in the column span of A.
bool is_dependent(const TropVector& b, const TropMatrix& a);

/// Drops, scanning columns left to right, every column that is dependent on
/// the other columns still present. Zero columns are always dropped.
TropMatrix independent_columns(const TropMatrix& m);

}  // namespace tropsolve

#endif  // TROPSOLVE_SYSTEMS_HPP
