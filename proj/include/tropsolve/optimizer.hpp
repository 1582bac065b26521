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
 * Complete solutions of the two minimization problems over regular x:
 *
 *  - component: minimize (A x)- x
 *  - composite: minimize x- A x (+) (A x)- x
 *
 * for arbitrary square A without zero rows. Let lambda1 be the eigenvalue of
 * the first diagonal block of the normal form. The component minimum is
 * lambda1^-1 and the solutions are the regular x with x <= lambda1^-1 A x.
 * The composite minimum is mu = lambda1 (+) ... (+) lambda_s (+) lambda1^-1
 * and the solutions are the regular x with A x <= mu x and x <= mu A x.
 *
 * In both cases the returned `minimum` is also the scalar c that appears in
 * the characterization, so satisfies_characterization(kind, A, minimum, x)
 * is the membership test.
 */

#ifndef TROPSOLVE_OPTIMIZER_HPP
#define TROPSOLVE_OPTIMIZER_HPP

#include <string>
#include <vector>

#include "tropsolve/linalg.hpp"
#include "tropsolve/sparsifier.hpp"
#include "tropsolve/spectral.hpp"

namespace tropsolve {

enum class ProblemKind { Component, Composite };

std::string to_string(ProblemKind kind);

struct SolveOptions {
  /// Backtracking with domination pruning instead of plain enumeration.
  bool prune = true;
  std::size_t max_candidates = kDefaultCandidateCap;
};

struct SolutionSet {
  Trop minimum;
  /// All solutions are S v for regular v; columns mutually independent.
  TropMatrix S;
  /// Explicit block-built family x = G u, u regular.
  TropMatrix partial_generator;
  /// Every generated candidate in generation order, accepted or not, with
  /// indices in the original coordinates.
  std::vector<SparseCandidate> candidates;
  NormalForm normal_form;
  /// Cases the theory treats at a boundary (equal eigenvalues and the like).
  std::vector<std::string> notes;
};

/// Objective at a regular x. Throws DomainError on irregular x or when
/// (A x)- is undefined.
Trop objective(ProblemKind kind, const TropMatrix& a, const TropVector& x);

/// lambda1^-1 or mu after checking the hypotheses (square, no zero row,
/// lambda1 above the zero); HypothesisError otherwise.
Trop minimum_value(ProblemKind kind, const TropMatrix& a);

/// Component: x <= c A x. Composite: A x <= c x and x <= c A x.
bool satisfies_characterization(ProblemKind kind, const TropMatrix& a, const Trop& c,
                                const TropVector& x);

/// The characterization at the problem's own minimum. Columns of S may carry
/// zero entries, so any non-zero x is accepted here.
bool check_membership(ProblemKind kind, const TropMatrix& a, const TropVector& x);

/// minimize x- A x: minimum lambda, solutions (lambda^-1 A)* u.
SolutionSet min_xAx(const TropMatrix& a);

SolutionSet solve_component(const TropMatrix& a, const SolveOptions& options = {});
SolutionSet solve_composite(const TropMatrix& a, const SolveOptions& options = {});
SolutionSet solve(ProblemKind kind, const TropMatrix& a, const SolveOptions& options = {});

/// diag((lambda_1^-1 A_11)^x, ..., (lambda_s^-1 A_ss)^x), rows in the
/// original order. Requires lambda1 <= lambda_i for every block.
TropMatrix special_case_block_diagonal(const TropMatrix& a);

/// Composite problem when every block eigenvalue is the unit: the solutions
/// are exactly those of A x = x.
SolutionSet special_case_unit_eigenvalues(const TropMatrix& a);

}  // namespace tropsolve

#endif  // TROPSOLVE_OPTIMIZER_HPP
