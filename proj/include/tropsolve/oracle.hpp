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
 * Brute-force references used to check the solvers: grid search for the
 * minima, plain enumeration of sparsified matrices through the generic matrix
 * operations, and the maximum cycle mean by enumerating elementary cycles.
 *
 * Nothing here calls the solver code paths it is meant to check. Every
 * routine refuses work beyond its cap instead of truncating.
 */

#ifndef TROPSOLVE_ORACLE_HPP
#define TROPSOLVE_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "tropsolve/optimizer.hpp"

namespace tropsolve {

inline constexpr std::size_t kDefaultGridCap = 1000000;
inline constexpr std::size_t kDefaultCycleCap = 1000000;

/// Coordinates lo, lo + step, ..., up to hi inclusive.
struct GridSpec {
  Rational lo{-3};
  Rational hi{3};
  Rational step{1};

  /// Throws DomainError unless lo <= hi and step > 0.
  void validate() const;
  std::size_t points_per_axis() const;
};

struct GridResult {
  Trop minimum;
  TropVector argmin;
  std::size_t points = 0;
};

/// Least objective over the regular grid vectors; the first argmin in
/// lexicographic order of coordinates. Points where the objective is
/// undefined (A x zero) are skipped.
GridResult grid_minimum(ProblemKind kind, const TropMatrix& a, const GridSpec& grid,
                        std::size_t cap = kDefaultGridCap);

/// Every one-entry-per-row selection, derived matrices built from A_k-
/// and matrix products. `level` is lambda1 (component) or mu (composite).
std::vector<SparseCandidate> exhaustive_candidates(const TropMatrix& a, ProblemKind kind,
                                                   const Trop& level,
                                                   std::size_t cap = kDefaultCandidateCap);

/// Maximum of weight / length over the elementary cycles of the pattern
/// digraph; the zero when there are none.
Trop cycle_mean_radius(const TropMatrix& a, std::size_t cap = kDefaultCycleCap);

}  // namespace tropsolve

#endif  // TROPSOLVE_ORACLE_HPP
