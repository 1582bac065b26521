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
 * Sparsified matrices: one non-zero entry kept per row.
 *
 * A candidate is identified by its selection vector (the column kept in each
 * row). Candidates are generated either by plain cartesian enumeration or by a
 * backtracking recursion that drops entries dominated by the entry already
 * fixed in an earlier row. Both walk the columns of each row in ascending
 * order, so candidates come out in lexicographic order of selections.
 *
 * Every candidate carries its derived matrix B_k, Tr(B_k) and whether
 * Tr(B_k) <= 1; rejected candidates are kept so callers can log them.
 *
 * B_k is built from the rows as they stood when each row's entry was fixed.
 * Without pruning these are the rows of A. With pruning a row may have lost
 * entries dominated by an earlier choice, and the entry kept by the "row
 * already satisfied" rule need not be the largest term of the original row;
 * only the reduced row makes x >= B_k x hold for every solution reached
 * through that branch.
 */

#ifndef TROPSOLVE_SPARSIFIER_HPP
#define TROPSOLVE_SPARSIFIER_HPP

#include <cstddef>
#include <vector>

#include "tropsolve/linalg.hpp"

namespace tropsolve {

inline constexpr std::size_t kDefaultCandidateCap = 10000;

struct SparseCandidate {
  /// selection[i] is the column kept in row i.
  std::vector<Index> selection;
  /// A_k: A with every entry off the selection set to the zero.
  TropMatrix sparse;
  /// Row i as it stood when selection[i] was fixed; A itself without pruning.
  TropMatrix support;
  /// B_k.
  TropMatrix derived;
  Trop trace;
  bool accepted = false;
};

/// Product over rows of the number of non-zero entries, saturated at
/// SIZE_MAX.
std::size_t cartesian_size(const TropMatrix& a);

/// A with the entries off `selection` set to the zero.
TropMatrix sparsify(const TropMatrix& a, const std::vector<Index>& selection);

/// B = A_k- (W (+) lambda1 I), computed row by row from the selection. W is
/// the support (A itself for the plain formula).
TropMatrix component_derived(const TropMatrix& support, const std::vector<Index>& selection,
                             const Trop& lambda1);

/// B = A_k- W (+) mu^-1 (A_k- (+) A), computed row by row from the selection.
TropMatrix composite_derived(const TropMatrix& support, const TropMatrix& a,
                             const std::vector<Index>& selection, const Trop& mu);

/// Pre-reduction for the composite problem. Rows are processed in ascending
/// order. Row i first keeps a_ip alone when a_ip a_pi >= 1 for some p != i;
/// otherwise a_iq is dropped whenever a_ip a_pq >= mu a_iq for some p not in
/// {i, q}. a_ip is read from the row as reduced so far, a_pi and a_pq from A.
TropMatrix reduce_composite(const TropMatrix& a, const Trop& mu);

/// Candidates for x <= lambda1^-1 A x. Throws HypothesisError on a zero row
/// or lambda1 equal to the zero, CapExceeded past `cap` candidates.
std::vector<SparseCandidate> enumerate_component(const TropMatrix& a, const Trop& lambda1,
                                                 bool prune,
                                                 std::size_t cap = kDefaultCandidateCap);

/// Candidates for A x <= mu x, x <= mu A x. With prune set, A is reduced by
/// reduce_composite before the backtracking; the mu^-1 A term of B_k always
/// uses the given A.
std::vector<SparseCandidate> enumerate_composite(const TropMatrix& a, const Trop& mu, bool prune,
                                                 std::size_t cap = kDefaultCandidateCap);

}  // namespace tropsolve

#endif  // TROPSOLVE_SPARSIFIER_HPP
