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
 * Irreducibility, block-triangular normal forms and spectral radii of
 * max-plus matrices.
 */

#ifndef TROPSOLVE_SPECTRAL_HPP
#define TROPSOLVE_SPECTRAL_HPP

#include <vector>

#include "tropsolve/linalg.hpp"

namespace tropsolve {

/**
 * Lower block-triangular normal form of a square matrix.
 *
 * Diagonal block b covers positions [offset(b), offset(b) + block_sizes[b])
 * of `permuted`. The first `sources` blocks have no non-zero entries outside
 * their diagonal block and are sorted by increasing eigenvalue (ties by the
 * smallest original index they contain); the remaining blocks follow in a
 * topological order of the condensation, each with some non-zero block to its
 * left.
 */
struct NormalForm {
  /// order[k] is the original index placed at position k.
  std::vector<Index> order;
  std::vector<Index> block_sizes;
  /// Number of leading blocks with zero off-diagonal blocks (r).
  Index sources = 0;
  std::vector<Trop> block_eigenvalues;
  /// permuted(k, l) == A(order[k], order[l]).
  TropMatrix permuted;

  Index block_count() const { return static_cast<Index>(block_sizes.size()); }
  Index offset(Index block) const;
  /// Inverse of `order`: position[i] is where original index i went.
  std::vector<Index> position() const;

  auto diagonal_block(Index b) const {
    return permuted.block(offset(b), offset(b), block_sizes[b], block_sizes[b]);
  }
  auto block(Index bi, Index bj) const {
    return permuted.block(offset(bi), offset(bj), block_sizes[bi], block_sizes[bj]);
  }

  /// Rows given in normal-form coordinates, reordered to original indices.
  TropMatrix rows_to_original(const TropMatrix& m) const;
  /// Square matrix in normal-form coordinates, both indices mapped back.
  TropMatrix square_to_original(const TropMatrix& m) const;
};

struct Spectrum {
  /// lambda = lambda_1 (+) ... (+) lambda_s.
  Trop rho;
  std::vector<Trop> per_block;
};

/// True iff the digraph with an arc i -> j for each non-zero a_ij is strongly
/// connected. A 1x1 matrix is irreducible only when its entry is non-zero.
bool is_irreducible(const TropMatrix& a);

NormalForm normal_form(const TropMatrix& a);

/// (+)_{m=1..n} tr(A^m)^(1/m): the eigenvalue of an irreducible matrix and the
/// spectral radius of any square matrix.
Trop trace_radius(const TropMatrix& a);

Spectrum spectral_radius(const TropMatrix& a);

/// Generator (lambda^-1 A)^x of the eigenvectors of an irreducible matrix.
TropMatrix eigenvectors(const TropMatrix& a);

}  // namespace tropsolve

#endif  // TROPSOLVE_SPECTRAL_HPP
