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

#include "tropsolve/optimizer.hpp"

#include <string>

#include "tropsolve/systems.hpp"

namespace tropsolve {

namespace {

NormalForm checked_normal_form(const TropMatrix& a, const char* op) {
  require_square(a, op);
  for (Index i = 0; i < a.rows(); ++i)
    if (is_zero(a.row(i)))
      throw HypothesisError("row-regular", std::string(op) + ": row " + std::to_string(i + 1) +
                                               " has no non-zero entry");
  NormalForm nf = normal_form(a);
  if (nf.block_eigenvalues.front().is_zero())
    throw HypothesisError("lambda1 > 0", std::string(op) + ": first diagonal block has eigenvalue -inf");
  return nf;
}

Trop composite_level(const NormalForm& nf) {
  Trop mu = inv(nf.block_eigenvalues.front());
  for (const auto& l : nf.block_eigenvalues) mu.add_assign(l);
  return mu;
}

// Block-built family in normal-form coordinates. A block with an eigenvalue
// of at least lambda1 contributes its own free columns (lambda_b^-1 A_bb)^x;
// the component problem leaves such a block independent of its predecessors.
// A block below lambda1 is pinned to lambda1^-1 (lambda1^-1 A_bb)* y, where y
// collects the off-diagonal contributions of the blocks before it.
TropMatrix block_family(const NormalForm& nf, ProblemKind kind, std::vector<std::string>* notes) {
  const Index n = static_cast<Index>(nf.order.size());
  const Index s = nf.block_count();
  const Trop& lambda1 = nf.block_eigenvalues.front();

  std::vector<TropMatrix> free(static_cast<std::size_t>(s));
  std::vector<Index> first_col(static_cast<std::size_t>(s), 0);
  Index cols = 0;
  for (Index b = 0; b < s; ++b) {
    const Trop& lb = nf.block_eigenvalues[b];
    if (lb < lambda1) continue;
    free[b] = times_operator(scalar_mul(inv(lb), nf.diagonal_block(b)));
    first_col[b] = cols;
    cols += free[b].cols();
    if (notes && b >= nf.sources && lb == lambda1)
      notes->push_back("block " + std::to_string(b + 1) +
                       " has eigenvalue equal to lambda1; treated as the free case");
  }

  TropMatrix g = zeros<MaxPlus>(n, cols);
  for (Index b = 0; b < s; ++b) {
    const Index off = nf.offset(b), nb = nf.block_sizes[b];
    const Trop& lb = nf.block_eigenvalues[b];
    const bool has_free = !(lb < lambda1);
    if (has_free && (kind == ProblemKind::Component || b < nf.sources)) {
      g.block(off, first_col[b], nb, free[b].cols()) = free[b];
      continue;
    }
    const TropMatrix y = off == 0 ? zeros<MaxPlus>(nb, cols)
                                  : TropMatrix(mat_mul(nf.permuted.block(off, 0, nb, off),
                                                       g.topRows(off)));
    const Trop level = has_free ? lb : lambda1;
    const Trop li = inv(level);
    TropMatrix rows = scalar_mul(li, mat_mul(star(scalar_mul(li, nf.diagonal_block(b))), y));
    if (has_free) rows.middleCols(first_col[b], free[b].cols()) =
        mat_add(rows.middleCols(first_col[b], free[b].cols()), free[b]);
    g.middleRows(off, nb) = rows;
  }
  return g;
}

SparseCandidate to_original(const NormalForm& nf, SparseCandidate k) {
  std::vector<Index> sel(k.selection.size());
  for (std::size_t p = 0; p < sel.size(); ++p) sel[nf.order[p]] = nf.order[k.selection[p]];
  k.selection = std::move(sel);
  k.sparse = nf.square_to_original(k.sparse);
  k.derived = nf.square_to_original(k.derived);
  return k;
}

SolutionSet complete(ProblemKind kind, const TropMatrix& a, const SolveOptions& options) {
  const char* op = kind == ProblemKind::Component ? "solve_component" : "solve_composite";
  SolutionSet out;
  out.normal_form = checked_normal_form(a, op);
  const NormalForm& nf = out.normal_form;
  const Trop& lambda1 = nf.block_eigenvalues.front();

  std::vector<SparseCandidate> raw;
  if (kind == ProblemKind::Component) {
    out.minimum = inv(lambda1);
    raw = enumerate_component(nf.permuted, lambda1, options.prune, options.max_candidates);
  } else {
    out.minimum = composite_level(nf);
    raw = enumerate_composite(nf.permuted, out.minimum, options.prune, options.max_candidates);
  }

  std::vector<TropMatrix> stars;
  for (const auto& k : raw)
    if (k.accepted) stars.push_back(star(k.derived));
  if (stars.empty())
    throw InconsistencyError(std::string(op) + ": no sparsified matrix passed Tr(B) <= 0");
  out.S = nf.rows_to_original(independent_columns(hcat(stars)));
  out.partial_generator = nf.rows_to_original(block_family(nf, kind, &out.notes));
  out.candidates.reserve(raw.size());
  for (auto& k : raw) out.candidates.push_back(to_original(nf, std::move(k)));
  return out;
}

}  // namespace

std::string to_string(ProblemKind kind) {
  return kind == ProblemKind::Component ? "component" : "composite";
}

Trop objective(ProblemKind kind, const TropMatrix& a, const TropVector& x) {
  require_square(a, "objective");
  if (a.rows() != x.rows()) throw ShapeError("objective: A and x do not conform");
  if (!is_regular(x)) throw DomainError("objective: x must be regular");
  const TropVector ax = mat_mul(a, x);
  if (is_zero(ax)) throw DomainError("objective: A x is the zero vector");
  Trop value = mat_mul(conjugate_transpose(ax), x)(0, 0);
  if (kind == ProblemKind::Composite) value.add_assign(mat_mul(conjugate_transpose(x), ax)(0, 0));
  return value;
}

Trop minimum_value(ProblemKind kind, const TropMatrix& a) {
  const NormalForm nf = checked_normal_form(a, "minimum_value");
  return kind == ProblemKind::Component ? inv(nf.block_eigenvalues.front()) : composite_level(nf);
}

bool satisfies_characterization(ProblemKind kind, const TropMatrix& a, const Trop& c,
                                const TropVector& x) {
  if (a.cols() != x.rows()) throw ShapeError("satisfies_characterization: A and x do not conform");
  const TropVector ax = mat_mul(a, x);
  if (!leq(x, scalar_mul(c, ax))) return false;
  return kind == ProblemKind::Component || leq(ax, scalar_mul(c, x));
}

bool check_membership(ProblemKind kind, const TropMatrix& a, const TropVector& x) {
  if (is_zero(x)) throw DomainError("check_membership: x is the zero vector");
  return satisfies_characterization(kind, a, minimum_value(kind, a), x);
}

SolutionSet min_xAx(const TropMatrix& a) {
  SolutionSet out;
  out.normal_form = normal_form(a);
  const Trop lambda = spectral_radius(a).rho;
  if (lambda.is_zero()) throw HypothesisError("lambda > 0", "min_xAx: spectral radius is -inf");
  out.minimum = lambda;
  out.partial_generator = star(scalar_mul(inv(lambda), a));
  out.S = independent_columns(out.partial_generator);
  return out;
}

SolutionSet solve_component(const TropMatrix& a, const SolveOptions& options) {
  return complete(ProblemKind::Component, a, options);
}

SolutionSet solve_composite(const TropMatrix& a, const SolveOptions& options) {
  return complete(ProblemKind::Composite, a, options);
}

SolutionSet solve(ProblemKind kind, const TropMatrix& a, const SolveOptions& options) {
  return complete(kind, a, options);
}

TropMatrix special_case_block_diagonal(const TropMatrix& a) {
  const NormalForm nf = checked_normal_form(a, "special_case_block_diagonal");
  const Trop& lambda1 = nf.block_eigenvalues.front();
  for (Index b = 0; b < nf.block_count(); ++b)
    if (nf.block_eigenvalues[b] < lambda1)
      throw HypothesisError("lambda1 <= lambda_i",
                            "special_case_block_diagonal: block " + std::to_string(b + 1) +
                                " has eigenvalue " + to_string(nf.block_eigenvalues[b]) +
                                " below lambda1 = " + to_string(lambda1));
  std::vector<TropMatrix> parts;
  Index cols = 0;
  for (Index b = 0; b < nf.block_count(); ++b) {
    parts.push_back(times_operator(scalar_mul(inv(nf.block_eigenvalues[b]), nf.diagonal_block(b))));
    cols += parts.back().cols();
  }
  TropMatrix d = zeros<MaxPlus>(a.rows(), cols);
  Index at = 0;
  for (Index b = 0; b < nf.block_count(); ++b) {
    d.block(nf.offset(b), at, nf.block_sizes[b], parts[b].cols()) = parts[b];
    at += parts[b].cols();
  }
  return nf.rows_to_original(d);
}

SolutionSet special_case_unit_eigenvalues(const TropMatrix& a) {
  SolutionSet out;
  out.normal_form = checked_normal_form(a, "special_case_unit_eigenvalues");
  const NormalForm& nf = out.normal_form;
  for (Index b = 0; b < nf.block_count(); ++b)
    if (nf.block_eigenvalues[b] != Trop::one())
      throw HypothesisError("lambda_i = 0", "special_case_unit_eigenvalues: block " +
                                                std::to_string(b + 1) + " has eigenvalue " +
                                                to_string(nf.block_eigenvalues[b]));
  out.minimum = Trop::one();
  out.partial_generator = nf.rows_to_original(block_family(nf, ProblemKind::Composite, nullptr));
  out.S = independent_columns(out.partial_generator);
  return out;
}

}  // namespace tropsolve
