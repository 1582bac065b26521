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

#include "tropsolve/systems.hpp"

#include <algorithm>
#include <vector>

#include "tropsolve/spectral.hpp"

namespace tropsolve {

namespace {

// Coefficient of column j in the greatest combination below b; the zero when
// the column cannot take part (it hits a zero coordinate of b, or is zero).
template <class Col>
Trop residual_coefficient(const TropMatrix& m, Index j, const Col& b) {
  bool any = false;
  Rational best;
  for (Index i = 0; i < m.rows(); ++i) {
    if (m(i, j).is_zero()) continue;
    if (b(i).is_zero()) return Trop::zero();
    Rational c = b(i).value() - m(i, j).value();
    if (!any || c < best) best = std::move(c);
    any = true;
  }
  return any ? Trop(best) : Trop::zero();
}

template <class Col>
bool in_span(const TropMatrix& m, const std::vector<Index>& cols, Index skip, const Col& b) {
  TropVector y = zero_vector<MaxPlus>(m.rows());
  for (Index j : cols) {
    if (j == skip) continue;
    const Trop c = residual_coefficient(m, j, b);
    if (c.is_zero()) continue;
    for (Index i = 0; i < m.rows(); ++i) y(i).accumulate_product(c, m(i, j));
  }
  for (Index i = 0; i < m.rows(); ++i)
    if (y(i) != b(i)) return false;
  return true;
}

}  // namespace

TropVector solve_upper(const TropMatrix& a, const TropVector& d) {
  if (a.rows() != d.rows()) throw ShapeError("solve_upper: A and d do not conform");
  if (!is_column_regular(a)) throw DomainError("solve_upper: A must be column-regular");
  if (!is_regular(d)) throw DomainError("solve_upper: d must be regular");
  return conjugate_transpose(mat_mul(conjugate_transpose(d), a));
}

TropVector residuate(const TropMatrix& a, const TropVector& b) {
  if (a.rows() != b.rows()) throw ShapeError("residuate: A and b do not conform");
  TropVector x(a.cols());
  for (Index j = 0; j < a.cols(); ++j) x(j) = residual_coefficient(a, j, b);
  return x;
}

EquationSolution solve_fixpoint_inequality(const TropMatrix& a) {
  require_square(a, "solve_fixpoint_inequality");
  EquationSolution s;
  if (big_tr(a) > Trop::one()) return s;
  s.kind = SolutionKind::Family;
  s.particular = zero_vector<MaxPlus>(a.rows());
  s.generator = star(a);
  return s;
}

EquationSolution solve_affine(const TropMatrix& a, const TropVector& b) {
  require_square(a, "solve_affine");
  if (a.rows() != b.rows()) throw ShapeError("solve_affine: A and b do not conform");
  if (!is_irreducible(a)) throw DomainError("solve_affine: A must be irreducible");
  if (is_zero(b)) throw DomainError("solve_affine: b must be non-zero");
  EquationSolution s;
  const Trop t = big_tr(a);
  if (t > Trop::one()) return s;
  s.particular = mat_mul(star(a), b);
  if (t < Trop::one()) {
    s.kind = SolutionKind::Unique;
  } else {
    s.kind = SolutionKind::Family;
    s.generator = times_operator(a);
  }
  return s;
}

bool is_dependent(const TropVector& b, const TropMatrix& a) {
  if (a.rows() != b.rows()) throw ShapeError("is_dependent: b and A do not conform");
  if (a.cols() == 0) throw ShapeError("is_dependent: A has no columns");
  if (is_zero(b)) throw DomainError("is_dependent: b must be non-zero");
  std::vector<Index> cols(static_cast<std::size_t>(a.cols()));
  for (Index j = 0; j < a.cols(); ++j) cols[j] = j;
  return in_span(a, cols, -1, b);
}

TropMatrix independent_columns(const TropMatrix& m) {
  // Only the last copy of repeated columns can survive the scan: every earlier
  // copy is dependent on it. Dropping them up front leaves the outcome intact.
  std::vector<Index> alive;
  for (Index j = 0; j < m.cols(); ++j) {
    if (is_zero(m.col(j))) continue;
    bool repeated = false;
    for (Index k = j + 1; k < m.cols() && !repeated; ++k) repeated = equal(m.col(j), m.col(k));
    if (!repeated) alive.push_back(j);
  }
  if (alive.empty()) throw DomainError("independent_columns: no non-zero column");

  for (std::size_t at = 0; at < alive.size();) {
    if (alive.size() > 1 && in_span(m, alive, alive[at], m.col(alive[at])))
      alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(at));
    else
      ++at;
  }
  TropMatrix out(m.rows(), static_cast<Index>(alive.size()));
  for (std::size_t c = 0; c < alive.size(); ++c) out.col(static_cast<Index>(c)) = m.col(alive[c]);
  return out;
}

}  // namespace tropsolve
