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

#include "tropsolve/oracle.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <string>

namespace tropsolve {

namespace {

// Plain rational evaluation; deliberately avoids the matrix layer.
std::optional<Rational> direct_objective(ProblemKind kind, const TropMatrix& a,
                                         const std::vector<Rational>& x) {
  const std::size_t n = x.size();
  std::optional<Rational> best;
  auto bump = [&](const Rational& v) {
    if (!best || v > *best) best = v;
  };
  bool any_row = false;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Rational> ax;
    for (std::size_t j = 0; j < n; ++j) {
      const Trop& e = a(static_cast<Index>(i), static_cast<Index>(j));
      if (e.is_zero()) continue;
      Rational t = e.value() + x[j];
      if (kind == ProblemKind::Composite) bump(t - x[i]);
      if (!ax || t > *ax) ax = std::move(t);
    }
    if (ax) {
      any_row = true;
      bump(x[i] - *ax);
    }
  }
  if (!any_row) return std::nullopt;
  return best;
}

}  // namespace

void GridSpec::validate() const {
  if (step <= 0) throw DomainError("grid: step must be positive");
  if (lo > hi) throw DomainError("grid: lo exceeds hi");
}

std::size_t GridSpec::points_per_axis() const {
  validate();
  const Rational span = (hi - lo) / step;
  const mpz_class whole = span.get_num() / span.get_den();
  if (!whole.fits_ulong_p()) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(whole.get_ui()) + 1;
}

GridResult grid_minimum(ProblemKind kind, const TropMatrix& a, const GridSpec& grid,
                        std::size_t cap) {
  require_square(a, "grid_minimum");
  const std::size_t axis = grid.points_per_axis();
  const std::size_t n = static_cast<std::size_t>(a.rows());
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / axis) throw CapExceeded("grid", cap);
    total *= axis;
  }
  if (total > cap) throw CapExceeded("grid", cap);

  GridResult out;
  std::optional<Rational> best;
  std::vector<std::size_t> digit(n, 0);
  std::vector<Rational> x(n, grid.lo);
  for (std::size_t visited = 0; visited < total; ++visited) {
    ++out.points;
    if (auto v = direct_objective(kind, a, x); v && (!best || *v < *best)) {
      best = v;
      out.argmin.resize(static_cast<Index>(n));
      for (std::size_t i = 0; i < n; ++i) out.argmin(static_cast<Index>(i)) = Trop(x[i]);
    }
    // Odometer, last coordinate fastest.
    for (std::size_t i = n; i-- > 0;) {
      if (++digit[i] < axis) {
        x[i] += grid.step;
        break;
      }
      digit[i] = 0;
      x[i] = grid.lo;
    }
  }
  if (!best) throw DomainError("grid_minimum: objective undefined at every grid point");
  out.minimum = Trop(*best);
  return out;
}

std::vector<SparseCandidate> exhaustive_candidates(const TropMatrix& a, ProblemKind kind,
                                                   const Trop& level, std::size_t cap) {
  require_square(a, "exhaustive_candidates");
  const Index n = a.rows();
  std::vector<std::vector<Index>> choices(static_cast<std::size_t>(n));
  std::size_t total = 1;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) choices[i].push_back(j);
    if (choices[i].empty()) throw DomainError("exhaustive_candidates: zero row");
    if (total > cap / choices[i].size()) throw CapExceeded("exhaustive enumeration", cap);
    total *= choices[i].size();
  }
  if (level.is_zero()) throw DomainError("exhaustive_candidates: level is the zero");

  const TropMatrix shifted = mat_add(a, scalar_mul(level, identity<MaxPlus>(n)));
  const Trop level_inv = inv(level);
  std::vector<SparseCandidate> out;
  std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
  for (std::size_t visited = 0; visited < total; ++visited) {
    SparseCandidate k;
    k.sparse = zeros<MaxPlus>(n, n);
    for (Index i = 0; i < n; ++i) {
      const Index q = choices[i][digit[i]];
      k.selection.push_back(q);
      k.sparse(i, q) = a(i, q);
    }
    const TropMatrix ak_minus = conjugate_transpose(k.sparse);
    if (kind == ProblemKind::Component)
      k.derived = mat_mul(ak_minus, shifted);
    else
      k.derived = mat_add(mat_mul(ak_minus, a), scalar_mul(level_inv, mat_add(ak_minus, a)));
    k.trace = big_tr(k.derived);
    k.accepted = k.trace <= Trop::one();
    out.push_back(std::move(k));
    for (Index i = n; i-- > 0;) {
      if (++digit[i] < choices[i].size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

Trop cycle_mean_radius(const TropMatrix& a, std::size_t cap) {
  require_square(a, "cycle_mean_radius");
  const Index n = a.rows();
  std::optional<Rational> best;
  std::size_t cycles = 0;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  // Cycles are rooted at their least vertex; the walk only visits larger ones.
  std::function<void(Index, Index, const Rational&, Index)> walk =
      [&](Index root, Index v, const Rational& weight, Index length) {
        for (Index w = root; w < n; ++w) {
          if (a(v, w).is_zero()) continue;
          const Rational next = weight + a(v, w).value();
          if (w == root) {
            if (++cycles > cap) throw CapExceeded("cycle enumeration", cap);
            const Rational mean = next / (length + 1);
            if (!best || mean > *best) best = mean;
          } else if (!on_path[w]) {
            on_path[w] = true;
            walk(root, w, next, length + 1);
            on_path[w] = false;
          }
        }
      };
  for (Index root = 0; root < n; ++root) {
    on_path[root] = true;
    walk(root, root, Rational(0), 0);
    on_path[root] = false;
  }
  return best ? Trop(*best) : Trop::zero();
}

}  // namespace tropsolve
