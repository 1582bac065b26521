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

#include "tropsolve/sparsifier.hpp"

#include <functional>
#include <limits>
#include <string>

namespace tropsolve {

namespace {

using Selection = std::vector<Index>;
using Emit = std::function<void(const Selection&, const TropMatrix&)>;

void require_sparsifiable(const TropMatrix& a, const Trop& level, const char* op) {
  require_square(a, op);
  for (Index i = 0; i < a.rows(); ++i)
    if (is_zero(a.row(i)))
      throw HypothesisError("row-regular", std::string(op) + ": row " + std::to_string(i + 1) +
                                               " has no non-zero entry");
  if (level.is_zero()) throw HypothesisError("lambda1 > 0", std::string(op) + ": level is the zero");
}

// Row q of A_k- (A (+) c I) collects (a_pq)^-1 row_p(A (+) c I) over the rows p
// whose selection is q.
TropMatrix selected_residual(const TropMatrix& a, const Selection& sel, const Trop& c) {
  const Index n = a.rows();
  TropMatrix b = zeros<MaxPlus>(n, n);
  for (Index p = 0; p < n; ++p) {
    const Index q = sel[p];
    const Trop w = inv(a(p, q));
    for (Index j = 0; j < n; ++j) {
      b(q, j).accumulate_product(w, a(p, j));
      if (j == p) b(q, j).accumulate_product(w, c);
    }
  }
  return b;
}

void plain_walk(const TropMatrix& a, Index p, Selection& sel, const Emit& emit) {
  for (Index q = 0; q < a.cols(); ++q) {
    if (a(p, q).is_zero()) continue;
    sel[p] = q;
    if (p + 1 == a.rows())
      emit(sel, a);
    else
      plain_walk(a, p + 1, sel, emit);
  }
}

// One level of the backtracking: fix a_pq in row p of w, drop the entries of
// later rows that the fixed term dominates, recurse on the copy. Conditions
// are read from w, writes go to the copy. `c` is the level at which the kept
// term enters (lambda1^-1 or mu) and `c_inv` its inverse. `support` records
// each row at the moment its entry is fixed.
void backtrack(const TropMatrix& w, Index p, Selection& sel, TropMatrix& support, const Trop& c,
               const Trop& c_inv, const Emit& emit) {
  const Index n = w.rows();
  support.row(p) = w.row(p);
  for (Index q = 0; q < n; ++q) {
    if (w(p, q).is_zero()) continue;
    sel[p] = q;
    if (p + 1 == n) {
      emit(sel, support);
      continue;
    }
    TropMatrix next = w;
    const Rational& apq = w(p, q).value();
    for (Index i = p + 1; i < n; ++i) {
      if (w(i, q).is_zero()) continue;
      const Rational base = w(i, q).value() - apq;
      if (!w(p, i).is_zero() && c.value() + base + w(p, i).value() >= 0) {
        for (Index j = 0; j < n; ++j)
          if (j != q) next(i, j) = Trop::zero();
        continue;
      }
      for (Index j = 0; j < n; ++j) {
        if (j == q || j == p || w(i, j).is_zero() || w(p, j).is_zero()) continue;
        if (base + w(p, j).value() >= w(i, j).value()) next(i, j) = Trop::zero();
      }
      if (p != q && !w(i, p).is_zero()) {
        const Trop t = add(w(p, p), c_inv);
        if (base + t.value() >= w(i, p).value()) next(i, p) = Trop::zero();
      }
    }
    backtrack(next, p + 1, sel, support, c, c_inv, emit);
  }
}

template <class Derive>
std::vector<SparseCandidate> collect(const TropMatrix& original, const TropMatrix& walked,
                                     bool prune, const Trop& c, const Trop& c_inv,
                                     std::size_t cap, Derive derive) {
  if (!prune && cartesian_size(walked) > cap)
    throw CapExceeded("candidate enumeration (" + std::to_string(cartesian_size(walked)) + ")", cap);
  std::vector<SparseCandidate> out;
  Emit emit = [&](const Selection& sel, const TropMatrix& support) {
    if (out.size() >= cap) throw CapExceeded("candidate enumeration", cap);
    SparseCandidate k;
    k.selection = sel;
    k.sparse = sparsify(original, sel);
    k.support = support;
    k.derived = derive(sel, support);
    k.trace = big_tr(k.derived);
    k.accepted = k.trace <= Trop::one();
    out.push_back(std::move(k));
  };
  Selection sel(static_cast<std::size_t>(walked.rows()), 0);
  TropMatrix support = walked;
  if (prune)
    backtrack(walked, 0, sel, support, c, c_inv, emit);
  else
    plain_walk(walked, 0, sel, emit);
  return out;
}

}  // namespace

std::size_t cartesian_size(const TropMatrix& a) {
  constexpr std::size_t top = std::numeric_limits<std::size_t>::max();
  std::size_t total = 1;
  for (Index i = 0; i < a.rows(); ++i) {
    std::size_t finite = 0;
    for (Index j = 0; j < a.cols(); ++j) finite += a(i, j).is_zero() ? 0 : 1;
    if (finite == 0) return 0;
    total = total > top / finite ? top : total * finite;
  }
  return total;
}

TropMatrix sparsify(const TropMatrix& a, const std::vector<Index>& selection) {
  if (static_cast<Index>(selection.size()) != a.rows())
    throw ShapeError("sparsify: selection length differs from the row count");
  TropMatrix out = zeros<MaxPlus>(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    const Index q = selection[i];
    if (q < 0 || q >= a.cols() || a(i, q).is_zero())
      throw DomainError("sparsify: selection " + std::to_string(q + 1) + " in row " +
                        std::to_string(i + 1) + " is not a non-zero entry");
    out(i, q) = a(i, q);
  }
  return out;
}

TropMatrix component_derived(const TropMatrix& support, const std::vector<Index>& selection,
                             const Trop& lambda1) {
  sparsify(support, selection);  // validates
  return selected_residual(support, selection, lambda1);
}

TropMatrix composite_derived(const TropMatrix& support, const TropMatrix& a,
                             const std::vector<Index>& selection, const Trop& mu) {
  sparsify(support, selection);
  if (a.rows() != support.rows() || a.cols() != support.cols())
    throw ShapeError("composite_derived: support and A differ in shape");
  const Trop mu_inv = inv(mu);
  TropMatrix b = selected_residual(support, selection, mu_inv);
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i) b(i, j).accumulate_product(mu_inv, a(i, j));
  return b;
}

TropMatrix reduce_composite(const TropMatrix& a, const Trop& mu) {
  require_square(a, "reduce_composite");
  const Index n = a.rows();
  TropMatrix r = a;
  for (Index i = 0; i < n; ++i) {
    bool alone = false;
    for (Index p = 0; p < n && !alone; ++p) {
      if (p == i || r(i, p).is_zero() || a(p, i).is_zero()) continue;
      if (r(i, p).value() + a(p, i).value() >= 0) {
        for (Index j = 0; j < n; ++j)
          if (j != p) r(i, j) = Trop::zero();
        alone = true;
      }
    }
    if (alone) continue;
    for (Index q = 0; q < n; ++q) {
      if (r(i, q).is_zero()) continue;
      const Rational bar = mu.value() + r(i, q).value();
      for (Index p = 0; p < n; ++p) {
        if (p == i || p == q || r(i, p).is_zero() || a(p, q).is_zero()) continue;
        if (r(i, p).value() + a(p, q).value() >= bar) {
          r(i, q) = Trop::zero();
          break;
        }
      }
    }
  }
  return r;
}

std::vector<SparseCandidate> enumerate_component(const TropMatrix& a, const Trop& lambda1,
                                                 bool prune, std::size_t cap) {
  require_sparsifiable(a, lambda1, "enumerate_component");
  return collect(a, a, prune, inv(lambda1), lambda1, cap,
                 [&](const Selection& s, const TropMatrix& w) { return component_derived(w, s, lambda1); });
}

std::vector<SparseCandidate> enumerate_composite(const TropMatrix& a, const Trop& mu, bool prune,
                                                 std::size_t cap) {
  require_sparsifiable(a, mu, "enumerate_composite");
  if (mu < Trop::one()) throw DomainError("enumerate_composite: mu must be at least the unit");
  const TropMatrix walked = prune ? reduce_composite(a, mu) : a;
  return collect(a, walked, prune, mu, inv(mu), cap,
                 [&](const Selection& s, const TropMatrix& w) { return composite_derived(w, a, s, mu); });
}

}  // namespace tropsolve
