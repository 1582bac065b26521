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

#include "tropsolve/spectral.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

namespace tropsolve {

namespace {

// Tarjan's algorithm on the arc pattern i -> j (a_ij non-zero, i != j).
// Returns component ids; components are numbered in reverse topological
// order of the arcs (a component only reaches lower-numbered ones).
std::vector<Index> strong_components(const TropMatrix& a, Index& count) {
  const Index n = a.rows();
  std::vector<Index> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  Index next_index = 0;
  count = 0;
  std::function<void(Index)> visit = [&](Index v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (Index w = 0; w < n; ++w) {
      if (w == v || a(v, w).is_zero()) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      Index w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = count;
      } while (w != v);
      ++count;
    }
  };
  for (Index v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return comp;
}

}  // namespace

Index NormalForm::offset(Index block) const {
  Index at = 0;
  for (Index b = 0; b < block; ++b) at += block_sizes[b];
  return at;
}

std::vector<Index> NormalForm::position() const {
  std::vector<Index> pos(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<Index>(k);
  return pos;
}

TropMatrix NormalForm::rows_to_original(const TropMatrix& m) const {
  if (m.rows() != static_cast<Index>(order.size()))
    throw ShapeError("rows_to_original: row count does not match the normal form");
  TropMatrix out(m.rows(), m.cols());
  for (Index k = 0; k < m.rows(); ++k) out.row(order[k]) = m.row(k);
  return out;
}

TropMatrix NormalForm::square_to_original(const TropMatrix& m) const {
  const Index n = static_cast<Index>(order.size());
  if (m.rows() != n || m.cols() != n)
    throw ShapeError("square_to_original: shape does not match the normal form");
  TropMatrix out(n, n);
  for (Index k = 0; k < n; ++k)
    for (Index l = 0; l < n; ++l) out(order[k], order[l]) = m(k, l);
  return out;
}

bool is_irreducible(const TropMatrix& a) {
  require_square(a, "is_irreducible");
  if (a.rows() == 1) return !a(0, 0).is_zero();
  Index count = 0;
  strong_components(a, count);
  return count == 1;
}

Trop trace_radius(const TropMatrix& a) {
  require_square(a, "trace_radius");
  TropMatrix p = a;
  Trop rho = trace(p);
  for (Index m = 2; m <= a.rows(); ++m) {
    p = mat_mul(p, a);
    rho.add_assign(pow(trace(p), Rational(1, m)));
  }
  return rho;
}

NormalForm normal_form(const TropMatrix& a) {
  require_square(a, "normal_form");
  const Index n = a.rows();
  Index count = 0;
  const std::vector<Index> comp = strong_components(a, count);

  std::vector<std::vector<Index>> members(count);
  for (Index v = 0; v < n; ++v) members[comp[v]].push_back(v);  // ascending

  // deps[c]: components that c has arcs into (must precede c).
  std::vector<std::set<Index>> deps(count);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (comp[i] != comp[j] && !a(i, j).is_zero()) deps[comp[i]].insert(comp[j]);

  std::vector<Trop> lambda(count);
  for (Index c = 0; c < count; ++c) {
    const auto& m = members[c];
    TropMatrix block(m.size(), m.size());
    for (std::size_t k = 0; k < m.size(); ++k)
      for (std::size_t l = 0; l < m.size(); ++l) block(k, l) = a(m[k], m[l]);
    lambda[c] = trace_radius(block);
  }

  std::vector<Index> sources;
  for (Index c = 0; c < count; ++c)
    if (deps[c].empty()) sources.push_back(c);
  std::sort(sources.begin(), sources.end(), [&](Index x, Index y) {
    if (lambda[x] != lambda[y]) return lambda[x] < lambda[y];
    return members[x].front() < members[y].front();
  });

  std::vector<Index> sequence = sources;
  std::vector<bool> placed(count, false);
  for (Index c : sources) placed[c] = true;
  // Kahn over the remaining components; ready ones by smallest member.
  std::vector<Index> pending(count, 0);
  for (Index c = 0; c < count; ++c) pending[c] = static_cast<Index>(deps[c].size());
  std::vector<std::vector<Index>> dependents(count);
  for (Index c = 0; c < count; ++c)
    for (Index d : deps[c]) dependents[d].push_back(c);
  using Ready = std::pair<Index, Index>;  // (smallest member, component)
  std::priority_queue<Ready, std::vector<Ready>, std::greater<>> ready;
  auto release = [&](Index c) {
    for (Index d : dependents[c])
      if (--pending[d] == 0 && !placed[d]) ready.emplace(members[d].front(), d);
  };
  for (Index c : sources) release(c);
  while (!ready.empty()) {
    const Index c = ready.top().second;
    ready.pop();
    placed[c] = true;
    sequence.push_back(c);
    release(c);
  }
  if (static_cast<Index>(sequence.size()) != count)
    throw InconsistencyError("normal_form: condensation is not acyclic");

  NormalForm nf;
  nf.sources = static_cast<Index>(sources.size());
  for (Index c : sequence) {
    nf.block_sizes.push_back(static_cast<Index>(members[c].size()));
    nf.block_eigenvalues.push_back(lambda[c]);
    nf.order.insert(nf.order.end(), members[c].begin(), members[c].end());
  }
  nf.permuted.resize(n, n);
  for (Index k = 0; k < n; ++k)
    for (Index l = 0; l < n; ++l) nf.permuted(k, l) = a(nf.order[k], nf.order[l]);
  return nf;
}

Spectrum spectral_radius(const TropMatrix& a) {
  const NormalForm nf = normal_form(a);
  Spectrum s;
  s.rho = trace_radius(a);
  s.per_block = nf.block_eigenvalues;
  Trop joined;
  for (const auto& l : s.per_block) joined.add_assign(l);
  if (joined != s.rho)
    throw InconsistencyError("spectral_radius: block eigenvalues disagree with the trace formula");
  return s;
}

TropMatrix eigenvectors(const TropMatrix& a) {
  if (!is_irreducible(a)) throw DomainError("eigenvectors: matrix is reducible");
  const Trop lambda = trace_radius(a);
  if (lambda.is_zero()) throw DomainError("eigenvectors: eigenvalue is zero");
  return times_operator(scalar_mul(inv(lambda), a));
}

}  // namespace tropsolve
