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
 * Dense tropical matrices and vectors.
 *
 * Storage is plain Eigen dense storage over Element<S>; the tropical operations
 * are free functions taking any Eigen dense expression (blocks, columns,
 * transposes) so callers never copy just to pass a sub-matrix. Eigen's own
 * arithmetic operators are never used on these types: they would compute the
 * conventional sums and products.
 */

#ifndef TROPSOLVE_LINALG_HPP
#define TROPSOLVE_LINALG_HPP

#include <Eigen/Core>

#include <string>
#include <vector>

#include "tropsolve/errors.hpp"
#include "tropsolve/semifield.hpp"

namespace Eigen {

template <tropsolve::Semifield S>
struct NumTraits<tropsolve::Element<S>> : GenericNumTraits<tropsolve::Element<S>> {
  using Real = tropsolve::Element<S>;
  using NonInteger = tropsolve::Element<S>;
  using Literal = tropsolve::Element<S>;
  using Nested = tropsolve::Element<S>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
};

}  // namespace Eigen

namespace tropsolve {

template <Semifield S>
using Matrix = Eigen::Matrix<Element<S>, Eigen::Dynamic, Eigen::Dynamic>;
template <Semifield S>
using Vector = Eigen::Matrix<Element<S>, Eigen::Dynamic, 1>;
template <Semifield S>
using RowVector = Eigen::Matrix<Element<S>, 1, Eigen::Dynamic>;

using Trop = Element<MaxPlus>;
using TropMatrix = Matrix<MaxPlus>;
using TropVector = Vector<MaxPlus>;
using Index = Eigen::Index;

template <class Derived>
using semifield_of = typename Derived::Scalar::semifield;

template <class Derived>
using plain_of = typename Derived::PlainObject;

template <class D1, class D2>
using product_of = Eigen::Matrix<typename D1::Scalar, D1::RowsAtCompileTime, D2::ColsAtCompileTime>;

template <class Derived>
using transpose_of =
    Eigen::Matrix<typename Derived::Scalar, Derived::ColsAtCompileTime, Derived::RowsAtCompileTime>;

template <Semifield S>
Matrix<S> zeros(Index rows, Index cols) {
  return Matrix<S>::Constant(rows, cols, Element<S>::zero());
}

template <Semifield S>
Vector<S> zero_vector(Index dim) {
  return Vector<S>::Constant(dim, Element<S>::zero());
}

template <Semifield S>
Matrix<S> identity(Index n) {
  Matrix<S> m = zeros<S>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = Element<S>::one();
  return m;
}

/// Column vector of n units (the vector with all entries equal to the one).
template <Semifield S>
Vector<S> unit_vector(Index n) {
  return Vector<S>::Constant(n, Element<S>::one());
}

template <class Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* op) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw ShapeError(std::string(op) + ": square non-empty matrix required, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

template <class D1, class D2>
plain_of<D1> mat_add(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("mat_add: shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  plain_of<D1> out = a;
  for (Index j = 0; j < out.cols(); ++j)
    for (Index i = 0; i < out.rows(); ++i) out(i, j).add_assign(b(i, j));
  return out;
}

template <class D1, class D2>
product_of<D1, D2> mat_mul(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  if (a.cols() != b.rows())
    throw ShapeError("mat_mul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + ")");
  product_of<D1, D2> out(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      auto& acc = out(i, j);
      acc = typename D1::Scalar();
      for (Index k = 0; k < a.cols(); ++k) acc.accumulate_product(a(i, k), b(k, j));
    }
  return out;
}

template <class Derived>
plain_of<Derived> scalar_mul(const typename Derived::Scalar& x, const Eigen::MatrixBase<Derived>& a) {
  plain_of<Derived> out = a;
  for (Index j = 0; j < out.cols(); ++j)
    for (Index i = 0; i < out.rows(); ++i) out(i, j).mul_assign(x);
  return out;
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& a) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero()) return false;
  return true;
}

/// A- : transpose with every non-zero entry inverted. Undefined for the zero
/// matrix.
template <class Derived>
transpose_of<Derived> conjugate_transpose(const Eigen::MatrixBase<Derived>& a) {
  if (is_zero(a)) throw DomainError("conjugate_transpose: zero matrix");
  transpose_of<Derived> out(a.cols(), a.rows());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out(j, i) = a(i, j).is_zero() ? a(i, j) : inv(a(i, j));
  return out;
}

/// Entry-wise a <= b.
template <class D1, class D2>
bool leq(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("leq: shape mismatch");
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) > b(i, j)) return false;
  return true;
}

template <class D1, class D2>
bool equal(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class Derived>
bool is_row_regular(const Eigen::MatrixBase<Derived>& a) {
  for (Index i = 0; i < a.rows(); ++i)
    if (is_zero(a.row(i))) return false;
  return true;
}

template <class Derived>
bool is_column_regular(const Eigen::MatrixBase<Derived>& a) {
  for (Index j = 0; j < a.cols(); ++j)
    if (is_zero(a.col(j))) return false;
  return true;
}

/// No zero entries at all. For vectors this is the usual regularity.
template <class Derived>
bool is_regular(const Eigen::MatrixBase<Derived>& x) {
  for (Index j = 0; j < x.cols(); ++j)
    for (Index i = 0; i < x.rows(); ++i)
      if (x(i, j).is_zero()) return false;
  return true;
}

template <class Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived>& a) {
  require_square(a, "trace");
  typename Derived::Scalar t;
  for (Index i = 0; i < a.rows(); ++i) t.add_assign(a(i, i));
  return t;
}

template <class Derived>
Matrix<semifield_of<Derived>> mat_power(const Eigen::MatrixBase<Derived>& a, int k) {
  require_square(a, "mat_power");
  using S = semifield_of<Derived>;
  Matrix<S> p = identity<S>(a.rows());
  for (int m = 0; m < k; ++m) p = mat_mul(p, a);
  return p;
}

/// Tr(A) = tr A (+) tr A^2 (+) ... (+) tr A^n.
template <class Derived>
typename Derived::Scalar big_tr(const Eigen::MatrixBase<Derived>& a) {
  require_square(a, "big_tr");
  Matrix<semifield_of<Derived>> p = a;
  auto t = trace(p);
  for (Index m = 2; m <= a.rows(); ++m) {
    p = mat_mul(p, a);
    t.add_assign(trace(p));
  }
  return t;
}

namespace detail {

template <class Derived>
void require_star_domain(const Eigen::MatrixBase<Derived>& a, const char* op) {
  require_square(a, op);
  const auto t = big_tr(a);
  if (t > Element<semifield_of<Derived>>::one())
    throw TraceError(std::string(op) + ": Tr(A) exceeds the unit", to_string(t));
}

// I (+) A (I (+) A (...)): n - 1 products.
template <class Derived>
Matrix<semifield_of<Derived>> star_unchecked(const Eigen::MatrixBase<Derived>& a) {
  using S = semifield_of<Derived>;
  const Index n = a.rows();
  const Matrix<S> eye = identity<S>(n);
  Matrix<S> s = eye;
  for (Index m = 1; m < n; ++m) s = mat_add(eye, mat_mul(a, s));
  return s;
}

}  // namespace detail

/// Kleene star A* = I (+) A (+) ... (+) A^(n-1), defined when Tr(A) <= 1.
template <class Derived>
Matrix<semifield_of<Derived>> star(const Eigen::MatrixBase<Derived>& a) {
  detail::require_star_domain(a, "star");
  return detail::star_unchecked(a);
}

/// Kleene plus A+ = A (+) ... (+) A^n = A A*, defined when Tr(A) <= 1.
template <class Derived>
Matrix<semifield_of<Derived>> plus(const Eigen::MatrixBase<Derived>& a) {
  detail::require_star_domain(a, "plus");
  return mat_mul(a, detail::star_unchecked(a));
}

/// Columns of A+ whose diagonal entry is the unit, in ascending column order.
template <class Derived>
Matrix<semifield_of<Derived>> times_operator(const Eigen::MatrixBase<Derived>& a) {
  using S = semifield_of<Derived>;
  const Matrix<S> p = plus(a);
  std::vector<Index> keep;
  for (Index j = 0; j < p.cols(); ++j)
    if (p(j, j) == Element<S>::one()) keep.push_back(j);
  if (keep.empty()) throw EmptyColumnSet("times_operator: no column of A+ has a unit diagonal entry");
  Matrix<S> out(p.rows(), static_cast<Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) out.col(static_cast<Index>(c)) = p.col(keep[c]);
  return out;
}

/// Horizontal concatenation; all parts must share the row count.
template <Semifield S>
Matrix<S> hcat(const std::vector<Matrix<S>>& parts) {
  if (parts.empty()) throw ShapeError("hcat: nothing to concatenate");
  Index cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != parts.front().rows()) throw ShapeError("hcat: row counts differ");
    cols += p.cols();
  }
  Matrix<S> out(parts.front().rows(), cols);
  Index at = 0;
  for (const auto& p : parts) {
    out.middleCols(at, p.cols()) = p;
    at += p.cols();
  }
  return out;
}

}  // namespace tropsolve

#endif  // TROPSOLVE_LINALG_HPP
