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
 * Exact scalars of an idempotent semifield over the rationals.
 *
 * An Element is either the zero (bottom) of the semifield or an exact
 * rational. Multiplication is rational addition in every instance; the
 * semifield policy only decides which of two finite values addition keeps.
 * Consequently the one is the rational 0, the inverse is negation and the
 * power x^q is the product x * q.
 *
 * Two policies are provided: MaxPlus (the working instance, zero = -inf) and
 * MinPlus (zero = +inf), the latter only to keep the algebra layer honest
 * about not hard-coding max.
 */

#ifndef TROPSOLVE_SEMIFIELD_HPP
#define TROPSOLVE_SEMIFIELD_HPP

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "tropsolve/errors.hpp"

namespace tropsolve {

using Rational = mpq_class;

/// (Q u {-inf}, max, +): the order induced by addition is the rational order.
struct MaxPlus {
  static constexpr int direction = 1;
  static constexpr std::string_view name = "max-plus";
  static constexpr std::string_view zero_text = "-inf";
};

/// (Q u {+inf}, min, +): the order induced by addition reverses the rational
/// order, so +inf is the least element.
struct MinPlus {
  static constexpr int direction = -1;
  static constexpr std::string_view name = "min-plus";
  static constexpr std::string_view zero_text = "+inf";
};

template <class S>
concept Semifield = requires {
  { S::direction } -> std::convertible_to<int>;
  { S::name } -> std::convertible_to<std::string_view>;
  { S::zero_text } -> std::convertible_to<std::string_view>;
};

template <Semifield S>
class Element {
 public:
  using semifield = S;

  /// The zero of the semifield.
  Element() = default;

  explicit Element(Rational value) : finite_(true), value_(std::move(value)) {
    value_.canonicalize();
  }

  explicit Element(long value) : finite_(true), value_(value) {}

  static Element zero() { return Element(); }
  static Element one() { return Element(0L); }

  bool is_zero() const noexcept { return !finite_; }

  const Rational& value() const {
    if (!finite_) throw DomainError("the zero element has no rational value");
    return value_;
  }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  /// Total order induced by addition: a <= b iff a + b == b.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (!a.finite_) return b.finite_ ? std::strong_ordering::less : std::strong_ordering::equal;
    if (!b.finite_) return std::strong_ordering::greater;
    const int c = S::direction * cmp(a.value_, b.value_);
    return c <=> 0;
  }

  /// this = this (+) other
  Element& add_assign(const Element& other) {
    if (other.finite_ && (!finite_ || S::direction * cmp(other.value_, value_) > 0)) {
      finite_ = true;
      value_ = other.value_;
    }
    return *this;
  }

  /// this = this (x) other
  Element& mul_assign(const Element& other) {
    if (!finite_) return *this;
    if (!other.finite_) {
      finite_ = false;
      value_ = 0;
      return *this;
    }
    value_ += other.value_;
    return *this;
  }

  /// this = this (+) a (x) b, without temporaries. Hot loop of every product.
  void accumulate_product(const Element& a, const Element& b) {
    if (!a.finite_ || !b.finite_) return;
    thread_local Rational scratch;
    mpq_add(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    if (!finite_ || S::direction * mpq_cmp(scratch.get_mpq_t(), value_.get_mpq_t()) > 0) {
      finite_ = true;
      mpq_swap(scratch.get_mpq_t(), value_.get_mpq_t());
    }
  }

 private:
  bool finite_ = false;
  Rational value_;
};

template <Semifield S>
Element<S> add(const Element<S>& a, const Element<S>& b) {
  return a < b ? b : a;
}

template <Semifield S>
Element<S> mul(const Element<S>& a, const Element<S>& b) {
  if (a.is_zero() || b.is_zero()) return Element<S>::zero();
  return Element<S>(Rational(a.value() + b.value()));
}

template <Semifield S>
Element<S> inv(const Element<S>& a) {
  if (a.is_zero()) throw DomainError("the zero element is not invertible");
  return Element<S>(Rational(-a.value()));
}

/// a^q for a rational exponent q. The zero admits only positive exponents.
template <Semifield S>
Element<S> pow(const Element<S>& a, const Rational& q) {
  if (a.is_zero()) {
    if (sgn(q) <= 0) throw DomainError("the zero element has no non-positive powers");
    return a;
  }
  return Element<S>(Rational(a.value() * q));
}

template <Semifield S>
Element<S> pow(const Element<S>& a, long q) {
  return pow(a, Rational(q));
}

/// Canonical text: the zero as S::zero_text, integers bare, others as p/q.
template <Semifield S>
std::string to_string(const Element<S>& a) {
  if (a.is_zero()) return std::string(S::zero_text);
  return a.value().get_str();
}

template <Semifield S>
std::ostream& operator<<(std::ostream& os, const Element<S>& a) {
  return os << to_string(a);
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Parses an integer, a fraction p/q or the zero token. Decimals are refused
/// because they cannot be read exactly.
template <Semifield S>
Element<S> parse_scalar(std::string_view token) {
  if (token == S::zero_text) return Element<S>::zero();
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw ParseError("not a scalar: '" + std::string(token) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(token) + "'");
  if (negative) n = -n;
  return Element<S>(Rational(n, d));
}

}  // namespace tropsolve

#endif  // TROPSOLVE_SEMIFIELD_HPP
