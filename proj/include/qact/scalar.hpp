// Copyright 2026 The qact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "qact/error.hpp"

namespace qact {

// GMP keeps every mpq result in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Exact element of the Gaussian rationals Q(i).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im = Rational(0)) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  static Scalar frac(long num, long den);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

  Scalar inverse() const;
  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar pow(int exponent) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  /// *this -= a * b without building a temporary Scalar.
  void submul(const Scalar& a, const Scalar& b);
  /// *this += a * b
  void addmul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Canonical text form: `re`, or `re+imi` / `re-imi`, e.g. "3/2-1/2i", "0+1i".
std::string format_scalar(const Scalar& s);

/// Parses `rational ((+|-) rational 'i')?` with rational = int ('/' posint)?.
/// Also accepts a pure imaginary value ("2i", "-1/3i") and an omitted unit
/// coefficient on i ("i", "1-i"). Throws ParseError carrying the offending
/// character position.
Scalar parse_scalar(std::string_view text);

/// A deformation parameter q with q^m != 1 for every m >= 1. In Q(i) the
/// only roots of unity are 1, -1, i and -i, so together with 0 those are
/// the rejected values.
class DeformationParameter {
 public:
  const Scalar& value() const { return q_; }
  operator const Scalar&() const { return q_; }  // NOLINT(google-explicit-constructor)

 private:
  explicit DeformationParameter(Scalar q) : q_(std::move(q)) {}
  friend DeformationParameter validate_q(const Scalar& q);

  Scalar q_;
};

DeformationParameter validate_q(const Scalar& q);

}  // namespace qact
