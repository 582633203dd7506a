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

#include "qact/scalar.hpp"

#include <cctype>
#include <ostream>

namespace qact {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidQ: return "InvalidQ";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotTriangular: return "NotTriangular";
    case ErrorCode::GridTooLarge: return "GridTooLarge";
    case ErrorCode::MalformedExpression: return "MalformedExpression";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::DeterminantSingular: return "DeterminantSingular";
    case ErrorCode::DeterminantNotCentral: return "DeterminantNotCentral";
    case ErrorCode::AntipodeIdentityFailed: return "AntipodeIdentityFailed";
    case ErrorCode::A11Singular: return "A11Singular";
    case ErrorCode::R22Singular: return "R22Singular";
    case ErrorCode::DNotInvariant: return "DNotInvariant";
    case ErrorCode::DSingular: return "DSingular";
    case ErrorCode::MSingular: return "MSingular";
    case ErrorCode::ModuleAlgebraViolated: return "ModuleAlgebraViolated";
    case ErrorCode::Lemma1Mismatch: return "Lemma1Mismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::InvalidFormParameter: return "InvalidFormParameter";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::UnexpectedEquivalence: return "UnexpectedEquivalence";
    case ErrorCode::CorollaryViolated: return "CorollaryViolated";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Scalar Scalar::frac(long num, long den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return Scalar(r);
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  if (is_real()) return Scalar(Rational(1 / re_));
  Rational norm = re_ * re_ + im_ * im_;
  return Scalar(Rational(re_ / norm), Rational(-im_ / norm));
}

Scalar Scalar::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result(1), base(*this);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (b.is_real()) return Scalar(Rational(a.re_ * b.re_), Rational(a.im_ * b.re_));
  if (a.is_real()) return Scalar(Rational(a.re_ * b.re_), Rational(a.re_ * b.im_));
  return Scalar(Rational(a.re_ * b.re_ - a.im_ * b.im_), Rational(a.re_ * b.im_ + a.im_ * b.re_));
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }
Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this * o.inverse(); }

void Scalar::submul(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_real() && b.is_real()) {
    re_ -= a.re_ * b.re_;
    return;
  }
  *this -= a * b;
}

void Scalar::addmul(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_real() && b.is_real()) {
    re_ += a.re_ * b.re_;
    return;
  }
  *this += a * b;
}

std::string Scalar::str() const { return format_scalar(*this); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << format_scalar(s); }

std::string format_scalar(const Scalar& s) {
  std::string out = s.re().get_str();
  if (s.is_real()) return out;
  if (sgn(s.im()) < 0) {
    out += '-';
    out += Rational(-s.im()).get_str();
  } else {
    out += '+';
    out += s.im().get_str();
  }
  out += 'i';
  return out;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    if (text_.empty()) error("empty scalar");
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = take() == '-';
    if (at_end()) error("expected a number");
    if (peek() == 'i') {
      ++pos_;
      expect_end();
      return Scalar(Rational(0), Rational(negative ? -1 : 1));
    }
    Rational first = unsigned_rational();
    if (negative) first = -first;
    if (at_end()) return Scalar(first);
    if (peek() == 'i') {
      ++pos_;
      expect_end();
      return Scalar(Rational(0), first);
    }
    if (peek() != '+' && peek() != '-') error("expected '+', '-' or end of input");
    bool im_negative = take() == '-';
    Rational im(1);
    if (at_end()) error("expected imaginary part");
    if (peek() != 'i') im = unsigned_rational();
    if (at_end() || peek() != 'i') error("expected 'i'");
    ++pos_;
    expect_end();
    if (im_negative) im = -im;
    return Scalar(first, im);
  }

 private:
  Rational unsigned_rational() {
    mpz_class num = digits();
    mpz_class den = 1;
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t at = pos_;
      den = digits();
      if (den == 0) {
        pos_ = at;
        error("zero denominator");
      }
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  mpz_class digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected digit");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void expect_end() {
    if (!at_end()) error("unexpected trailing input");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void error(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                "cannot parse scalar '" + std::string(text_) + "' at position " +
                    std::to_string(pos_) + ": " + what,
                pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

DeformationParameter validate_q(const Scalar& q) {
  const Scalar excluded[] = {Scalar(0), Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
  for (const auto& bad : excluded) {
    if (q == bad) {
      throw Error(ErrorCode::InvalidQ, "q = " + format_scalar(q) +
                                           " is excluded (zero or a root of unity)");
    }
  }
  return DeformationParameter(q);
}

}  // namespace qact
