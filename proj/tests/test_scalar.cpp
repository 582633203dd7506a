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


#include <random>

#include "doctest.h"
#include "qact/error.hpp"
#include "qact/scalar.hpp"

using qact::ErrorCode;
using qact::parse_scalar;
using qact::Scalar;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const qact::Error& e) {
    return e.code();
  }
  FAIL("expected qact::Error");
  return ErrorCode::InvalidInput;
}

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return {qact::Rational(num(rng), den(rng)), qact::Rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
  const Scalar a(1, 2), b(3, -1);
  CHECK(a * b == Scalar(5, 5));
  CHECK(a + b == Scalar(4, 1));
  CHECK(a - b == Scalar(-2, 3));
  // (1+2i)/(3-i) = (1+2i)(3+i)/10 = (1+7i)/10
  CHECK(a / b == Scalar(qact::Rational(1, 10), qact::Rational(7, 10)));
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(Scalar(2).pow(-3) == Scalar::frac(1, 8));
  CHECK(Scalar(1, 1).pow(4) == Scalar(-4));
}

TEST_CASE("division by zero") {
  CHECK(code_of([] { (void)Scalar(0).inverse(); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { (void)(Scalar(3) / Scalar(0)); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("canonical text form") {
  CHECK(qact::format_scalar(Scalar(7)) == "7");
  CHECK(qact::format_scalar(Scalar(qact::Rational(3, 2), qact::Rational(-1, 2))) == "3/2-1/2i");
  CHECK(qact::format_scalar(Scalar::i()) == "0+1i");
  CHECK(qact::format_scalar(Scalar(qact::Rational(6, 4))) == "3/2");
  CHECK(parse_scalar("3/2-1/2i") == Scalar(qact::Rational(3, 2), qact::Rational(-1, 2)));
  CHECK(parse_scalar("-4/6") == Scalar(qact::Rational(-2, 3)));
  CHECK(parse_scalar("i") == Scalar::i());
  CHECK(parse_scalar("1-i") == Scalar(1, -1));
  CHECK(parse_scalar("2i") == Scalar(0, 2));
}

TEST_CASE("parse errors carry a position") {
  for (const char* bad : {"", "1/0", "abc", "1+", "1+2", "3/", "1.5", "2i3"}) {
    CAPTURE(bad);
    try {
      (void)parse_scalar(bad);
      FAIL("accepted");
    } catch (const qact::Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      CHECK(e.position().has_value());
    }
  }
}

TEST_CASE("round trip and field axioms on random values") {
  std::mt19937_64 rng(20260101);
  for (int t = 0; t < 500; ++t) {
    const Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    CHECK(parse_scalar(qact::format_scalar(x)) == x);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
    Scalar acc = x;
    acc.submul(y, z);
    CHECK(acc == x - y * z);
    acc.addmul(y, z);
    CHECK(acc == x);
  }
}

TEST_CASE("deformation parameter validation") {
  for (const Scalar& bad : {Scalar(0), Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()}) {
    CHECK(code_of([&] { (void)qact::validate_q(bad); }) == ErrorCode::InvalidQ);
  }
  for (const Scalar& good : {Scalar(2), Scalar(1, 1), Scalar::frac(1, 2), Scalar(-3), Scalar(0, 2)}) {
    CHECK(qact::validate_q(good).value() == good);
  }
}
