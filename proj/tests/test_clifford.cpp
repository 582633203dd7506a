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


#include "doctest.h"
#include "qact/clifford.hpp"
#include "qact/error.hpp"

using qact::Mat;
using qact::Scalar;
using qact::unit4;

TEST_CASE("model passes its self-test") {
  const auto& model = qact::clifford_model();
  const auto report = qact::clifford_selftest(model);
  CHECK(report.ok());
  CHECK(report.checks.size() == 4);
  CHECK((model.gamma[0] * model.gamma[0]).is_identity());
  CHECK((model.gamma[1] * model.gamma[2] + model.gamma[2] * model.gamma[1]).is_zero());
  for (int k = 1; k <= 3; ++k) CHECK(model.gamma[k] * model.gamma[k] == -Mat::identity(4));
}

TEST_CASE("units from the gamma formulas are the standard units") {
  const auto& model = qact::clifford_model();
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) CHECK(model.unit(a, b) == unit4(a, b));
}

TEST_CASE("invariant expressions") {
  CHECK(qact::eval_gamma_expr("(1-g0)*(1-i*g12)") == Scalar(4) * unit4(4, 4));
  CHECK(qact::eval_gamma_expr("(1+g0)*(1+i*g12)") == Scalar(4) * unit4(1, 1));
  CHECK(qact::eval_gamma_expr("(1-g0)*(-g1+i*g2)*g3") == Scalar(4) * unit4(4, 3));
  CHECK(qact::eval_gamma_expr("(1+g0)(1-i g12)") == Scalar(4) * unit4(2, 2));
  CHECK(qact::eval_gamma_expr("1").is_identity());
  CHECK(qact::eval_gamma_expr("g12") == qact::eval_gamma_expr("g1*g2"));
  CHECK(qact::eval_gamma_expr("1/2*g0 - -1/2*g0") == qact::clifford_model().gamma[0]);
}

TEST_CASE("malformed expressions") {
  for (const char* bad : {"", "(1+g0", "g4", "1+", "x", "1/0*g0", "g0)"}) {
    CAPTURE(bad);
    try {
      (void)qact::parse_gamma_expr(bad);
      FAIL("accepted");
    } catch (const qact::Error& e) {
      CHECK(e.code() == qact::ErrorCode::MalformedExpression);
      CHECK(e.position().has_value());
    }
  }
}

TEST_CASE("express_in_units inverts linear combinations of units") {
  Mat m(4);
  qact::UnitCoefficients expect;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      expect[a][b] = Scalar(qact::Rational(a * 4 + b - 7, 3), a - b);
      m += expect[a][b] * unit4(a + 1, b + 1);
    }
  CHECK(qact::express_in_units(m) == expect);
  const auto c = qact::express_in_units(qact::eval_gamma_expr("(1-g0)*(-g1+i*g2)*g3"));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(c[a][b] == (a == 3 && b == 2 ? Scalar(4) : Scalar(0)));
}
