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
#include "qact/catalog.hpp"
#include "qact/clifford.hpp"
#include "qact/error.hpp"

using qact::GLqRep;
using qact::Mat;
using qact::Scalar;
using qact::Subspace;
using qact::unit4;

namespace {

const qact::DeformationParameter& q2() {
  static const auto q = qact::validate_q(2);
  return q;
}

qact::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const qact::Error& e) {
    return e.code();
  }
  FAIL("expected qact::Error");
  return qact::ErrorCode::InvalidInput;
}

void require_pass(const qact::VerificationReport& r) {
  for (const auto& c : r.report.checks) {
    CAPTURE(r.entry);
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("instantiation") {
  const GLqRep s1 = qact::instantiate("S1", q2(), {{"alpha", 3}});
  CHECK(s1.a11 == Mat::diag({4, 2, 1, 1}));
  CHECK(s1.a12 == unit4(1, 2) + unit4(2, 3));
  CHECK(s1.a21 == Scalar(3) * (unit4(1, 2) + unit4(2, 3)));
  CHECK(s1.a22 == Mat::diag({Scalar::frac(1, 4), Scalar::frac(1, 2), 1, 1}) + Scalar::frac(3, 2) * unit4(1, 3));
  const GLqRep g5 = qact::instantiate("G5", q2(), {{"alpha", 5}, {"beta", 3}, {"gamma", 7}});
  CHECK(qact::det_q(g5) == Mat::identity(4) + Scalar(35) * unit4(1, 1));
  CHECK(code_of([] { (void)qact::instantiate("S5", q2(), {{"alpha", 2}}); }) == qact::ErrorCode::ConstraintViolated);
  CHECK(code_of([] { (void)qact::instantiate("S5", q2(), {{"alpha", 8}}); }) == qact::ErrorCode::ConstraintViolated);
  CHECK(code_of([] { (void)qact::instantiate("G1a", q2(), {{"beta", -1}}); }) == qact::ErrorCode::ConstraintViolated);
  CHECK(code_of([] { (void)qact::instantiate("G3a", q2(), {{"beta", Scalar::frac(-1, 4)}}); }) ==
        qact::ErrorCode::ConstraintViolated);
  CHECK(code_of([] { (void)qact::instantiate("G2b'", q2(), {{"beta", Scalar::frac(-1, 2)}}); }) ==
        qact::ErrorCode::ConstraintViolated);
  CHECK(code_of([] { (void)qact::instantiate("G5", q2(), {{"alpha", 5}, {"gamma", Scalar::frac(-1, 5)}}); }) ==
        qact::ErrorCode::ConstraintViolated);
  CHECK(code_of([] { (void)qact::instantiate("S2a", q2(), {{"alpha", 2}, {"beta", Scalar::frac(1, 2)}}); }) ==
        qact::ErrorCode::ConstraintViolated);
  CHECK(code_of([] { (void)qact::instantiate("S2a'", q2(), {{"alpha", 2}, {"beta", 3}}); }) ==
        qact::ErrorCode::ConstraintViolated);
  CHECK(code_of([] { (void)qact::instantiate("S1", q2(), {{"alpha", 0}}); }) == qact::ErrorCode::ConstraintViolated);
  CHECK(code_of([] { (void)qact::instantiate("S9", q2(), {}); }) == qact::ErrorCode::UnknownEntry);
  CHECK(code_of([] { (void)qact::instantiate("S1", q2(), {{"delta", 1}}); }) == qact::ErrorCode::InvalidInput);
}

TEST_CASE("entry names and parameter policy") {
  CHECK(qact::table().size() == 20);
  CHECK(qact::find_entry("G2").id == "G2b'");
  CHECK(qact::find_entry("S2a′").id == "S2a'");
  CHECK(qact::canonical_param_name("ξ") == "xi");
  CHECK(qact::resolve_params(qact::find_entry("S5"), 2) == qact::ParamAssignment{{"alpha", 3}, {"beta", 5}});
  CHECK(qact::resolve_params(qact::find_entry("S5"), 3) == qact::ParamAssignment{{"alpha", 5}, {"beta", 5}});
  CHECK(qact::resolve_params(qact::find_entry("S2a'"), 2) ==
        qact::ParamAssignment{{"alpha", 2}, {"beta", Scalar::frac(1, 2)}});
  CHECK(qact::resolve_params(qact::find_entry("S2a'"), 2, {{"alpha", 4}}) ==
        qact::ParamAssignment{{"alpha", 4}, {"beta", Scalar::frac(1, 4)}});
  CHECK(qact::resolve_params(qact::find_entry("S1"), 2, {{"xi", 9}}) == qact::ParamAssignment{{"alpha", 3}});
}

TEST_CASE("shape patterns") {
  const Subspace upper = qact::pattern_subspace("* * * */0 * * */0 0 * */0 0 0 *", {});
  CHECK(upper.dim() == 10);
  const Subspace tied = qact::pattern_subspace("* alpha:g g */0 e 0 */0 0 e */0 0 0 *", {{"alpha", 2}});
  CHECK(tied.dim() == 7);
  CHECK(tied.contains(Scalar(2) * unit4(1, 2) + unit4(1, 3)));
  CHECK_FALSE(tied.contains(unit4(1, 3)));
  CHECK_FALSE(tied.contains(unit4(2, 2)));
  CHECK(tied.contains(unit4(2, 2) + unit4(3, 3)));
  CHECK(code_of([] { (void)qact::pattern_subspace("* * */0 0 0 0/0 0 0 0/0 0 0 0", {}); }) == qact::ErrorCode::ParseError);
  CHECK(code_of([] { (void)qact::pattern_subspace("* * * *", {}); }) == qact::ErrorCode::ParseError);
  CHECK(code_of([] { (void)qact::pattern_subspace("* * * X/0 0 0 0/0 0 0 0/0 0 0 0", {}); }) ==
        qact::ErrorCode::ParseError);
}

TEST_CASE("entry verification") {
  const auto s4a = qact::verify_entry(qact::find_entry("S4a"), q2(), {{"alpha", 3}});
  require_pass(s4a);
  CHECK(qact::operator_algebra(qact::instantiate("S4a", q2())).dim() == 10);

  const auto s2b = qact::verify_entry(qact::find_entry("S2b'"), q2(), {{"alpha", 3}});
  require_pass(s2b);
  CHECK(qact::eval_gamma_expr("(1-g0)*(1+i*g12)") == Scalar(4) * unit4(3, 3));
  CHECK(qact::invariants(qact::instantiate("S2b'", q2())).dim() == 2);

  const auto g7 = qact::verify_entry(qact::find_entry("G7"), q2(), {{"alpha", 3}, {"xi", 5}});
  require_pass(g7);
  CHECK(qact::det_q(qact::instantiate("G7", q2(), {{"xi", 5}})) == Mat::identity(4) + Scalar(5) * unit4(3, 4));
}

TEST_CASE("a failing check is reported, not thrown") {
  qact::TableEntry wrong = qact::find_entry("S1");
  wrong.dim_r = 7;
  wrong.invariant_pattern = "b 0 0 0/0 b 0 0/0 0 b 0/0 0 0 b";
  const auto r = qact::verify_entry(wrong, q2());
  CHECK_FALSE(r.ok());
  int failed = 0;
  for (const auto& c : r.report.checks)
    if (!c.pass) ++failed;
  CHECK(failed == 2);  // dim_R and invariant_subspace
}

TEST_CASE("all entries at three sample points") {
  for (const Scalar& qv : {Scalar(2), Scalar(3), Scalar(1, 1)}) {
    const auto q = qact::validate_q(qv);
    for (const auto& e : qact::table()) require_pass(qact::verify_entry(e, q));
  }
}

TEST_CASE("table-wide statements") {
  CHECK(qact::verify_corollary8(q2()).ok());
  CHECK(qact::verify_corollary9(q2()).ok());
  CHECK(qact::verify_rq_correspondence(q2()).ok());
  const std::vector<Mat> g1a{Mat::identity(4), unit4(4, 4)};
  CHECK(qact::invariants(qact::instantiate("G1a", q2())) == Subspace::span(g1a));
  const std::vector<Mat> g6{Mat::identity(4), Mat::identity(4) + Scalar(20) * unit4(1, 2)};
  CHECK(qact::invariants(qact::instantiate("G6", q2())) == Subspace::span(g6));
  CHECK_FALSE(qact::decide_equivalence(qact::instantiate("S1", q2()), qact::instantiate("S2b'", q2())).equivalent);
  CHECK_FALSE(qact::decide_equivalence(qact::instantiate("S6", q2()), qact::instantiate("S7", q2())).equivalent);
  for (const auto& e : qact::table()) {
    const GLqRep r = qact::instantiate(e, q2());
    CHECK(qact::is_slq(r) == e.is_slq());
  }
}
