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
#include "qact/action.hpp"
#include "qact/catalog.hpp"
#include "qact/error.hpp"
#include "support.hpp"

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

GLqRep entry(const char* id, const qact::ParamAssignment& p = {}) { return qact::instantiate(id, q2(), p); }

// a_ij . v read off as the (i, j) block of M diag(v, v) M^-1.
Mat action_by_blocks(const GLqRep& r, int i, int j, const Mat& v) {
  const Mat m = Mat::block2(r.a11, r.a12, r.a21, r.a22);
  const Mat w = m * Mat::block2(v, Mat(4), Mat(4), v) * qact::inverse(m);
  return w.block(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), 4);
}

qact::Vec apply_op(const Mat& op, const Mat& v) { return op * v.flatten(); }

}  // namespace

TEST_CASE("action operators agree with the block formula") {
  for (const char* id : {"S1", "G1b", "S2a", "S5", "G7"}) {
    CAPTURE(id);
    const GLqRep r = entry(id);
    const auto a = qact::build_action(r);
    CHECK((a.m * a.minv).is_identity());
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int p = 1; p <= 4; ++p)
          for (int s = 1; s <= 4; ++s) {
            const Mat expect = action_by_blocks(r, i, j, unit4(p, s));
            CHECK(apply_op(a.op(i, j), unit4(p, s)) == expect.flatten());
            CHECK(a.apply(i, j, unit4(p, s)) == expect);
          }
  }
}

TEST_CASE("counit on the identity") {
  const auto a = qact::build_action(entry("S1"));
  const Mat id = Mat::identity(4);
  CHECK(apply_op(a.op(1, 1), id) == id.flatten());
  CHECK(apply_op(a.op(2, 2), id) == id.flatten());
  CHECK(apply_op(a.op(1, 2), id) == Mat(4).flatten());
  CHECK(apply_op(a.op(2, 1), id) == Mat(4).flatten());
}

TEST_CASE("operator relations") {
  const auto a = qact::build_action(entry("S4a"));
  const Scalar q(2);
  CHECK(qact::commutator(a.op(1, 1), a.op(2, 2)) == (q - q.inverse()) * (a.op(1, 2) * a.op(2, 1)));
  CHECK(qact::action_relations(a).ok());
}

TEST_CASE("module-algebra identity") {
  CHECK(qact::verify_module_algebra(qact::build_action(entry("S1"))).ok());
  CHECK(qact::verify_module_algebra(qact::build_action(entry("G6"))).ok());
  GLqRep bad = entry("S1");
  bad.a22 += unit4(2, 1);
  CHECK_THROWS_AS((void)qact::build_action(bad), qact::Error);
  // M diag(v, v) M^-1 is multiplicative for every invertible M, so the
  // broken representation still passes; its operators fail the relations.
  const auto unchecked = qact::build_action(bad, false);
  CHECK(qact::verify_module_algebra(unchecked).ok());
  CHECK_FALSE(qact::action_relations(unchecked).ok());
  auto tampered = qact::build_action(entry("S1"));
  tampered.l[0][1] += Mat::identity(16);
  CHECK_FALSE(qact::verify_module_algebra(tampered).ok());
}

TEST_CASE("operator algebra dimensions") {
  CHECK(qact::operator_algebra(entry("S1")).dim() == 6);
  CHECK(qact::operator_algebra(entry("S2a")).dim() == 8);
  CHECK(qact::operator_algebra(entry("S2a'")).dim() == 7);
  CHECK(qact::operator_algebra(entry("S2a", {{"alpha", 3}, {"beta", 5}})).dim() == 8);
  CHECK(qact::operator_algebra(entry("S2a'", {{"alpha", 2}, {"beta", Scalar::frac(1, 2)}})).dim() == 7);
  // upper triangular matrices
  std::vector<Mat> upper;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) upper.push_back(unit4(i, j));
  CHECK(qact::operator_algebra(entry("S4a")) == Subspace::span(upper));
}

TEST_CASE("invariants") {
  const std::vector<Mat> s1{Mat::identity(4), unit4(4, 4), unit4(4, 3)};
  CHECK(qact::invariants(entry("S1")) == Subspace::span(s1));
  const std::vector<Mat> s2b{Mat::identity(4), unit4(3, 3)};
  CHECK(qact::invariants(entry("S2b'")) == Subspace::span(s2b));
  const std::vector<Mat> scalars{Mat::identity(4)};
  CHECK(qact::invariants(entry("S4a")) == Subspace::span(scalars));
  for (const auto& e : qact::table()) {
    CAPTURE(e.id);
    const GLqRep r = qact::instantiate(e, q2(), {});
    const auto a = qact::build_action(r);
    const Subspace inv = qact::invariants(a);
    CHECK(inv == qact::fixed_points(a));
    CHECK(qact::epsilon_consistency(a, inv).ok());
    CHECK(inv.contains(Mat::identity(4)));
    CHECK(inv.contains(qact::det_q(r)));
  }
}

TEST_CASE("equivalence decisions") {
  const GLqRep s1 = entry("S1");
  const auto self = qact::decide_equivalence(s1, s1);
  REQUIRE(self.equivalent);
  CHECK(self.witness->u.is_identity());
  CHECK(self.witness->alpha1 == Scalar(1));
  CHECK(self.witness->alpha2 == Scalar(1));
  CHECK_FALSE(qact::decide_equivalence(s1, entry("S3")).equivalent);

  std::mt19937_64 rng(2024);
  for (const char* id : {"S1", "G1b", "S2a", "S6", "G7"}) {
    CAPTURE(id);
    const GLqRep r = entry(id);
    const Mat u = qact::testing::random_conjugator(rng, r);
    const GLqRep moved = qact::testing::conjugate_scaled(r, u, Scalar(2), Scalar(3));
    const auto v = qact::decide_equivalence(r, moved);
    REQUIRE(v.equivalent);
    CHECK(qact::check_witness(r, moved, *v.witness));
    // symmetry
    const auto back = qact::decide_equivalence(moved, r);
    REQUIRE(back.equivalent);
    CHECK(qact::check_witness(moved, r, *back.witness));
    // transitivity through a second conjugate
    const Mat u2 = qact::testing::random_conjugator(rng, r);
    const GLqRep moved2 = qact::testing::conjugate_scaled(moved, u2, Scalar(1, 1), Scalar(5));
    const auto chain = qact::decide_equivalence(r, moved2);
    REQUIRE(chain.equivalent);
    const qact::EquivalenceWitness composed{u2 * u, Scalar(2) * Scalar(1, 1), Scalar(15)};
    CHECK(qact::check_witness(r, moved2, composed));
  }
}

TEST_CASE("equivalence rejects non-triangular input") {
  GLqRep r = entry("S1");
  GLqRep cyc = r;
  cyc.a11 = Mat::identity(4) + unit4(1, 2) + unit4(2, 1);
  try {
    (void)qact::decide_equivalence(r, cyc);
    FAIL("accepted");
  } catch (const qact::Error& e) {
    CHECK(e.code() == qact::ErrorCode::Unsupported);
  }
}
