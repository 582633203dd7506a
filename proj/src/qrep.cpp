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


#include "qact/qrep.hpp"

#include <string>

#include "qact/error.hpp"

namespace qact {

namespace {

Mat inverse_or(const Mat& m, ErrorCode code, const char* what) {
  try {
    return inverse(m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    fail(code, std::string(what) + " is singular");
  }
}

}  // namespace

const Mat& GLqRep::a(int i, int j) const {
  if (i == 1 && j == 1) return a11;
  if (i == 1 && j == 2) return a12;
  if (i == 2 && j == 1) return a21;
  if (i == 2 && j == 2) return a22;
  fail(ErrorCode::DimensionMismatch, "generator index out of range");
}

Report glq_relations(const Mat& a11, const Mat& a12, const Mat& a21, const Mat& a22, const Scalar& q) {
  Report report;
  report.add("a11a12=q*a12a11", q_commutator(a11, a12, q).is_zero());
  report.add("a11a21=q*a21a11", q_commutator(a11, a21, q).is_zero());
  report.add("a12a22=q*a22a12", q_commutator(a12, a22, q).is_zero());
  report.add("a21a22=q*a22a21", q_commutator(a21, a22, q).is_zero());
  report.add("a12a21=a21a12", commutator(a12, a21).is_zero());
  report.add("[a11,a22]=(q-q^-1)a12a21", commutator(a11, a22) == (q - q.inverse()) * (a12 * a21));
  return report;
}

Report verify_glq_relations(const GLqRep& r) { return glq_relations(r.a11, r.a12, r.a21, r.a22, r.q); }

void require_ok(const Report& report, ErrorCode code) {
  if (const auto* bad = report.first_failure()) {
    fail(code, bad->name + (bad->detail.empty() ? "" : ": " + bad->detail));
  }
}

Mat det_q(const GLqRep& r) { return r.a11 * r.a22 - r.q.value() * (r.a12 * r.a21); }

Mat quantum_determinant(const GLqRep& r) {
  Mat d = det_q(r);
  if (determinant(d).is_zero()) fail(ErrorCode::DeterminantSingular, "quantum determinant is singular");
  for (const auto& g : r.generators())
    if (!commutator(d, g).is_zero()) fail(ErrorCode::DeterminantNotCentral, "quantum determinant is not central");
  return d;
}

Report antipode_check(const GLqRep& r) {
  Report report;
  const Mat dinv = inverse_or(det_q(r), ErrorCode::DeterminantSingular, "quantum determinant");
  const Scalar& q = r.q.value();
  const std::array<std::array<Mat, 2>, 2> s{{
      {dinv * r.a22, -q.inverse() * (dinv * r.a12)},
      {-q * (dinv * r.a21), dinv * r.a11},
  }};
  const Mat id = Mat::identity(r.a11.n());
  for (int side = 0; side < 2; ++side)
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        Mat sum(id.n());
        for (int k = 1; k <= 2; ++k)
          sum += side == 0 ? r.a(i, k) * s[k - 1][j - 1] : s[i - 1][k - 1] * r.a(k, j);
        const bool ok = i == j ? sum == id : sum.is_zero();
        report.add(std::string(side == 0 ? "A*S" : "S*A") + "[" + std::to_string(i) + std::to_string(j) + "]", ok);
      }
  return report;
}

Report verify_rq_relations(const RqRep& r) {
  const Scalar& q = r.q.value();
  Report report;
  report.add("a11a12=q*a12a11", q_commutator(r.a11, r.a12, q).is_zero());
  report.add("a11a21=q*a21a11", q_commutator(r.a11, r.a21, q).is_zero());
  report.add("a12a21=a21a12", commutator(r.a12, r.a21).is_zero());
  report.add("a12r22=q*r22a12", q_commutator(r.a12, r.r22, q).is_zero());
  report.add("a21r22=q*r22a21", q_commutator(r.a21, r.r22, q).is_zero());
  report.add("a11r22=r22a11", commutator(r.a11, r.r22).is_zero());
  return report;
}

RqRep to_rq(const GLqRep& r) {
  const Mat a11inv = inverse_or(r.a11, ErrorCode::A11Singular, "A11");
  RqRep out{r.a11, r.a12, r.a21, r.a22 - r.a12 * a11inv * r.a21, r.q};
  require_ok(verify_rq_relations(out), ErrorCode::RelationViolated);
  if (r.a11 * out.r22 != det_q(r)) fail(ErrorCode::RelationViolated, "det_q differs from A11 R22");
  return out;
}

GLqRep from_rq(const RqRep& r) {
  const Mat a11inv = inverse_or(r.a11, ErrorCode::A11Singular, "A11");
  if (determinant(r.r22).is_zero()) fail(ErrorCode::R22Singular, "R22 is singular");
  GLqRep out{r.a11, r.a12, r.a21, r.r22 + r.a12 * a11inv * r.a21, r.q};
  require_ok(verify_glq_relations(out), ErrorCode::RelationViolated);
  return out;
}

bool is_slq(const GLqRep& r) { return det_q(r).is_identity(); }

GLqRep connected_slq(const GLqRep& r) {
  const Mat a11inv = inverse_or(r.a11, ErrorCode::A11Singular, "A11");
  GLqRep out = r;
  out.a22 = a11inv * (Mat::identity(r.a11.n()) + r.q.value() * (r.a12 * r.a21));
  return out;
}

GLqRep attach_determinant(const GLqRep& slq, const Mat& d) {
  if (!is_slq(slq)) fail(ErrorCode::InvalidInput, "representation is not an SL_q representation");
  if (determinant(d).is_zero()) fail(ErrorCode::DSingular, "D is singular");
  const auto gens = slq.generators();
  if (!centralizer(gens).contains(d)) fail(ErrorCode::DNotInvariant, "D is not an invariant of the action");
  const Mat a11inv = inverse_or(slq.a11, ErrorCode::A11Singular, "A11");
  GLqRep out = slq;
  out.a22 = a11inv * (d + slq.q.value() * (slq.a12 * slq.a21));
  return out;
}

bool is_nilpotent(const Mat& m) {
  Mat p = m;
  for (std::size_t k = 1; k < m.n() && !p.is_zero(); ++k) p = p * m;
  return p.is_zero();
}

}  // namespace qact
