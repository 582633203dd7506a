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


#include "qact/qspinor.hpp"

#include <algorithm>
#include <string>

#include "qact/error.hpp"

namespace qact {

bool is_q_spinor(const Mat& a, const Mat& b, const Scalar& q) { return q_commutator(a, b, q).is_zero(); }

Subspace spinor_space(const Mat& a, const DeformationParameter& q) {
  const Mat id = Mat::identity(a.n());
  return kernel(sandwich_operator(a, id) - q.value() * sandwich_operator(id, a));
}

bool space_square_nonzero(const Subspace& s) {
  const auto basis = s.basis_matrices();
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (!(x * y).is_zero()) return true;
  return false;
}

std::vector<Scalar> form5_excluded(const Scalar& q) { return {0, q.inverse(), 1, q, q * q, q * q * q}; }

Scalar default_form5_alpha(const Scalar& q) {
  const auto excluded = form5_excluded(q);
  for (long candidate : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
    if (std::find(excluded.begin(), excluded.end(), Scalar(candidate)) == excluded.end()) return candidate;
  }
  fail(ErrorCode::InvalidFormParameter, "no default value available");
}

CanonicalForm canonical_form(int id, const DeformationParameter& dq, std::optional<Scalar> alpha) {
  const Scalar& q = dq.value();
  const Scalar q2 = q * q, q3 = q2 * q;
  CanonicalForm f;
  f.id = id;
  switch (id) {
    case 1:
      f.a = Mat::diag({q2, q, 1, 1});
      f.expected_basis = {unit4(1, 2), unit4(2, 3), unit4(2, 4)};
      break;
    case 2:
      f.a = Mat::diag({q2, q, q, 1});
      f.expected_basis = {unit4(1, 2), unit4(1, 3), unit4(2, 4), unit4(3, 4)};
      break;
    case 3:
      f.a = Mat::diag({q2, q2, q, 1});
      f.expected_basis = {unit4(1, 3), unit4(2, 3), unit4(3, 4)};
      break;
    case 4:
      f.a = Mat::diag({q3, q2, q, 1});
      f.expected_basis = {unit4(1, 2), unit4(2, 3), unit4(3, 4)};
      break;
    case 5: {
      const Scalar a = alpha ? *alpha : default_form5_alpha(q);
      const auto excluded = form5_excluded(q);
      if (std::find(excluded.begin(), excluded.end(), a) != excluded.end()) {
        fail(ErrorCode::InvalidFormParameter, "alpha = " + a.str() + " is excluded for form 5");
      }
      f.a = Mat::diag({a, q2, q, 1});
      f.expected_basis = {unit4(2, 3), unit4(3, 4)};
      break;
    }
    case 6:
      f.a = Mat::diag({q2, q2, q, 1}) + unit4(1, 2);
      f.expected_basis = {unit4(1, 3), unit4(3, 4)};
      break;
    case 7:
      f.a = Mat::diag({q2, q, 1, 1}) + unit4(3, 4);
      f.expected_basis = {unit4(2, 4), unit4(1, 2)};
      break;
    default:
      fail(ErrorCode::InvalidFormParameter, "canonical form id must be 1..7, got " + std::to_string(id));
  }
  return f;
}

std::vector<CanonicalForm> canonical_forms(const DeformationParameter& q, std::optional<Scalar> alpha) {
  std::vector<CanonicalForm> out;
  for (int id = 1; id <= 7; ++id) out.push_back(canonical_form(id, q, alpha));
  return out;
}

Report verify_canonical_form(const CanonicalForm& form, const DeformationParameter& q) {
  Report report;
  const std::string tag = "form" + std::to_string(form.id) + ".";
  const Subspace b = spinor_space(form.a, q);
  const Subspace expected = Subspace::span(form.expected_basis);
  report.add(tag + "B(A)", b == expected,
             "dim " + std::to_string(b.dim()) + ", expected " + std::to_string(expected.dim()));
  report.add(tag + "square_nonzero", space_square_nonzero(b));

  const std::vector<Mat> gen{form.a};
  const auto comm = centralizer(gen).basis_matrices();
  bool closed = true;
  for (const auto& x : b.basis_matrices()) {
    for (const auto& c1 : comm) {
      for (const auto& c2 : comm)
        if (!b.contains(c1 * x * c2)) closed = false;
      if (!closed) break;
    }
    if (!closed) break;
  }
  report.add(tag + "centralizer_closure", closed);
  return report;
}

}  // namespace qact
