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

#include <array>

#include "qact/linalg.hpp"
#include "qact/report.hpp"

namespace qact {

/// Representation of GL_q(2,C) by four 4x4 matrices.
struct GLqRep {
  Mat a11, a12, a21, a22;
  DeformationParameter q;

  /// 1-based generator access, A_ij.
  const Mat& a(int i, int j) const;
  std::array<Mat, 4> generators() const { return {a11, a12, a21, a22}; }

  friend bool operator==(const GLqRep& x, const GLqRep& y) {
    return x.q.value() == y.q.value() && x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
  }
};

/// Representation of R_q: a11, a12, a21 and r22.
struct RqRep {
  Mat a11, a12, a21, r22;
  DeformationParameter q;
};

/// The six quantum-matrix relations for generators of any common size:
/// a11a12 = q a12a11, a11a21 = q a21a11, a12a22 = q a22a12, a21a22 = q a22a21,
/// a12a21 = a21a12, a11a22 - a22a11 = (q - q^-1) a12a21.
Report glq_relations(const Mat& a11, const Mat& a12, const Mat& a21, const Mat& a22, const Scalar& q);
Report verify_glq_relations(const GLqRep& r);

/// Throws `code` naming the first failed check of `report`.
void require_ok(const Report& report, ErrorCode code);

/// A11 A22 - q A12 A21 without further checks.
Mat det_q(const GLqRep& r);

/// det_q(r) after checking it is invertible and commutes with every
/// generator. Throws DeterminantSingular or DeterminantNotCentral.
Mat quantum_determinant(const GLqRep& r);

/// Both identities sum_k A_ik S_kj = delta_ij E and sum_k S_ik A_kj = delta_ij E
/// with S11 = D^-1 A22, S12 = -q^-1 D^-1 A12, S21 = -q D^-1 A21, S22 = D^-1 A11.
Report antipode_check(const GLqRep& r);

Report verify_rq_relations(const RqRep& r);

/// R22 = A22 - A12 A11^-1 A21. Verifies the R_q relations and
/// det_q = A11 R22. Throws A11Singular or RelationViolated.
RqRep to_rq(const GLqRep& r);

/// A22 = R22 + A12 A11^-1 A21, then re-verifies the GL_q relations.
/// Throws A11Singular, R22Singular or RelationViolated.
GLqRep from_rq(const RqRep& r);

bool is_slq(const GLqRep& r);

/// Replaces A22 by A11^-1 (E + q A12 A21). Throws A11Singular.
GLqRep connected_slq(const GLqRep& r);

/// Replaces A22 by A11^-1 (D + q A12 A21). D must be invertible and commute
/// with every generator. Throws InvalidInput (not SL_q), DSingular or
/// DNotInvariant.
GLqRep attach_determinant(const GLqRep& slq, const Mat& d);

bool is_nilpotent(const Mat& m);

}  // namespace qact
