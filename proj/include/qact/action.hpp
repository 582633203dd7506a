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
#include <optional>

#include "qact/qrep.hpp"

namespace qact {

/// Inner action v -> M diag(v, v) M^-1 of a GL_q representation.
struct InnerAction {
  GLqRep rep;
  Mat m;
  Mat minv;
  /// astar[k][j] is the (k+1, j+1) 4x4 block of M^-1.
  std::array<std::array<Mat, 2>, 2> astar;
  /// l[i][j] is the 16x16 operator of a_{i+1,j+1} on flattened matrices.
  std::array<std::array<Mat, 2>, 2> l;

  /// 1-based operator access.
  const Mat& op(int i, int j) const { return l[i - 1][j - 1]; }
  /// a_ij . v = sum_k A_ik v A*_kj
  Mat apply(int i, int j, const Mat& v) const;
};

/// Throws MSingular, or RelationViolated when `check_relations` is set and
/// the operators fail the GL_q relations.
InnerAction build_action(const GLqRep& r, bool check_relations = true);

/// The six GL_q relations for the four 16x16 operators.
Report action_relations(const InnerAction& a);

/// a_ij.(vw) = sum_k (a_ik.v)(a_kj.w) for all 256 pairs of matrix units and
/// all four generators.
Report verify_module_algebra(const InnerAction& a);

/// Algebra generated by E and the four generators.
Subspace operator_algebra(const GLqRep& r);

/// {v : L11 v = v, L12 v = 0, L21 v = 0, L22 v = v}.
Subspace fixed_points(const InnerAction& a);

/// Centralizer of the generators, checked against fixed_points.
/// Throws Lemma1Mismatch if they differ.
Subspace invariants(const GLqRep& r);
Subspace invariants(const InnerAction& a);

/// L11, L22 fix and L12, L21 annihilate every basis element of `inv`.
Report epsilon_consistency(const InnerAction& a, const Subspace& inv);

struct EquivalenceWitness {
  Mat u;
  Scalar alpha1;
  Scalar alpha2;
};

struct EquivalenceVerdict {
  bool equivalent = false;
  std::optional<EquivalenceWitness> witness;
  /// Candidate (alpha1, alpha2) pairs settled before the verdict.
  int candidates_tried = 0;
};

/// A'11 = u A11 u^-1 a1, A'21 = u A21 u^-1 a1, A'12 = u A12 u^-1 a2,
/// A'22 = u A22 u^-1 a2.
bool check_witness(const GLqRep& r1, const GLqRep& r2, const EquivalenceWitness& w);

/// Decides whether r2 is obtained from r1 by conjugation and scaling.
/// A negative verdict is exhaustive over all candidate scalars read off the
/// spectra of A11 and A22. Throws Unsupported when an A11 or A22 is not
/// triangular up to permutation.
EquivalenceVerdict decide_equivalence(const GLqRep& r1, const GLqRep& r2);

}  // namespace qact
