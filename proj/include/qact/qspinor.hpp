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

#include <optional>
#include <vector>

#include "qact/linalg.hpp"
#include "qact/report.hpp"

namespace qact {

/// AB = qBA
bool is_q_spinor(const Mat& a, const Mat& b, const Scalar& q);

/// B(A) = {B : AB = qBA}.
Subspace spinor_space(const Mat& a, const DeformationParameter& q);

/// True when some product of two basis elements is nonzero.
bool space_square_nonzero(const Subspace& s);

struct CanonicalForm {
  int id = 0;
  Mat a;
  std::vector<Mat> expected_basis;
};

/// Values excluded for the free eigenvalue of form 5: 0, q^-1, 1, q, q^2, q^3.
std::vector<Scalar> form5_excluded(const Scalar& q);

/// First of 3, 5, 7, 11, 13, ... outside form5_excluded(q).
Scalar default_form5_alpha(const Scalar& q);

/// Form `id` (1..7). `alpha` is used by form 5 only and defaults to
/// default_form5_alpha(q). Throws InvalidFormParameter.
CanonicalForm canonical_form(int id, const DeformationParameter& q, std::optional<Scalar> alpha = std::nullopt);
std::vector<CanonicalForm> canonical_forms(const DeformationParameter& q, std::optional<Scalar> alpha = std::nullopt);

/// Checks B(A) against the printed basis, B(A)^2 != 0, and closure of B(A)
/// under two-sided multiplication by the centralizer of A.
Report verify_canonical_form(const CanonicalForm& form, const DeformationParameter& q);

}  // namespace qact
