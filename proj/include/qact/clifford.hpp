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
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qact/linalg.hpp"
#include "qact/report.hpp"

namespace qact {

/// Dirac-type model of C(1,3) inside the 4x4 complex matrices.
struct CliffordModel {
  std::array<Mat, 4> gamma;
  std::array<int, 4> metric{1, -1, -1, -1};
  /// units[i][j] is e_{i+1,j+1} evaluated from its gamma-matrix formula.
  std::array<std::array<Mat, 4>, 4> units;

  Mat gamma12() const { return gamma[1] * gamma[2]; }
  /// 1-based access to e_ij.
  const Mat& unit(int i, int j) const;
};

/// Gamma-matrix formula of e_ij (1-based), e.g. "1/4*(1+g0)*(1+i*g12)".
std::string_view unit_formula(int i, int j);

/// Builds the model and throws VerificationFailure if any Clifford relation
/// or matrix-unit identity fails.
CliffordModel build_model();

/// Shared immutable instance.
const CliffordModel& clifford_model();

/// Anticommutators, the 256 unit products, sum of diagonal units and the
/// agreement of every e_ij with the standard matrix unit.
Report clifford_selftest(const CliffordModel& model);

/// Expression over 1, i, g0..g3, g12 and rational constants.
class GammaExpr {
 public:
  enum class Kind { Constant, Gamma, Gamma12, Sum, Product };

  static GammaExpr constant(Scalar value);
  static GammaExpr gamma(int index);
  static GammaExpr gamma12();
  static GammaExpr sum(GammaExpr a, GammaExpr b);
  static GammaExpr product(GammaExpr a, GammaExpr b);

  Kind kind() const { return kind_; }
  Mat eval(const CliffordModel& model) const;

 private:
  Kind kind_ = Kind::Constant;
  Scalar value_;
  int index_ = 0;
  std::shared_ptr<const GammaExpr> lhs_, rhs_;
};

/// Grammar: expr = term (('+'|'-') term)*; term = ('+'|'-')? factor
/// ('*'? factor)*; factor = rational | 'i' | 'g0'..'g3' | 'g12' | '(' expr ')'.
/// Throws MalformedExpression with the character position.
GammaExpr parse_gamma_expr(std::string_view text);

Mat eval_gamma_expr(std::string_view text, const CliffordModel& model = clifford_model());

/// Coefficients c[i][j] (0-based) with m = sum c_ij e_ij.
using UnitCoefficients = std::array<std::array<Scalar, 4>, 4>;
UnitCoefficients express_in_units(const Mat& m, const CliffordModel& model = clifford_model());

}  // namespace qact
