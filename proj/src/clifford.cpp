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


#include "qact/clifford.hpp"

#include <cctype>
#include <string>

#include "qact/error.hpp"

namespace qact {

namespace {

constexpr std::array<std::array<std::string_view, 4>, 4> kUnitFormulas{{
    {"1/4*(1+g0)*(1+i*g12)", "1/4*(1+g0)*(g1+i*g2)*g3", "-1/4*(1+g0)*(1+i*g12)*g3", "-1/4*(1+g0)*(g1+i*g2)"},
    {"1/4*(1+g0)*(i*g2-g1)*g3", "1/4*(1+g0)*(1-i*g12)", "-1/4*(1+g0)*(g1-i*g2)", "1/4*(1+g0)*(1-i*g12)*g3"},
    {"1/4*(1-g0)*(1+i*g12)*g3", "1/4*(1-g0)*(g1+i*g2)", "1/4*(1-g0)*(1+i*g12)", "1/4*(1-g0)*(g1+i*g2)*g3"},
    {"1/4*(1-g0)*(g1-i*g2)", "1/4*(1-g0)*(i*g12-1)*g3", "1/4*(1-g0)*(-g1+i*g2)*g3", "1/4*(1-g0)*(1-i*g12)"},
}};

Mat pauli_block(const Mat& sigma) {
  // [[0, -sigma], [sigma, 0]]
  Mat zero(2);
  return Mat::block2(zero, -sigma, sigma, zero);
}

class GammaParser {
 public:
  explicit GammaParser(std::string_view text) : text_(text) {}

  GammaExpr parse() {
    GammaExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) error("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw Error(ErrorCode::MalformedExpression, what + " at position " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  GammaExpr expr() {
    GammaExpr e = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      GammaExpr t = term();
      if (c == '-') t = GammaExpr::product(GammaExpr::constant(Scalar(-1)), std::move(t));
      e = GammaExpr::sum(std::move(e), std::move(t));
    }
    return e;
  }

  GammaExpr term() {
    bool negate = false;
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      if (c == '-') negate = !negate;
      ++pos_;
    }
    GammaExpr e = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
      } else if (!(c == '(' || c == 'i' || c == 'g' || std::isdigit(static_cast<unsigned char>(c)))) {
        break;
      }
      e = GammaExpr::product(std::move(e), factor());
    }
    if (negate) e = GammaExpr::product(GammaExpr::constant(Scalar(-1)), std::move(e));
    return e;
  }

  GammaExpr factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      GammaExpr e = expr();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return e;
    }
    if (c == 'i') {
      ++pos_;
      return GammaExpr::constant(Scalar::i());
    }
    if (c == 'g') {
      ++pos_;
      if (text_.substr(pos_, 2) == "12") {
        pos_ += 2;
        return GammaExpr::gamma12();
      }
      if (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '3') {
        return GammaExpr::gamma(text_[pos_++] - '0');
      }
      error("unknown gamma symbol");
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return GammaExpr::constant(Scalar(rational()));
    if (c == '\0') error("unexpected end of expression");
    error("unexpected character");
  }

  Rational rational() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Rational value(std::string(text_.substr(start, pos_ - start)));
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) error("expected denominator");
      Rational den(std::string(text_.substr(dstart, pos_ - dstart)));
      if (sgn(den) == 0) error("zero denominator");
      value /= den;
    }
    value.canonicalize();
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

const Mat& CliffordModel::unit(int i, int j) const {
  if (i < 1 || i > 4 || j < 1 || j > 4) fail(ErrorCode::DimensionMismatch, "matrix unit index out of range");
  return units[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

std::string_view unit_formula(int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4) fail(ErrorCode::DimensionMismatch, "matrix unit index out of range");
  return kUnitFormulas[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

CliffordModel build_model() {
  CliffordModel model;
  const Scalar i = Scalar::i();
  Mat s1(2), s2(2), s3(2);
  s1(0, 1) = 1;
  s1(1, 0) = 1;
  s2(0, 1) = -i;
  s2(1, 0) = i;
  s3(0, 0) = 1;
  s3(1, 1) = -1;
  model.gamma[0] = Mat::diag({1, 1, -1, -1});
  model.gamma[1] = pauli_block(s1);
  model.gamma[2] = pauli_block(s2);
  model.gamma[3] = pauli_block(s3);
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c)
      model.units[r - 1][c - 1] = parse_gamma_expr(unit_formula(r, c)).eval(model);
  const Report report = clifford_selftest(model);
  if (const auto* bad = report.first_failure()) {
    fail(ErrorCode::VerificationFailure, "Clifford model check failed: " + bad->name + " " + bad->detail);
  }
  return model;
}

const CliffordModel& clifford_model() {
  static const CliffordModel model = build_model();
  return model;
}

Report clifford_selftest(const CliffordModel& model) {
  Report report;
  const Mat id = Mat::identity(4);
  int anti_ok = 0, anti_total = 0;
  std::string anti_detail;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      ++anti_total;
      const Mat lhs = model.gamma[mu] * model.gamma[nu] + model.gamma[nu] * model.gamma[mu];
      const Mat rhs = mu == nu ? Scalar(2 * model.metric[mu]) * id : Mat(4);
      if (lhs == rhs) {
        ++anti_ok;
      } else if (anti_detail.empty()) {
        anti_detail = "g" + std::to_string(mu) + " g" + std::to_string(nu);
      }
    }
  report.add("anticommutators", anti_ok == anti_total,
             std::to_string(anti_ok) + "/" + std::to_string(anti_total) + (anti_detail.empty() ? "" : " first failure " + anti_detail));

  int prod_ok = 0;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c)
        for (int d = 1; d <= 4; ++d) {
          const Mat expect = b == c ? model.unit(a, d) : Mat(4);
          if (model.unit(a, b) * model.unit(c, d) == expect) ++prod_ok;
        }
  report.add("unit_products", prod_ok == 256, std::to_string(prod_ok) + "/256");

  Mat diag_sum(4);
  for (int a = 1; a <= 4; ++a) diag_sum += model.unit(a, a);
  report.add("unit_diagonal_sum", diag_sum.is_identity(), "sum of e_ii");

  int std_ok = 0;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      if (model.unit(a, b) == unit4(a, b)) ++std_ok;
  report.add("standard_units", std_ok == 16, std::to_string(std_ok) + "/16");
  return report;
}

GammaExpr GammaExpr::constant(Scalar value) {
  GammaExpr e;
  e.kind_ = Kind::Constant;
  e.value_ = std::move(value);
  return e;
}

GammaExpr GammaExpr::gamma(int index) {
  if (index < 0 || index > 3) fail(ErrorCode::MalformedExpression, "gamma index out of range");
  GammaExpr e;
  e.kind_ = Kind::Gamma;
  e.index_ = index;
  return e;
}

GammaExpr GammaExpr::gamma12() {
  GammaExpr e;
  e.kind_ = Kind::Gamma12;
  return e;
}

GammaExpr GammaExpr::sum(GammaExpr a, GammaExpr b) {
  GammaExpr e;
  e.kind_ = Kind::Sum;
  e.lhs_ = std::make_shared<const GammaExpr>(std::move(a));
  e.rhs_ = std::make_shared<const GammaExpr>(std::move(b));
  return e;
}

GammaExpr GammaExpr::product(GammaExpr a, GammaExpr b) {
  GammaExpr e = sum(std::move(a), std::move(b));
  e.kind_ = Kind::Product;
  return e;
}

Mat GammaExpr::eval(const CliffordModel& model) const {
  switch (kind_) {
    case Kind::Constant:
      return value_ * Mat::identity(4);
    case Kind::Gamma:
      return model.gamma[static_cast<std::size_t>(index_)];
    case Kind::Gamma12:
      return model.gamma12();
    case Kind::Sum:
      return lhs_->eval(model) + rhs_->eval(model);
    case Kind::Product:
      return lhs_->eval(model) * rhs_->eval(model);
  }
  fail(ErrorCode::MalformedExpression, "corrupt expression node");
}

GammaExpr parse_gamma_expr(std::string_view text) { return GammaParser(text).parse(); }

Mat eval_gamma_expr(std::string_view text, const CliffordModel& model) { return parse_gamma_expr(text).eval(model); }

UnitCoefficients express_in_units(const Mat& m, const CliffordModel& model) {
  if (m.n() != 4) fail(ErrorCode::DimensionMismatch, "expected a 4x4 matrix");
  // For a full system of matrix units, c_ij = tr(e_ji m).
  UnitCoefficients out;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      const Mat p = model.unit(b, a) * m;
      Scalar tr(0);
      for (std::size_t k = 0; k < 4; ++k) tr += p(k, k);
      out[a - 1][b - 1] = tr;
    }
  return out;
}

}  // namespace qact
