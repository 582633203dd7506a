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


#include "qact/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qact/error.hpp"

namespace qact {

namespace {

Scalar parse_at(const std::string& text, const std::string& where) {
  try {
    return parse_scalar(text);
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.what(), e.position());
  }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::InvalidInput, where + ": missing \"" + key + "\"");
  return j.at(key);
}

}  // namespace

Json scalar_to_json(const Scalar& s) { return {{"re", s.re().get_str()}, {"im", s.im().get_str()}}; }

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return parse_at(j.get<std::string>(), where);
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_object()) {
    const Json& re = field(j, "re", where);
    const Json& im = j.contains("im") ? j.at("im") : Json("0");
    if (!re.is_string() && !re.is_number_integer()) fail(ErrorCode::InvalidInput, where + ".re must be a string");
    if (!im.is_string() && !im.is_number_integer()) fail(ErrorCode::InvalidInput, where + ".im must be a string");
    const Scalar r = re.is_string() ? parse_at(re.get<std::string>(), where + ".re") : Scalar(re.get<long>());
    const Scalar i = im.is_string() ? parse_at(im.get<std::string>(), where + ".im") : Scalar(im.get<long>());
    if (!r.is_real() || !i.is_real()) fail(ErrorCode::InvalidInput, where + ": re and im must be rational");
    return Scalar(r.re(), i.re());
  }
  fail(ErrorCode::InvalidInput, where + ": expected a scalar");
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.n(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.n(); ++c) row.push_back(format_scalar(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.n()}, {"rows", std::move(rows)}};
}

Mat mat_from_json(const Json& j, const std::string& where) {
  const Json& rows = field(j, "rows", where);
  if (!rows.is_array() || rows.empty()) fail(ErrorCode::InvalidInput, where + ".rows must be a nonempty array");
  const std::size_t n = rows.size();
  if (j.contains("n") && (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() != n)) {
    fail(ErrorCode::DimensionMismatch, where + ": n does not match the number of rows");
  }
  Mat m(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = rows.at(r);
    if (!row.is_array() || row.size() != n) {
      fail(ErrorCode::DimensionMismatch, where + ".rows[" + std::to_string(r) + "] must have " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = scalar_from_json(row.at(c), where + ".rows[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

Json rep_to_json(const GLqRep& r) {
  return {{"q", scalar_to_json(r.q)},
          {"A11", mat_to_json(r.a11)},
          {"A12", mat_to_json(r.a12)},
          {"A21", mat_to_json(r.a21)},
          {"A22", mat_to_json(r.a22)}};
}

GLqRep rep_from_json(const Json& j) {
  const DeformationParameter q = validate_q(scalar_from_json(field(j, "q", "representation"), "q"));
  auto get = [&](const char* key) {
    Mat m = mat_from_json(field(j, key, "representation"), key);
    if (m.n() != 4) fail(ErrorCode::DimensionMismatch, std::string(key) + " must be 4x4");
    return m;
  };
  return GLqRep{get("A11"), get("A12"), get("A21"), get("A22"), q};
}

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  if (s.ambient_dim() == 16) {
    for (const auto& m : s.basis_matrices()) basis.push_back(mat_to_json(m));
  } else {
    for (const auto& v : s.basis()) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(format_scalar(x));
      basis.push_back(std::move(row));
    }
  }
  return {{"dim", s.dim()}, {"basis", std::move(basis)}};
}

Json params_to_json(const ParamAssignment& p) {
  Json out = Json::object();
  for (const auto& [k, v] : p) out[k] = scalar_to_json(v);
  return out;
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return checks;
}

Json verification_to_json(const VerificationReport& r) {
  return {{"entry", r.entry},
          {"q", scalar_to_json(r.q)},
          {"params", params_to_json(r.params)},
          {"pass", r.ok()},
          {"checks", report_to_json(r.report)}};
}

Json verdict_to_json(const EquivalenceVerdict& v) {
  Json out{{"equivalent", v.equivalent}, {"candidates_tried", v.candidates_tried}};
  if (v.witness) {
    out["u"] = mat_to_json(v.witness->u);
    out["alpha1"] = scalar_to_json(v.witness->alpha1);
    out["alpha2"] = scalar_to_json(v.witness->alpha2);
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot read file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what(), e.byte);
  }
}

}  // namespace qact
