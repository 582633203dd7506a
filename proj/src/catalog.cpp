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


#include "qact/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "qact/clifford.hpp"
#include "qact/error.hpp"
#include "qact/qspinor.hpp"

namespace qact {

namespace {

Mat e(int i, int j) { return unit4(i, j); }

std::vector<TableEntry> make_table() {
  const std::string c_only = "b 0 0 0/0 b 0 0/0 0 b 0/0 0 0 b";
  auto entry = [](std::string id, std::vector<std::string> params, std::size_t dim_r, std::string r_pattern,
                  std::string inv_pattern, std::vector<std::string> gamma, std::string connected = {},
                  bool multiple = true) {
    return TableEntry{std::move(id), std::move(params), dim_r, std::move(r_pattern), std::move(inv_pattern),
                      std::move(gamma), std::move(connected), multiple};
  };
  return {
      entry("S1", {"alpha"}, 6, "* * * 0/0 * * 0/0 0 e 0/0 0 0 e", "b 0 0 0/0 b 0 0/0 0 b 0/0 0 d g",
            {"(1-g0)*(-g1+i*g2)*g3", "(1-g0)*(1-i*g12)"}),
      entry("G1a", {"alpha", "beta"}, 7, "* * * 0/0 * * 0/0 0 * 0/0 0 0 *", "g 0 0 0/0 g 0 0/0 0 g 0/0 0 0 d",
            {"(1-g0)*(1-i*g12)"}, "S1"),
      entry("G1b", {"alpha"}, 7, "* * * 0/0 * * 0/0 0 e 0/0 0 * e", "b 0 0 0/0 b 0 0/0 0 b 0/0 0 d b",
            {"(1-g0)*(-g1+i*g2)*g3"}, "S1"),
      entry("S2a", {"alpha", "beta"}, 8, "* * * */0 e 0 */0 0 e */0 0 0 *", c_only, {}, {}, false),
      entry("S2a'", {"alpha", "beta"}, 7, "* alpha:g g */0 e 0 */0 0 e */0 0 0 *", c_only, {}, {}, false),
      entry("S2b", {"alpha"}, 7, "* * * */0 e 0 */0 0 e 0/0 0 0 *", c_only, {}, {}, false),
      entry("S2b'", {"alpha"}, 6, "* * 0 */0 e 0 */0 0 e 0/0 0 0 *", "b 0 0 0/0 b 0 0/0 0 d 0/0 0 0 b",
            {"(1-g0)*(1+i*g12)"}),
      entry("G2b'", {"alpha", "beta"}, 7, "* * 0 */0 * 0 */0 0 * 0/0 0 0 *", "d 0 0 0/0 d 0 0/0 0 e 0/0 0 0 d",
            {"(1-g0)*(1+i*g12)"}, "S2b'"),
      entry("S3", {"alpha"}, 6, "e 0 * */0 e 0 0/0 0 * */0 0 0 *", "b d 0 0/0 g 0 0/0 0 b 0/0 0 0 b",
            {"(1+g0)*(1-i*g12)", "(1+g0)*(g1+i*g2)*g3"}),
      entry("G3a", {"alpha", "beta"}, 7, "* 0 * */0 * 0 0/0 0 * */0 0 0 *", "g 0 0 0/0 d 0 0/0 0 g 0/0 0 0 g",
            {"(1+g0)*(1-i*g12)"}, "S3"),
      entry("G3b", {"alpha"}, 7, "e * * */0 e 0 0/0 0 * */0 0 0 *", "b d 0 0/0 b 0 0/0 0 b 0/0 0 0 b",
            {"(1+g0)*(g1+i*g2)*g3"}, "S3"),
      entry("S4a", {"alpha"}, 10, "* * * */0 * * */0 0 * */0 0 0 *", c_only, {}),
      entry("S4b", {"alpha"}, 7, "* * * 0/0 * * 0/0 0 * 0/0 0 0 *", "b 0 0 0/0 b 0 0/0 0 b 0/0 0 0 d",
            {"(1-g0)*(1-i*g12)"}),
      entry("G4b", {"alpha", "beta"}, 7, "* * * 0/0 * * 0/0 0 * 0/0 0 0 *", "g 0 0 0/0 g 0 0/0 0 g 0/0 0 0 d",
            {"(1-g0)*(1-i*g12)"}, "S4b"),
      entry("S5", {"alpha", "beta"}, 7, "* 0 0 0/0 * * */0 0 * */0 0 0 *", "g 0 0 0/0 d 0 0/0 0 d 0/0 0 0 d",
            {"(1+g0)*(1+i*g12)"}),
      entry("G5", {"alpha", "beta", "gamma"}, 7, "* 0 0 0/0 * * */0 0 * */0 0 0 *",
            "d 0 0 0/0 e 0 0/0 0 e 0/0 0 0 e", {"(1+g0)*(1+i*g12)"}, "S5"),
      entry("S6", {"alpha"}, 7, "e * * */0 e 0 0/0 0 * */0 0 0 *", "b d 0 0/0 b 0 0/0 0 b 0/0 0 0 b",
            {"(1+g0)*(g1+i*g2)*g3"}),
      entry("G6", {"alpha", "xi"}, 7, "e * * */0 e 0 0/0 0 * */0 0 0 *", "b d 0 0/0 b 0 0/0 0 b 0/0 0 0 b",
            {"(1+g0)*(g1+i*g2)*g3"}, "S6"),
      entry("S7", {"alpha"}, 7, "* * 0 */0 * 0 */0 0 e */0 0 0 e", "b 0 0 0/0 b 0 0/0 0 b d/0 0 0 b",
            {"(1-g0)*(g1+i*g2)*g3"}),
      entry("G7", {"alpha", "xi"}, 7, "* * 0 */0 * 0 */0 0 e */0 0 0 e", "b 0 0 0/0 b 0 0/0 0 b d/0 0 0 b",
            {"(1-g0)*(g1+i*g2)*g3"}, "S7"),
  };
}

const Scalar& param(const ParamAssignment& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) fail(ErrorCode::InvalidInput, "missing parameter " + name);
  return it->second;
}

bool contains(const std::vector<Scalar>& values, const Scalar& x) {
  return std::find(values.begin(), values.end(), x) != values.end();
}

/// Excluded values of `name` given the parameters fixed so far.
std::vector<Scalar> excluded_values(const std::string& id, const std::string& name, const Scalar& q,
                                    const ParamAssignment& p) {
  const Scalar qi = q.inverse();
  if (name == "alpha") {
    if (id == "S5" || id == "G5") return form5_excluded(q);
    if (id == "S2a" || id == "S2a'") return {};
    return {0};
  }
  if (name == "beta") {
    if (id == "G1a" || id == "G4b") return {0, -1};
    if (id == "G2b'") return {0, -qi};
    if (id == "G3a") return {0, -(qi * qi)};
    if (id == "S5" || id == "G5") return {0};
    if (id == "S2a" && p.count("alpha") && !p.at("alpha").is_zero()) return {p.at("alpha").inverse()};
    return {};
  }
  if (name == "gamma") {
    std::vector<Scalar> out{0};
    if (p.count("alpha") && !p.at("alpha").is_zero()) out.push_back(-p.at("alpha").inverse());
    return out;
  }
  if (name == "xi") return {0};
  return {};
}

struct Generators {
  Mat a11, a12, a21, a22;
};

Generators build(const TableEntry& entry, const Scalar& q, const ParamAssignment& p) {
  const std::string& id = entry.id;
  const Scalar q2 = q * q, qi = q.inverse(), qi2 = qi * qi;
  auto get = [&](const char* name) { return param(p, name); };
  Generators g;
  auto finish_multiple = [&](const Scalar& factor) { g.a21 = factor * g.a12; };

  if (id == "S1" || id == "G1a" || id == "G1b") {
    const Scalar alpha = get("alpha");
    g.a11 = Mat::diag({q2, q, 1, 1});
    g.a12 = e(1, 2) + e(2, 3);
    finish_multiple(alpha);
    g.a22 = inverse(g.a11) + alpha * qi * e(1, 3);
    if (id == "G1a") g.a22 += get("beta") * e(4, 4);
    if (id == "G1b") g.a22 += e(4, 3);
  } else if (id == "S2a" || id == "S2a'") {
    const Scalar alpha = get("alpha"), beta = get("beta");
    g.a11 = Mat::diag({q2, q, q, 1});
    g.a12 = alpha * e(1, 2) + e(1, 3) + e(2, 4);
    g.a21 = e(1, 2) + beta * e(1, 3) + e(3, 4);
    g.a22 = inverse(g.a11) + qi * e(1, 4);
  } else if (id == "S2b") {
    const Scalar alpha = get("alpha");
    g.a11 = Mat::diag({q2, q, q, 1});
    g.a12 = e(1, 2) + e(2, 4);
    g.a21 = alpha * e(1, 2) + alpha * e(2, 4) + e(1, 3);
    g.a22 = inverse(g.a11) + alpha * qi * e(1, 4);
  } else if (id == "S2b'" || id == "G2b'") {
    const Scalar alpha = get("alpha");
    g.a11 = Mat::diag({q2, q, q, 1});
    g.a12 = e(1, 2) + e(2, 4);
    finish_multiple(alpha);
    g.a22 = inverse(g.a11) + alpha * qi * e(1, 4);
    if (id == "G2b'") g.a22 += get("beta") * e(3, 3);
  } else if (id == "S3" || id == "G3a" || id == "G3b") {
    const Scalar alpha = get("alpha");
    g.a11 = Mat::diag({q2, q2, q, 1});
    g.a12 = e(1, 3) + e(3, 4);
    finish_multiple(alpha);
    g.a22 = inverse(g.a11) + alpha * qi * e(1, 4);
    if (id == "G3a") g.a22 += get("beta") * e(2, 2);
    if (id == "G3b") g.a22 += qi2 * e(1, 2);
  } else if (id == "S4a") {
    const Scalar alpha = get("alpha");
    g.a11 = Mat::diag({q2 * q, q2, q, 1});
    g.a12 = e(1, 2) + e(2, 3) + e(3, 4);
    finish_multiple(alpha);
    g.a22 = inverse(g.a11) + alpha * qi2 * e(1, 3) + alpha * qi * e(2, 4);
  } else if (id == "S4b" || id == "G4b") {
    const Scalar alpha = get("alpha");
    g.a11 = Mat::diag({q2 * q, q2, q, 1});
    g.a12 = e(1, 2) + e(2, 3);
    finish_multiple(alpha);
    g.a22 = inverse(g.a11) + alpha * qi2 * e(1, 3);
    if (id == "G4b") g.a22 += get("beta") * e(4, 4);
  } else if (id == "S5" || id == "G5") {
    const Scalar alpha = get("alpha"), beta = get("beta");
    g.a11 = Mat::diag({alpha, q2, q, 1});
    g.a12 = e(2, 3) + e(3, 4);
    finish_multiple(beta);
    g.a22 = inverse(g.a11) + beta * qi * e(2, 4);
    if (id == "G5") g.a22 += get("gamma") * e(1, 1);
  } else if (id == "S6" || id == "G6") {
    const Scalar alpha = get("alpha");
    g.a11 = Mat::diag({q2, q2, q, 1}) + e(1, 2);
    g.a12 = e(1, 3) + e(3, 4);
    finish_multiple(alpha);
    g.a22 = inverse(g.a11) + alpha * qi * e(1, 4);
    if (id == "G6") g.a22 += get("xi") * e(1, 2);
  } else if (id == "S7") {
    const Scalar alpha = get("alpha");
    g.a11 = Mat::diag({q2, q, 1, 1}) + e(3, 4);
    g.a12 = e(1, 2) + e(2, 4);
    finish_multiple(alpha);
    g.a22 = inverse(g.a11) + alpha * qi * e(1, 4);
  } else if (id == "G7") {
    const Scalar alpha = get("alpha"), xi = get("xi");
    g.a11 = Mat::diag({q2, q, 1, 1}) + e(3, 4);
    g.a12 = e(1, 2) + e(2, 4);
    finish_multiple(alpha);
    g.a22 = Mat::diag({qi2, qi, 1, 1}) + alpha * qi * e(1, 4) + (xi - 1) * e(3, 4);
  } else {
    fail(ErrorCode::UnknownEntry, "unknown entry " + id);
  }
  return g;
}

std::string pattern_error(std::string_view pattern, std::size_t pos, const std::string& what) {
  return what + " in pattern \"" + std::string(pattern) + "\" at position " + std::to_string(pos);
}

int thread_budget() {
  if (const char* env = std::getenv("QACT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void add_exception(Report& report, const std::string& name, const std::exception& ex) {
  report.add(name, false, std::string("error: ") + ex.what());
}

std::vector<std::pair<const TableEntry*, GLqRep>> instantiate_all(const DeformationParameter& q,
                                                                   const ParamAssignment& overrides) {
  std::vector<std::pair<const TableEntry*, GLqRep>> out;
  for (const auto& entry : table()) out.emplace_back(&entry, instantiate(entry, q, overrides));
  return out;
}

}  // namespace

const std::vector<TableEntry>& table() {
  static const std::vector<TableEntry> entries = make_table();
  return entries;
}

const TableEntry& find_entry(std::string_view name) {
  std::string key(name);
  for (const std::string prime : {"′", "’"}) {
    for (auto pos = key.find(prime); pos != std::string::npos; pos = key.find(prime)) key.replace(pos, prime.size(), "'");
  }
  if (key == "G2" || key == "G2b") key = "G2b'";
  for (const auto& entry : table())
    if (entry.id == key) return entry;
  fail(ErrorCode::UnknownEntry, "unknown Table entry \"" + std::string(name) + "\"");
}

std::string canonical_param_name(std::string_view name) {
  if (name == "alpha" || name == "a" || name == "α") return "alpha";
  if (name == "beta" || name == "b" || name == "β") return "beta";
  if (name == "gamma" || name == "g" || name == "γ") return "gamma";
  if (name == "xi" || name == "x" || name == "ξ") return "xi";
  fail(ErrorCode::InvalidInput, "unknown parameter \"" + std::string(name) + "\"");
}

Subspace pattern_subspace(std::string_view pattern, const ParamAssignment& params) {
  // Each variable owns a matrix; the subspace is the span of those matrices.
  std::vector<std::pair<std::string, Mat>> vars;
  auto var = [&](const std::string& name) -> Mat& {
    for (auto& [n, m] : vars)
      if (n == name) return m;
    vars.emplace_back(name, Mat(4));
    return vars.back().second;
  };
  std::size_t row = 0, col = 0, pos = 0, free_count = 0;
  while (pos <= pattern.size()) {
    while (pos < pattern.size() && pattern[pos] == ' ') ++pos;
    if (pos == pattern.size() || pattern[pos] == '/') {
      if (col != 4) fail(ErrorCode::ParseError, pattern_error(pattern, pos, "row without four entries"));
      ++row;
      col = 0;
      if (pos == pattern.size()) break;
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < pattern.size() && pattern[pos] != ' ' && pattern[pos] != '/') ++pos;
    const std::string_view tok = pattern.substr(start, pos - start);
    if (row >= 4 || col >= 4) fail(ErrorCode::ParseError, pattern_error(pattern, start, "too many entries"));
    if (tok == "*") {
      var("*" + std::to_string(free_count++))(row, col) = 1;
    } else if (tok != "0") {
      Scalar coeff(1);
      std::string_view name = tok;
      if (const auto colon = tok.find(':'); colon != std::string_view::npos) {
        coeff = param(params, canonical_param_name(tok.substr(0, colon)));
        name = tok.substr(colon + 1);
      }
      if (name.empty() || !std::all_of(name.begin(), name.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
        fail(ErrorCode::ParseError, pattern_error(pattern, start, "bad token"));
      }
      var(std::string(name))(row, col) = coeff;
    }
    ++col;
  }
  if (row != 4) fail(ErrorCode::ParseError, pattern_error(pattern, pos, "pattern without four rows"));
  std::vector<Mat> mats;
  for (auto& [n, m] : vars) mats.push_back(std::move(m));
  if (mats.empty()) return Subspace(16);
  return Subspace::span(mats);
}

void check_constraints(const TableEntry& entry, const Scalar& q, const ParamAssignment& params) {
  ParamAssignment fixed;
  for (const auto& name : entry.params) {
    const Scalar& value = param(params, name);
    if (contains(excluded_values(entry.id, name, q, fixed), value)) {
      fail(ErrorCode::ConstraintViolated, entry.id + ": " + name + " = " + value.str() + " is excluded");
    }
    fixed[name] = value;
  }
  if (entry.id == "S2a'" && param(params, "alpha") * param(params, "beta") != Scalar(1)) {
    fail(ErrorCode::ConstraintViolated, "S2a': alpha * beta must equal 1");
  }
}

ParamAssignment resolve_params(const TableEntry& entry, const Scalar& q, const ParamAssignment& given) {
  ParamAssignment out;
  for (const auto& [name, value] : given) (void)canonical_param_name(name);
  for (const auto& name : entry.params) {
    if (auto it = given.find(name); it != given.end()) {
      out[name] = it->second;
      continue;
    }
    if (entry.id == "S2a'") {
      if (name == "alpha") {
        out[name] = given.count("beta") && !given.at("beta").is_zero() ? given.at("beta").inverse() : Scalar(2);
      } else {
        out[name] = out.at("alpha").is_zero() ? Scalar(0) : out.at("alpha").inverse();
      }
      continue;
    }
    const long nominal = name == "alpha" ? 3 : name == "beta" ? 5 : name == "gamma" ? 7 : 5;
    const auto excluded = excluded_values(entry.id, name, q, out);
    bool chosen = false;
    for (long candidate : {nominal, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
      if (!contains(excluded, Scalar(candidate))) {
        out[name] = candidate;
        chosen = true;
        break;
      }
    }
    if (!chosen) fail(ErrorCode::ConstraintViolated, entry.id + ": no admissible default for " + name);
  }
  return out;
}

GLqRep instantiate(const TableEntry& entry, const DeformationParameter& q, const ParamAssignment& params) {
  const ParamAssignment p = resolve_params(entry, q, params);
  check_constraints(entry, q, p);
  Generators g = build(entry, q, p);
  GLqRep rep{std::move(g.a11), std::move(g.a12), std::move(g.a21), std::move(g.a22), q};
  require_ok(verify_glq_relations(rep), ErrorCode::RelationViolated);
  return rep;
}

GLqRep instantiate(std::string_view id, const DeformationParameter& q, const ParamAssignment& params) {
  return instantiate(find_entry(id), q, params);
}

Mat expected_det_q(const TableEntry& entry, const Scalar& q, const ParamAssignment& p) {
  const Mat id = Mat::identity(4);
  const std::string& x = entry.id;
  if (x == "G1a" || x == "G4b") return id + param(p, "beta") * e(4, 4);
  if (x == "G1b") return id + e(4, 3);
  if (x == "G2b'") return id + q * param(p, "beta") * e(3, 3);
  if (x == "G3a") return id + q * q * param(p, "beta") * e(2, 2);
  if (x == "G3b") return id + e(1, 2);
  if (x == "G5") return id + param(p, "alpha") * param(p, "gamma") * e(1, 1);
  if (x == "G6") return id + q * q * param(p, "xi") * e(1, 2);
  if (x == "G7") return id + param(p, "xi") * e(3, 4);
  return id;
}

VerificationReport verify_entry(const TableEntry& entry, const DeformationParameter& q, const ParamAssignment& given) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport out;
  out.entry = entry.id;
  out.q = q.value();
  Report& rep = out.report;
  try {
    out.params = resolve_params(entry, q, given);
    const GLqRep r = instantiate(entry, q, out.params);
    const auto gens = r.generators();
    rep.append(verify_glq_relations(r));

    const Mat d = det_q(r);
    rep.add("det_q", d == expected_det_q(entry, q, out.params));
    bool central = true;
    try {
      (void)quantum_determinant(r);
    } catch (const Error&) {
      central = false;
    }
    rep.add("det_q_central_invertible", central);
    rep.add("slq_status", is_slq(r) == entry.is_slq(), entry.is_slq() ? "det_q = E expected" : "det_q != E expected");

    rep.add("a11_a22_invertible", !determinant(r.a11).is_zero() && !determinant(r.a22).is_zero());
    rep.add("a12_a21_nilpotent", is_nilpotent(r.a12) && is_nilpotent(r.a21));
    rep.add("nontrivial_perturbation", !(r.a12 * r.a21).is_zero());
    const std::vector<Mat> off{r.a12, r.a21};
    rep.add("a21_multiple_of_a12", (Subspace::span(off).dim() == 1) == entry.a21_multiple_of_a12);

    const Subspace alg = operator_algebra(r);
    rep.add("dim_R", alg.dim() == entry.dim_r,
            "computed " + std::to_string(alg.dim()) + ", expected " + std::to_string(entry.dim_r));
    rep.add("R_pattern", alg == pattern_subspace(entry.r_pattern, out.params), entry.r_pattern);

    const InnerAction action = build_action(r);
    rep.append(action_relations(action));
    const Subspace cent = centralizer(gens);
    const Subspace fixed = fixed_points(action);
    rep.add("lemma1", cent == fixed,
            "centralizer dim " + std::to_string(cent.dim()) + ", fixed points dim " + std::to_string(fixed.dim()));
    const Subspace expected_inv = pattern_subspace(entry.invariant_pattern, out.params);
    rep.add("invariant_subspace", cent == expected_inv,
            "dim " + std::to_string(cent.dim()) + ", expected " + std::to_string(expected_inv.dim()));

    std::vector<Mat> spanning{Mat::identity(4)};
    bool inside = true;
    for (const auto& expr : entry.gamma_invariants) {
      Mat v = eval_gamma_expr(expr);
      inside = inside && cent.contains(v);
      spanning.push_back(std::move(v));
    }
    rep.add("gamma_invariants", inside && Subspace::span(spanning) == cent,
            std::to_string(entry.gamma_invariants.size()) + " printed invariant(s)");
    rep.add("det_q_invariant", cent.contains(d));
    rep.append(epsilon_consistency(action, cent));

    const Report anti = antipode_check(r);
    const auto* bad = anti.first_failure();
    rep.add("antipode", bad == nullptr, bad ? "first failure " + bad->name : "8 identities");
    const Report mod = verify_module_algebra(action);
    const auto* mbad = mod.first_failure();
    rep.add("module_algebra", mbad == nullptr, mbad ? mbad->name + " " + mbad->detail : "1024 identities");

    const RqRep rq = to_rq(r);
    rep.add("rq_roundtrip", from_rq(rq) == r && r.a11 * rq.r22 == d);
  } catch (const std::exception& ex) {
    add_exception(rep, "exception", ex);
  }
  out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Report verify_distinctness(const DeformationParameter& q, const ParamAssignment& overrides) {
  const auto reps = instantiate_all(q, overrides);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i; j < reps.size(); ++j) pairs.emplace_back(i, j);
  std::vector<CheckResult> results(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    CheckResult& c = results[k];
    c.name = reps[i].first->id + "~" + reps[j].first->id;
    try {
      const EquivalenceVerdict v = decide_equivalence(reps[i].second, reps[j].second);
      const bool want = i == j;
      c.pass = v.equivalent == want && (!want || check_witness(reps[i].second, reps[j].second, *v.witness));
      c.detail = std::string(v.equivalent ? "equivalent" : "not equivalent") + ", " +
                 std::to_string(v.candidates_tried) + " candidate pairs";
    } catch (const std::exception& ex) {
      c.pass = false;
      c.detail = std::string("error: ") + ex.what();
    }
  });
  Report report;
  report.checks = std::move(results);
  return report;
}

Report verify_corollary8(const DeformationParameter& q, const ParamAssignment& overrides) {
  Report report;
  for (const auto& entry : table()) {
    if (entry.is_slq()) continue;
    try {
      const GLqRep r = instantiate(entry, q, overrides);
      const std::vector<Mat> expect{Mat::identity(4), det_q(r)};
      const Subspace inv = invariants(r);
      report.add(entry.id, inv == Subspace::span(expect) && inv.dim() == 2,
                 "invariants dim " + std::to_string(inv.dim()));
    } catch (const std::exception& ex) {
      add_exception(report, entry.id, ex);
    }
  }
  return report;
}

std::vector<DeterminantChoice> canonical_determinants(const DeformationParameter& dq, const ParamAssignment& overrides) {
  const Scalar& q = dq.value();
  const Mat id = Mat::identity(4);
  auto params_of = [&](const char* g) { return resolve_params(find_entry(g), q, overrides); };
  std::vector<DeterminantChoice> out;
  for (const auto& entry : table()) {
    if (!entry.is_slq()) continue;
    out.push_back({entry.id, id, entry.id});
    out.push_back({entry.id, Scalar(2) * id, {}});
  }
  auto add = [&](const char* s, Mat d, const char* g) { out.push_back({s, std::move(d), g}); };
  add("S1", id + param(params_of("G1a"), "beta") * e(4, 4), "G1a");
  add("S1", id + e(4, 3), "G1b");
  add("S2b'", id + q * param(params_of("G2b'"), "beta") * e(3, 3), "G2b'");
  add("S3", id + q * q * param(params_of("G3a"), "beta") * e(2, 2), "G3a");
  add("S3", id + e(1, 2), "G3b");
  add("S4b", id + param(params_of("G4b"), "beta") * e(4, 4), "G4b");
  {
    const auto p = params_of("G5");
    add("S5", id + param(p, "alpha") * param(p, "gamma") * e(1, 1), "G5");
  }
  add("S6", id + q * q * param(params_of("G6"), "xi") * e(1, 2), "G6");
  add("S7", id + param(params_of("G7"), "xi") * e(3, 4), "G7");
  return out;
}

Report verify_corollary9(const DeformationParameter& q, const ParamAssignment& overrides) {
  Report report;
  for (const auto& choice : canonical_determinants(q, overrides)) {
    const std::string name = choice.entry + "+D->" + (choice.produces.empty() ? "scalar" : choice.produces);
    try {
      const TableEntry& s = find_entry(choice.entry);
      const ParamAssignment base = choice.produces.empty() ? overrides : resolve_params(find_entry(choice.produces), q, overrides);
      const GLqRep slq = instantiate(s, q, base);
      const GLqRep g = attach_determinant(slq, choice.d);
      bool ok = verify_glq_relations(g).ok() && det_q(g) == choice.d && connected_slq(g) == slq;
      if (!choice.produces.empty()) ok = ok && g == instantiate(find_entry(choice.produces), q, base);
      report.add(name, ok);
    } catch (const std::exception& ex) {
      add_exception(report, name, ex);
    }
  }
  return report;
}

Report verify_rq_correspondence(const DeformationParameter& q, const ParamAssignment& overrides) {
  Report report;
  for (const auto& entry : table()) {
    try {
      const GLqRep r = instantiate(entry, q, overrides);
      const RqRep rq = to_rq(r);
      bool ok = from_rq(rq) == r && r.a11 * rq.r22 == det_q(r);
      if (entry.is_slq()) ok = ok && rq.r22 == inverse(r.a11);
      std::string detail = "round trip";
      if (!entry.is_slq()) {
        const ParamAssignment p = resolve_params(entry, q, overrides);
        ok = ok && connected_slq(r) == instantiate(find_entry(entry.connected), q, p);
        detail += ", connected to " + entry.connected;
      }
      report.add(entry.id, ok, detail);
    } catch (const std::exception& ex) {
      add_exception(report, entry.id, ex);
    }
  }
  return report;
}

bool TableVerification::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& r) { return r.ok(); }) && distinctness.ok() &&
         corollary8.ok() && corollary9.ok() && rq_correspondence.ok();
}

TableVerification verify_table(const DeformationParameter& q, const ParamAssignment& overrides) {
  TableVerification out;
  const auto& entries = table();
  out.entries.resize(entries.size());
  parallel_for(entries.size(), [&](std::size_t k) { out.entries[k] = verify_entry(entries[k], q, overrides); });
  out.distinctness = verify_distinctness(q, overrides);
  out.corollary8 = verify_corollary8(q, overrides);
  out.corollary9 = verify_corollary9(q, overrides);
  out.rq_correspondence = verify_rq_correspondence(q, overrides);
  return out;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(thread_budget()));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          fn(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace qact
