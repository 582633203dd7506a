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


#include "qact/cli.hpp"

#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "qact/clifford.hpp"
#include "qact/error.hpp"
#include "qact/json_io.hpp"
#include "qact/qspinor.hpp"

namespace qact::cli {

namespace {

struct Options {
  bool pretty = false;
  std::string q = "2";
  std::vector<std::string> params;
  std::string entry;
  std::string matrix_file;
  std::string file;
  std::string file1;
  std::string file2;
  std::string out;
};

bool is_verification_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::RelationViolated:
    case ErrorCode::DeterminantSingular:
    case ErrorCode::DeterminantNotCentral:
    case ErrorCode::AntipodeIdentityFailed:
    case ErrorCode::A11Singular:
    case ErrorCode::R22Singular:
    case ErrorCode::DNotInvariant:
    case ErrorCode::DSingular:
    case ErrorCode::MSingular:
    case ErrorCode::ModuleAlgebraViolated:
    case ErrorCode::Lemma1Mismatch:
    case ErrorCode::VerificationFailure:
    case ErrorCode::UnexpectedEquivalence:
    case ErrorCode::CorollaryViolated:
      return true;
    default:
      return false;
  }
}

std::string dump(const Json& j, bool pretty) { return (pretty ? j.dump(2) : j.dump()) + "\n"; }

CommandResult error_result(int code, const std::string& message, std::optional<std::size_t> position,
                           std::string_view kind, bool pretty) {
  Json j{{"error", message}, {"code", kind}, {"position", nullptr}};
  if (position) j["position"] = *position;
  return {code, dump(j, pretty), message + "\n"};
}

DeformationParameter parse_q(const std::string& text) { return validate_q(parse_scalar(text)); }

ParamAssignment parse_params(const std::vector<std::string>& items) {
  ParamAssignment out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail(ErrorCode::InvalidInput, "--param expects name=value, got \"" + item + "\"");
    const std::string name = canonical_param_name(item.substr(0, eq));
    try {
      out[name] = parse_scalar(item.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(e.code(), "--param " + name + ": " + e.what(), e.position());
    }
  }
  return out;
}

Json invariants_json(const Subspace& inv) {
  Json coeffs = Json::array();
  for (const auto& m : inv.basis_matrices()) {
    const UnitCoefficients c = express_in_units(m);
    Json terms = Json::object();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (!c[a][b].is_zero()) terms["e" + std::to_string(a + 1) + std::to_string(b + 1)] = format_scalar(c[a][b]);
    coeffs.push_back(std::move(terms));
  }
  Json out = subspace_to_json(inv);
  out["unit_coefficients"] = std::move(coeffs);
  return out;
}

CommandResult run_verify_table(const Options& o) {
  const auto q = parse_q(o.q);
  const auto overrides = parse_params(o.params);
  Json out{{"q", scalar_to_json(q)}};
  bool ok = true;
  if (!o.entry.empty()) {
    const TableEntry& entry = find_entry(o.entry);
    check_constraints(entry, q, resolve_params(entry, q, overrides));
    const auto report = verify_entry(entry, q, overrides);
    ok = report.ok();
    out["entries"] = Json::array({verification_to_json(report)});
  } else {
    const TableVerification tv = verify_table(q, overrides);
    ok = tv.ok();
    Json entries = Json::array();
    for (const auto& r : tv.entries) entries.push_back(verification_to_json(r));
    out["entries"] = std::move(entries);
    auto section = [](const Report& r) { return Json{{"pass", r.ok()}, {"checks", report_to_json(r)}}; };
    out["distinctness"] = section(tv.distinctness);
    out["corollary8"] = section(tv.corollary8);
    out["corollary9"] = section(tv.corollary9);
    out["rq_correspondence"] = section(tv.rq_correspondence);
  }
  out["pass"] = ok;
  return {ok ? kExitOk : kExitVerificationFailure, dump(out, o.pretty), {}};
}

CommandResult run_show_entry(const Options& o) {
  const auto q = parse_q(o.q);
  const TableEntry& entry = find_entry(o.entry);
  const ParamAssignment params = resolve_params(entry, q, parse_params(o.params));
  const GLqRep r = instantiate(entry, q, params);
  Json out{{"entry", entry.id},
           {"q", scalar_to_json(q)},
           {"params", params_to_json(params)},
           {"representation", rep_to_json(r)},
           {"det_q", mat_to_json(det_q(r))},
           {"operator_algebra", subspace_to_json(operator_algebra(r))},
           {"invariants", invariants_json(invariants(r))}};
  return {kExitOk, dump(out, o.pretty), {}};
}

CommandResult run_b_space(const Options& o) {
  const auto q = parse_q(o.q);
  const Json j = read_json_file(o.matrix_file);
  const Mat a = mat_from_json(j.is_object() && j.contains("matrix") ? j.at("matrix") : j);
  const Subspace b = spinor_space(a, q);
  Json out = subspace_to_json(b);
  out["q"] = scalar_to_json(q);
  out["square_nonzero"] = a.n() == 4 ? Json(space_square_nonzero(b)) : Json(nullptr);
  return {kExitOk, dump(out, o.pretty), {}};
}

CommandResult run_check_rep(const Options& o) {
  const GLqRep r = rep_from_json(read_json_file(o.file));
  Report report;
  const Report rel = verify_glq_relations(r);
  report.append(rel);
  try {
    (void)quantum_determinant(r);
    report.add("det_q_central_invertible", true);
  } catch (const Error& e) {
    report.add("det_q_central_invertible", false, e.what());
  }
  try {
    report.append(antipode_check(r));
  } catch (const Error& e) {
    report.add("antipode", false, e.what());
  }
  try {
    const InnerAction a = build_action(r, false);
    report.append(action_relations(a));
    report.append(verify_module_algebra(a));
  } catch (const Error& e) {
    report.add("module_algebra", false, e.what());
  }
  Json out{{"q", scalar_to_json(r.q)}, {"pass", report.ok()}, {"checks", report_to_json(report)}};
  return {report.ok() ? kExitOk : kExitVerificationFailure, dump(out, o.pretty), {}};
}

CommandResult run_invariants(const Options& o) {
  if (o.file.empty() == o.entry.empty()) fail(ErrorCode::InvalidInput, "invariants needs exactly one of --file and --entry");
  GLqRep r = o.file.empty() ? instantiate(o.entry, parse_q(o.q), parse_params(o.params))
                            : rep_from_json(read_json_file(o.file));
  Json out = invariants_json(invariants(r));
  out["q"] = scalar_to_json(r.q);
  if (!o.entry.empty()) out["entry"] = find_entry(o.entry).id;
  return {kExitOk, dump(out, o.pretty), {}};
}

CommandResult run_equiv(const Options& o) {
  const GLqRep r1 = rep_from_json(read_json_file(o.file1));
  const GLqRep r2 = rep_from_json(read_json_file(o.file2));
  if (r1.q.value() != r2.q.value()) fail(ErrorCode::InvalidInput, "representations use different q");
  return {kExitOk, dump(verdict_to_json(decide_equivalence(r1, r2)), o.pretty), {}};
}

CommandResult run_selftest(const Options& o) {
  const Report report = clifford_selftest(clifford_model());
  Json out{{"pass", report.ok()}, {"checks", report_to_json(report)}};
  return {report.ok() ? kExitOk : kExitVerificationFailure, dump(out, o.pretty), {}};
}

CommandResult run_export(const Options& o) {
  const auto q = parse_q(o.q);
  const TableEntry& entry = find_entry(o.entry);
  const Json rep = rep_to_json(instantiate(entry, q, parse_params(o.params)));
  if (o.out.empty()) return {kExitOk, dump(rep, o.pretty), {}};
  std::ofstream f(o.out);
  if (!f) fail(ErrorCode::InvalidInput, "cannot write file " + o.out);
  f << rep.dump(2) << "\n";
  if (!f) fail(ErrorCode::InvalidInput, "cannot write file " + o.out);
  return {kExitOk, dump(Json{{"entry", entry.id}, {"written", o.out}}, o.pretty), {}};
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact verification of inner GL_q(2,C)-actions on C(1,3)", "qact"};
  app.require_subcommand(1);
  app.add_flag("--pretty", o.pretty, "Indent JSON output");
  app.fallthrough();

  auto add_q = [&](CLI::App* sub) { sub->add_option("--q", o.q, "Deformation parameter (default 2)"); };
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--param", o.params, "Table parameter name=value (alpha, beta, gamma, xi)")->allow_extra_args(false);
  };

  auto* verify = app.add_subcommand("verify-table", "Verify one or all Table entries");
  verify->add_option("--entry", o.entry, "Entry id, e.g. S1 or G2b'");
  add_q(verify);
  add_params(verify);

  auto* show = app.add_subcommand("show-entry", "Print an instantiated Table entry");
  show->add_option("--entry", o.entry, "Entry id")->required();
  add_q(show);
  add_params(show);

  auto* bspace = app.add_subcommand("b-space", "Basis of {B : AB = qBA}");
  bspace->add_option("--matrix", o.matrix_file, "JSON matrix file")->required();
  add_q(bspace);

  auto* check = app.add_subcommand("check-rep", "Check relations, antipode and module-algebra identity");
  check->add_option("--file", o.file, "JSON representation file")->required();

  auto* inv = app.add_subcommand("invariants", "Invariant subspace of an action");
  inv->add_option("--file", o.file, "JSON representation file");
  inv->add_option("--entry", o.entry, "Entry id");
  add_q(inv);
  add_params(inv);

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two representations");
  equiv->add_option("--file1", o.file1, "First representation")->required();
  equiv->add_option("--file2", o.file2, "Second representation")->required();

  auto* selftest = app.add_subcommand("clifford-selftest", "Validate the gamma-matrix model");

  auto* exp = app.add_subcommand("export", "Write an instantiated entry as JSON");
  exp->add_option("--entry", o.entry, "Entry id")->required();
  exp->add_option("--out", o.out, "Output file (stdout when omitted)");
  add_q(exp);
  add_params(exp);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, dump(Json{{"usage", app.help()}}, o.pretty), {}};
  } catch (const CLI::ParseError& e) {
    return error_result(kExitInputError, e.what(), std::nullopt, "UsageError", o.pretty);
  }

  try {
    if (verify->parsed()) return run_verify_table(o);
    if (show->parsed()) return run_show_entry(o);
    if (bspace->parsed()) return run_b_space(o);
    if (check->parsed()) return run_check_rep(o);
    if (inv->parsed()) return run_invariants(o);
    if (equiv->parsed()) return run_equiv(o);
    if (selftest->parsed()) return run_selftest(o);
    if (exp->parsed()) return run_export(o);
  } catch (const Error& e) {
    const int code = is_verification_code(e.code()) ? kExitVerificationFailure : kExitInputError;
    return error_result(code, e.what(), e.position(), to_string(e.code()), o.pretty);
  } catch (const std::exception& e) {
    return error_result(kExitInputError, e.what(), std::nullopt, "InvalidInput", o.pretty);
  }
  return error_result(kExitInputError, "no subcommand", std::nullopt, "UsageError", o.pretty);
}

}  // namespace qact::cli
