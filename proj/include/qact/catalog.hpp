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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qact/action.hpp"

namespace qact {

/// Parameter values keyed by "alpha", "beta", "gamma" and "xi".
using ParamAssignment = std::map<std::string, Scalar>;

struct TableEntry {
  std::string id;
  /// Parameters used by the entry, in policy order.
  std::vector<std::string> params;
  std::size_t dim_r = 0;
  /// Shape of the operator algebra, rows separated by '/'. Tokens: '0'
  /// (zero), '*' (free), a lowercase name (tied variable) and
  /// `param:name` (parameter times the tied variable).
  std::string r_pattern;
  /// Shape of the invariant subspace in the same language.
  std::string invariant_pattern;
  std::vector<std::string> gamma_invariants;
  /// For a G entry, the S entry it is connected to; empty for S entries.
  std::string connected;
  bool a21_multiple_of_a12 = true;

  bool is_slq() const { return id.front() == 'S'; }
};

/// The 20 rows of the classification in Table order.
const std::vector<TableEntry>& table();

/// Canonical id for `name` ("S2a′" -> "S2a'", "G2" -> "G2b'"), or
/// UnknownEntry.
const TableEntry& find_entry(std::string_view name);

/// Accepts "alpha", "beta", "gamma", "xi" and the aliases a, b, g, x and the
/// Greek letters. Throws InvalidInput otherwise.
std::string canonical_param_name(std::string_view name);

/// Subspace of 4x4 matrices described by a pattern string. Throws
/// ParseError for malformed patterns and InvalidInput for a parameter the
/// assignment lacks.
Subspace pattern_subspace(std::string_view pattern, const ParamAssignment& params);

/// Throws ConstraintViolated naming the parameter and the excluded value.
void check_constraints(const TableEntry& e, const Scalar& q, const ParamAssignment& params);

/// Defaults alpha = 3, beta = 5, gamma = 7, xi = 5 (alpha = 2, beta = 1/2
/// for S2a'), filled in for parameters missing from `given`. A default that
/// violates a constraint is replaced by the next of 3, 5, 7, 11, 13, ...
/// User-supplied values are never changed. Parameters the entry does not
/// use are dropped.
ParamAssignment resolve_params(const TableEntry& e, const Scalar& q, const ParamAssignment& given = {});

/// Instantiates the entry after resolving and checking parameters.
GLqRep instantiate(const TableEntry& e, const DeformationParameter& q, const ParamAssignment& params = {});
GLqRep instantiate(std::string_view id, const DeformationParameter& q, const ParamAssignment& params = {});

/// The det_q column of the entry.
Mat expected_det_q(const TableEntry& e, const Scalar& q, const ParamAssignment& params);

struct VerificationReport {
  std::string entry;
  Scalar q;
  ParamAssignment params;
  Report report;
  double elapsed_seconds = 0;

  bool ok() const { return report.ok(); }
};

/// Every Table column and the representation-level identities for one entry.
VerificationReport verify_entry(const TableEntry& e, const DeformationParameter& q, const ParamAssignment& params = {});

/// All unordered pairs of distinct entries are inequivalent and every
/// entry is equivalent to itself.
Report verify_distinctness(const DeformationParameter& q, const ParamAssignment& overrides = {});

/// Each G entry's invariants are span{E, det_q}.
Report verify_corollary8(const DeformationParameter& q, const ParamAssignment& overrides = {});

struct DeterminantChoice {
  std::string entry;       // S entry
  Mat d;                   // invertible invariant
  std::string produces;    // G entry obtained, empty for scalar choices
};

/// The canonical invertible invariants D attached to each S entry.
std::vector<DeterminantChoice> canonical_determinants(const DeformationParameter& q, const ParamAssignment& overrides = {});

/// attach_determinant with every canonical D yields a valid representation
/// with det_q = D, connected back to the S entry.
Report verify_corollary9(const DeformationParameter& q, const ParamAssignment& overrides = {});

/// to_rq / from_rq round trip, det_q = A11 R22, and connected_slq of each G
/// entry equal to its S entry.
Report verify_rq_correspondence(const DeformationParameter& q, const ParamAssignment& overrides = {});

struct TableVerification {
  std::vector<VerificationReport> entries;
  Report distinctness;
  Report corollary8;
  Report corollary9;
  Report rq_correspondence;

  bool ok() const;
};

/// Verifies every entry (in parallel, capped by QACT_THREADS) and the
/// table-wide statements. Entry order in the result is Table order.
TableVerification verify_table(const DeformationParameter& q, const ParamAssignment& overrides = {});

/// Runs fn(0..count-1) on up to QACT_THREADS worker threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace qact
