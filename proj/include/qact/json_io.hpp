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

#include <string>

#include "json.hpp"
#include "qact/catalog.hpp"

namespace qact {

using Json = nlohmann::json;

/// {"re": "3/2", "im": "-1/2"}
Json scalar_to_json(const Scalar& s);
/// Accepts the object form, a scalar string or an integer.
Scalar scalar_from_json(const Json& j, const std::string& where = "value");

/// {"n": 4, "rows": [["1", "0+1i", ...], ...]}
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, const std::string& where = "matrix");

/// {"q": scalar, "A11": mat, "A12": mat, "A21": mat, "A22": mat}
Json rep_to_json(const GLqRep& r);
GLqRep rep_from_json(const Json& j);

Json subspace_to_json(const Subspace& s);
Json params_to_json(const ParamAssignment& p);
Json report_to_json(const Report& r);
Json verification_to_json(const VerificationReport& r);
Json verdict_to_json(const EquivalenceVerdict& v);

/// Reads and parses a JSON file. Throws InvalidInput when the file cannot
/// be read and ParseError (with byte position) for malformed JSON.
Json read_json_file(const std::string& path);

}  // namespace qact
