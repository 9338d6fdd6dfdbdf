// Copyright 2026 The hgcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hgc/code.hpp"
#include "hgc/dephasing.hpp"
#include "hgc/distance.hpp"
#include "hgc/state.hpp"

namespace hgc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "hgcodes 1.0.0";

// %.17g; the only float format used in reports and dumps.
std::string format_double(double value);

// Deterministic serializer: insertion-ordered keys, floats via format_double.
std::string dump_json(const Json& value, int indent = 2);

// Code definition document:
// {"name", "n", "stabilizers": [...], "logical_pairs": [{"x", "z"}],
//  "expected": {"k", "d", "m"}?, "metadata": {...}?}
Json code_to_json(const StabilizerCode& code);
std::string export_code(const StabilizerCode& code);

StabilizerCode code_from_json(const Json& doc);
// Throws DocumentError with line/column for malformed text; build_code
// errors are forwarded with the offending field named.
StabilizerCode import_code(std::string_view text);

struct VerificationReport {
  std::string code;
  std::size_t n = 0;
  std::size_t rank = 0;
  std::size_t k = 0;
  bool generators_commute = true;
  bool phases_consistent = true;
  std::vector<std::pair<std::size_t, std::size_t>> anticommuting;
  LogicalValidationReport logical_pairs;
  std::uint64_t degeneracy = 0;
  std::optional<CodeParameters> expected;
  bool expected_match = true;

  bool pass() const;
};

VerificationReport verify_code(const StabilizerCode& code);
Json to_json(const VerificationReport& report);
std::string render_text(const VerificationReport& report);

Json distance_report(const StabilizerCode& code, const DistanceResult& result);
Json deviation_report(const DeviationReport& report);
Json bloch_report(const StabilizerCode& code, const DephasingSpec& spec, const BlochVector& r);

// One "<bitstring> <re> <im>" line per nonzero amplitude, bitstring
// qubit-1-first, lines sorted lexicographically.
std::string format_state_support(const StateVectorXd& state);
std::string basis_bitstring(std::uint64_t index, std::size_t num_qubits);

}  // namespace hgc
