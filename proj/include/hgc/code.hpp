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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgc/bitvec.hpp"
#include "hgc/pauli.hpp"

namespace hgc {

struct LogicalPair {
  PauliOperator x_bar;
  PauliOperator z_bar;
  friend bool operator==(const LogicalPair&, const LogicalPair&) = default;
};

// [[n, k, d]] plus optional layout data. family_index is p for the genus-2
// grid family and q for the vertical chain.
struct CodeParameters {
  int n = 0;
  int k = 0;
  int d = 0;
  std::optional<int> ancillas;
  std::optional<int> family_index;

  double encoding_rate() const { return n == 0 ? 0.0 : static_cast<double>(k) / n; }
  friend bool operator==(const CodeParameters&, const CodeParameters&) = default;
};

// What build_code does when two generators anticommute.
enum class CommutationPolicy {
  kEnforce,  // throw NonCommutingGenerators
  kRecord,   // keep the code, list the pairs in anticommuting_pairs()
};

// Metadata carried alongside the algebra. None of it affects validation,
// except that path operators must commute with every generator.
struct CodeInfo {
  std::optional<CodeParameters> expected;
  std::optional<int> genus;
  std::string provenance;
  // Candidate logical paths traced on the layout (genus-5 directed paths).
  std::vector<PauliOperator> path_operators;
  friend bool operator==(const CodeInfo&, const CodeInfo&) = default;
};

class StabilizerCode {
 public:
  static StabilizerCode build(std::string name, std::size_t num_qubits, std::vector<PauliOperator> generators,
                              std::vector<LogicalPair> logical_pairs = {}, CodeInfo info = {},
                              CommutationPolicy policy = CommutationPolicy::kEnforce);

  const std::string& name() const { return name_; }
  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<PauliOperator>& generators() const { return generators_; }
  const std::vector<LogicalPair>& logical_pairs() const { return logical_pairs_; }
  const CodeInfo& info() const { return info_; }
  CommutationPolicy policy() const { return policy_; }

  std::size_t rank() const { return echelon_.rank(); }
  std::size_t logical_count() const { return num_qubits_ - rank(); }

  // Generator index pairs (i < j) that anticommute; empty for a valid code.
  const std::vector<std::pair<std::size_t, std::size_t>>& anticommuting_pairs() const { return anticommuting_; }
  bool generators_commute() const { return anticommuting_.empty(); }
  // False when some dependent generator differs in phase from the product of
  // the generators it depends on, i.e. -I lies in the generated group.
  bool phases_consistent() const { return phases_consistent_; }

  // Generators whose (x|z) rows are linearly independent, in list order.
  const std::vector<std::size_t>& independent_generators() const { return echelon_.independent_rows(); }

  // Span membership of the (x|z) row, ignoring phase. On success, combination
  // receives the generator indices whose product has that row.
  bool in_span(const PauliOperator& p, BitVector* combination = nullptr) const;
  bool in_span_row(const BitVector& row) const { return echelon_.in_span(row); }

  // Ordered product (ascending index) of the generators selected by combination.
  PauliOperator product_of(const BitVector& combination) const;

  // Same definition: name, generators, pairs, metadata and policy.
  friend bool operator==(const StabilizerCode& a, const StabilizerCode& b);

 private:
  StabilizerCode() = default;

  std::string name_;
  std::size_t num_qubits_ = 0;
  std::vector<PauliOperator> generators_;
  std::vector<LogicalPair> logical_pairs_;
  CodeInfo info_;
  CommutationPolicy policy_ = CommutationPolicy::kEnforce;
  Gf2Echelon echelon_;
  std::vector<std::pair<std::size_t, std::size_t>> anticommuting_;
  bool phases_consistent_ = true;
};

StabilizerCode build_code(std::string name, std::size_t num_qubits, std::vector<PauliOperator> generators,
                          std::vector<LogicalPair> logical_pairs = {}, CodeInfo info = {},
                          CommutationPolicy policy = CommutationPolicy::kEnforce);

inline std::size_t generator_rank(const StabilizerCode& code) { return code.rank(); }
inline std::size_t logical_count(const StabilizerCode& code) { return code.logical_count(); }

struct PairCheck {
  std::size_t index = 0;
  bool pass = true;
  std::vector<std::string> failures;
};

struct LogicalValidationReport {
  std::vector<PairCheck> pairs;
  bool pass() const;
};

// Checks every pair against the generators, against each other, and for
// membership in the stabilizer group.
LogicalValidationReport validate_logical_pairs(const StabilizerCode& code);
LogicalValidationReport validate_logical_pairs(const StabilizerCode& code, const std::vector<LogicalPair>& pairs);

struct Membership {
  bool member = false;
  // Generator indices whose ordered product equals the queried operator.
  std::vector<std::size_t> witness;
};

// Phase-exact membership in the group generated by the code's generators.
Membership stabilizer_group_contains(const StabilizerCode& code, const PauliOperator& p);

// Visits all 2^rank group elements (products of independent generators, in
// Gray-code order). Throws GroupTooLarge when 2^rank > cap.
void for_each_stabilizer(const StabilizerCode& code, std::uint64_t cap,
                         const std::function<void(const PauliOperator&)>& visit);
std::vector<PauliOperator> enumerate_stabilizer_group(const StabilizerCode& code, std::uint64_t cap);

// Dimension of the joint +1 eigenspace of the generators: 2^(n - rank) for a
// commuting, phase-consistent set, and 0 otherwise.
std::uint64_t ground_state_degeneracy(const StabilizerCode& code);

}  // namespace hgc
