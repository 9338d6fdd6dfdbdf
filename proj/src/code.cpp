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

#include "hgc/code.hpp"

#include <bit>

#include "hgc/errors.hpp"

namespace hgc {

namespace {

std::string label(const char* kind, std::size_t index) { return std::string(kind) + "[" + std::to_string(index + 1) + "]"; }

}  // namespace

StabilizerCode StabilizerCode::build(std::string name, std::size_t num_qubits, std::vector<PauliOperator> generators,
                                     std::vector<LogicalPair> logical_pairs, CodeInfo info,
                                     CommutationPolicy policy) {
  if (num_qubits == 0) throw QubitCountMismatch("code '" + name + "' has no qubits");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].num_qubits() != num_qubits) {
      throw QubitCountMismatch("generator " + std::to_string(i + 1) + " acts on " +
                               std::to_string(generators[i].num_qubits()) + " qubits, code has " +
                               std::to_string(num_qubits));
    }
    if (generators[i].phase() != 0) {
      throw PhasefulGenerator("generator " + std::to_string(i + 1) + " (" + format_pauli(generators[i]) +
                              ") must carry phase +1");
    }
  }
  for (std::size_t i = 0; i < logical_pairs.size(); ++i) {
    if (logical_pairs[i].x_bar.num_qubits() != num_qubits || logical_pairs[i].z_bar.num_qubits() != num_qubits) {
      throw QubitCountMismatch("logical pair " + std::to_string(i + 1) + " does not act on " +
                               std::to_string(num_qubits) + " qubits");
    }
  }

  StabilizerCode code;
  code.name_ = std::move(name);
  code.num_qubits_ = num_qubits;
  code.policy_ = policy;

  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (commutes(generators[i], generators[j])) continue;
      if (policy == CommutationPolicy::kEnforce) {
        throw NonCommutingGenerators("generators " + std::to_string(i + 1) + " (" + format_pauli(generators[i]) +
                                         ") and " + std::to_string(j + 1) + " (" + format_pauli(generators[j]) +
                                         ") anticommute",
                                     i, j);
      }
      code.anticommuting_.emplace_back(i, j);
    }
  }

  for (const PauliOperator& path : info.path_operators) {
    if (path.num_qubits() != num_qubits) throw QubitCountMismatch("path operator has wrong qubit count");
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (!commutes(path, generators[g])) {
        throw InvalidLogicalOperator("path operator " + format_pauli(path) + " anticommutes with generator " +
                                     std::to_string(g + 1));
      }
    }
  }

  std::vector<BitVector> rows;
  rows.reserve(generators.size());
  for (const PauliOperator& g : generators) rows.push_back(g.symplectic_row());
  code.echelon_ = Gf2Echelon(rows);
  code.generators_ = std::move(generators);
  code.logical_pairs_ = std::move(logical_pairs);
  code.info_ = std::move(info);

  const auto& dependent = code.echelon_.dependent_rows();
  for (std::size_t d = 0; d < dependent.size(); ++d) {
    if (code.product_of(code.echelon_.dependencies()[d]).phase() != code.generators_[dependent[d]].phase()) {
      code.phases_consistent_ = false;
    }
  }
  return code;
}

bool StabilizerCode::in_span(const PauliOperator& p, BitVector* combination) const {
  if (p.num_qubits() != num_qubits_) throw QubitCountMismatch("operator and code differ in qubit count");
  return echelon_.solve(p.symplectic_row(), combination);
}

PauliOperator StabilizerCode::product_of(const BitVector& combination) const {
  PauliOperator result(num_qubits_);
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (combination.get(g)) result = result * generators_[g];
  }
  return result;
}

bool operator==(const StabilizerCode& a, const StabilizerCode& b) {
  return a.name_ == b.name_ && a.num_qubits_ == b.num_qubits_ && a.generators_ == b.generators_ &&
         a.logical_pairs_ == b.logical_pairs_ && a.info_ == b.info_ && a.policy_ == b.policy_;
}

StabilizerCode build_code(std::string name, std::size_t num_qubits, std::vector<PauliOperator> generators,
                          std::vector<LogicalPair> logical_pairs, CodeInfo info, CommutationPolicy policy) {
  return StabilizerCode::build(std::move(name), num_qubits, std::move(generators), std::move(logical_pairs),
                               std::move(info), policy);
}

bool LogicalValidationReport::pass() const {
  for (const PairCheck& p : pairs) {
    if (!p.pass) return false;
  }
  return true;
}

LogicalValidationReport validate_logical_pairs(const StabilizerCode& code) {
  return validate_logical_pairs(code, code.logical_pairs());
}

LogicalValidationReport validate_logical_pairs(const StabilizerCode& code, const std::vector<LogicalPair>& pairs) {
  LogicalValidationReport report;
  const auto& gens = code.generators();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    PairCheck check;
    check.index = i;
    const LogicalPair& pair = pairs[i];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (!commutes(pair.x_bar, gens[g])) {
        check.failures.push_back(label("xbar", i) + " anticommutes with generator " + std::to_string(g + 1) + " (" +
                                 format_pauli(gens[g]) + ")");
      }
      if (!commutes(pair.z_bar, gens[g])) {
        check.failures.push_back(label("zbar", i) + " anticommutes with generator " + std::to_string(g + 1) + " (" +
                                 format_pauli(gens[g]) + ")");
      }
    }
    if (commutes(pair.x_bar, pair.z_bar)) {
      check.failures.push_back(label("xbar", i) + " commutes with " + label("zbar", i));
    }
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (j == i) continue;
      const LogicalPair& other = pairs[j];
      if (!commutes(pair.x_bar, other.x_bar)) {
        check.failures.push_back(label("xbar", i) + " anticommutes with " + label("xbar", j));
      }
      if (!commutes(pair.x_bar, other.z_bar)) {
        check.failures.push_back(label("xbar", i) + " anticommutes with " + label("zbar", j));
      }
      if (!commutes(pair.z_bar, other.x_bar)) {
        check.failures.push_back(label("zbar", i) + " anticommutes with " + label("xbar", j));
      }
      if (!commutes(pair.z_bar, other.z_bar)) {
        check.failures.push_back(label("zbar", i) + " anticommutes with " + label("zbar", j));
      }
    }
    if (code.in_span(pair.x_bar)) check.failures.push_back(label("xbar", i) + " lies in the stabilizer group");
    if (code.in_span(pair.z_bar)) check.failures.push_back(label("zbar", i) + " lies in the stabilizer group");
    check.pass = check.failures.empty();
    report.pairs.push_back(std::move(check));
  }
  return report;
}

Membership stabilizer_group_contains(const StabilizerCode& code, const PauliOperator& p) {
  BitVector combination;
  Membership result;
  if (!code.in_span(p, &combination)) return result;
  if (code.product_of(combination).phase() != p.phase()) return result;
  result.member = true;
  for (std::size_t g = 0; g < combination.size(); ++g) {
    if (combination.get(g)) result.witness.push_back(g);
  }
  return result;
}

void for_each_stabilizer(const StabilizerCode& code, std::uint64_t cap,
                         const std::function<void(const PauliOperator&)>& visit) {
  const auto& basis = code.independent_generators();
  const std::size_t r = basis.size();
  if (r >= 64 || (std::uint64_t{1} << r) > cap) {
    throw GroupTooLarge("stabilizer group has 2^" + std::to_string(r) + " elements, cap is " + std::to_string(cap));
  }
  PauliOperator current(code.num_qubits());
  visit(current);
  const std::uint64_t count = std::uint64_t{1} << r;
  for (std::uint64_t i = 1; i < count; ++i) {
    current = current * code.generators()[basis[static_cast<std::size_t>(std::countr_zero(i))]];
    visit(current);
  }
}

std::vector<PauliOperator> enumerate_stabilizer_group(const StabilizerCode& code, std::uint64_t cap) {
  std::vector<PauliOperator> out;
  for_each_stabilizer(code, cap, [&](const PauliOperator& p) { out.push_back(p); });
  return out;
}

std::uint64_t ground_state_degeneracy(const StabilizerCode& code) {
  if (!code.generators_commute() || !code.phases_consistent()) return 0;
  const std::size_t k = code.logical_count();
  if (k >= 64) throw GroupTooLarge("degeneracy 2^" + std::to_string(k) + " does not fit in 64 bits");
  return std::uint64_t{1} << k;
}

}  // namespace hgc
