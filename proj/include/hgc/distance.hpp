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

#include <cstdint>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "hgc/code.hpp"
#include "hgc/pauli.hpp"
#include "hgc/state.hpp"

namespace hgc {

enum class DistanceMethod { kKnillLaflamme, kSymplectic, kBoth };

std::string to_string(DistanceMethod method);
// "kl", "symplectic" or "both".
DistanceMethod parse_distance_method(const std::string& text);

struct DistanceResult {
  int d = 0;
  DistanceMethod method = DistanceMethod::kSymplectic;
  // Minimum-weight undetectable logical error.
  PauliOperator witness;
  int checked_up_to = 0;
  // 1-based position of the witness in the enumeration order, counted over
  // all weights; deterministic regardless of worker count.
  std::uint64_t errors_examined = 0;
};

struct SearchOptions {
  unsigned workers = 1;
  MemoryBudget budget;
};

// Entries of M differing from c*I by more than this count as a violation.
inline constexpr double kKnillLaflammeTolerance = 1e-10;

// Number of n-qubit Paulis of exact weight w: 3^w C(n, w).
std::uint64_t pauli_count_of_weight(std::size_t n, std::size_t w);

// Walks all weight-w Paulis on n qubits in the canonical order: qubit subsets
// lexicographically, then letters per qubit in X < Z < Y order with the
// lowest qubit most significant. Stops early when visit returns false.
void for_each_pauli_of_weight(std::size_t n, std::size_t w, const std::function<bool(const PauliOperator&)>& visit);

// Knill-Laflamme test against a fixed logical basis: M_ij = <i_L|E|j_L>.
class KnillLaflammeTester {
 public:
  explicit KnillLaflammeTester(const StabilizerCode& code, const MemoryBudget& budget = {});

  Eigen::MatrixXcd matrix(const PauliOperator& error) const;
  bool violates(const PauliOperator& error) const;

  std::size_t dimension() const { return basis_.size(); }

 private:
  std::size_t num_qubits_;
  std::vector<StateVectorXd> basis_;
  std::vector<std::vector<std::uint64_t>> supports_;
};

struct KlCheck {
  bool violates = false;
  Eigen::MatrixXcd matrix;
};

KlCheck kl_violates(const StabilizerCode& code, const PauliOperator& error, const MemoryBudget& budget = {});

// Matrix not of the form c * I within kKnillLaflammeTolerance.
bool is_knill_laflamme_violation(const Eigen::MatrixXcd& m);

// Smallest weight error violating the Knill-Laflamme conditions.
DistanceResult kl_distance(const StabilizerCode& code, int max_weight, const SearchOptions& options = {});

// Smallest weight Pauli commuting with every generator and outside the
// stabilizer group (membership up to phase).
DistanceResult symplectic_distance(const StabilizerCode& code, int max_weight, const SearchOptions& options = {});

// Both routes; throws MethodDisagreement if they differ.
DistanceResult cross_validate_distance(const StabilizerCode& code, int max_weight, const SearchOptions& options = {});

}  // namespace hgc
