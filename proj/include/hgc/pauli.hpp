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
#include <string>
#include <string_view>

#include "hgc/bitvec.hpp"

namespace hgc {

// n-qubit Pauli operator i^phase * (sigma_1 (x) ... (x) sigma_n) in binary
// symplectic form. Qubit q carries X for (x,z)=(1,0), Z for (0,1) and the
// Hermitian Y = iXZ for (1,1). Qubits are 0-based internally and 1-based in
// text.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t num_qubits) : x_(num_qubits), z_(num_qubits) {}
  PauliOperator(BitVector x, BitVector z, std::uint8_t phase = 0);

  static PauliOperator identity(std::size_t num_qubits) { return PauliOperator(num_qubits); }

  std::size_t num_qubits() const { return x_.size(); }
  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }
  // Exponent of i, in {0,1,2,3}.
  std::uint8_t phase() const { return phase_; }
  bool is_hermitian() const { return (phase_ & 1U) == 0; }
  bool is_identity() const { return x_.none() && z_.none(); }

  // 'I', 'X', 'Y' or 'Z'.
  char letter(std::size_t qubit) const;
  void set_letter(std::size_t qubit, char letter);
  void set_phase(std::uint8_t phase) { phase_ = phase & 3U; }

  // (x|z) row of length 2n.
  BitVector symplectic_row() const { return concat(x_, z_); }

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  BitVector x_;
  BitVector z_;
  std::uint8_t phase_ = 0;
};

// Grammar: sign? term* with sign in {+, -, +i, -i} and term := [XYZ] digit+,
// separated by optional whitespace. Repeated qubits multiply left to right.
PauliOperator parse_pauli(std::string_view text, std::size_t num_qubits);

// Canonical text: factors in qubit order, sign prefix only when phase != +1.
std::string format_pauli(const PauliOperator& p);

PauliOperator multiply(const PauliOperator& lhs, const PauliOperator& rhs);
inline PauliOperator operator*(const PauliOperator& lhs, const PauliOperator& rhs) { return multiply(lhs, rhs); }

bool commutes(const PauliOperator& lhs, const PauliOperator& rhs);

inline std::size_t weight(const PauliOperator& p) { return (p.x() | p.z()).popcount(); }

}  // namespace hgc
