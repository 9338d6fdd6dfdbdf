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

#include "hgc/pauli.hpp"

#include <cctype>
#include <utility>

#include "hgc/errors.hpp"

namespace hgc {

namespace {

void require_same_size(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw QubitCountMismatch("Pauli operators act on " + std::to_string(a.num_qubits()) + " and " +
                             std::to_string(b.num_qubits()) + " qubits");
  }
}

std::size_t and_popcount(const BitVector& a, const BitVector& b) {
  const auto aw = a.words();
  const auto bw = b.words();
  std::size_t total = 0;
  for (std::size_t w = 0; w < aw.size(); ++w) total += static_cast<std::size_t>(std::popcount(aw[w] & bw[w]));
  return total;
}

}  // namespace

PauliOperator::PauliOperator(BitVector x, BitVector z, std::uint8_t phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3U) {
  if (x_.size() != z_.size()) throw QubitCountMismatch("x and z parts differ in length");
}

char PauliOperator::letter(std::size_t qubit) const {
  static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
  return kLetters[(x_.get(qubit) ? 1 : 0) | (z_.get(qubit) ? 2 : 0)];
}

void PauliOperator::set_letter(std::size_t qubit, char letter) {
  x_.set(qubit, letter == 'X' || letter == 'Y');
  z_.set(qubit, letter == 'Z' || letter == 'Y');
}

PauliOperator multiply(const PauliOperator& lhs, const PauliOperator& rhs) {
  require_same_size(lhs, rhs);
  // sigma(x,z) = i^{xz} X^x Z^z; moving Z^{z_l} past X^{x_r} costs (-1)^{z_l x_r},
  // and the result is renormalized by i^{-xz} on the XOR-ed bits.
  BitVector x = lhs.x() ^ rhs.x();
  BitVector z = lhs.z() ^ rhs.z();
  const std::size_t exponent = lhs.phase() + rhs.phase() + and_popcount(lhs.x(), lhs.z()) +
                               and_popcount(rhs.x(), rhs.z()) + 2 * and_popcount(lhs.z(), rhs.x()) +
                               3 * and_popcount(x, z);
  return PauliOperator(std::move(x), std::move(z), static_cast<std::uint8_t>(exponent & 3U));
}

bool commutes(const PauliOperator& lhs, const PauliOperator& rhs) {
  require_same_size(lhs, rhs);
  return dot_parity(lhs.x(), rhs.z()) == dot_parity(lhs.z(), rhs.x());
}

PauliOperator parse_pauli(std::string_view text, std::size_t num_qubits) {
  if (num_qubits == 0) throw PauliParseError("qubit count must be positive", 0);
  PauliOperator result(num_qubits);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  std::uint8_t sign = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '-' ? 2 : 0;
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      sign += 1;
      ++pos;
    }
  }

  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    const std::size_t token_start = pos;
    const char letter = text[pos];
    if (letter != 'X' && letter != 'Y' && letter != 'Z') {
      throw PauliParseError(std::string("expected X, Y or Z, found '") + letter + "'", pos);
    }
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw PauliParseError(std::string("missing qubit index after '") + letter + "'", pos);
    }
    std::size_t index = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (index > num_qubits) break;
      ++pos;
    }
    if (index < 1 || index > num_qubits) {
      throw PauliParseError("qubit index out of range 1.." + std::to_string(num_qubits), token_start);
    }
    PauliOperator factor(num_qubits);
    factor.set_letter(index - 1, letter);
    result = multiply(result, factor);
  }
  result.set_phase(static_cast<std::uint8_t>(result.phase() + sign));
  return result;
}

std::string format_pauli(const PauliOperator& p) {
  static constexpr const char* kSigns[4] = {"", "+i", "-", "-i"};
  std::string out = kSigns[p.phase()];
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    const char c = p.letter(q);
    if (c == 'I') continue;
    out += c;
    out += std::to_string(q + 1);
  }
  return out;
}

}  // namespace hgc
