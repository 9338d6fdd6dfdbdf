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

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hgc/code.hpp"
#include "hgc/errors.hpp"
#include "hgc/pauli.hpp"

namespace hgc {

// Dense amplitude vector over the computational basis. Bit q of an index is
// the state of qubit q+1, so qubit 1 is the lowest bit.
template <typename Scalar = double>
using StateVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using StateVectorXd = StateVector<double>;

inline constexpr double kNormTolerance = 1e-12;

// Dense state construction is refused above max_qubits.
struct MemoryBudget {
  std::size_t max_qubits = 16;
};

// A Pauli operator acting on basis indices:
// P|b> = i^(phase + |x&z|) (-1)^|z&b| |b ^ x>.
struct BasisAction {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  unsigned base_phase = 0;

  explicit BasisAction(const PauliOperator& p) {
    if (p.num_qubits() > 63) throw MemoryBudgetExceeded("basis-index action needs n <= 63");
    x = p.x().low_word();
    z = p.z().low_word();
    base_phase = (p.phase() + static_cast<unsigned>(std::popcount(x & z))) & 3U;
  }

  std::uint64_t target(std::uint64_t index) const { return index ^ x; }
  // Exponent of i picked up by |index>.
  unsigned phase_exponent(std::uint64_t index) const {
    return (base_phase + 2U * static_cast<unsigned>(std::popcount(z & index))) & 3U;
  }
};

template <typename Scalar>
std::complex<Scalar> i_power(unsigned exponent) {
  switch (exponent & 3U) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

template <typename Derived>
std::size_t state_qubits(const Eigen::MatrixBase<Derived>& s) {
  const auto size = static_cast<std::uint64_t>(s.size());
  if (size == 0 || !std::has_single_bit(size)) throw std::invalid_argument("state length is not a power of two");
  return static_cast<std::size_t>(std::countr_zero(size));
}

inline void check_budget(std::size_t num_qubits, const MemoryBudget& budget) {
  if (num_qubits > budget.max_qubits) {
    throw MemoryBudgetExceeded("dense state on " + std::to_string(num_qubits) + " qubits exceeds budget of " +
                               std::to_string(budget.max_qubits));
  }
}

template <typename Scalar = double>
StateVector<Scalar> basis_state(std::size_t num_qubits, std::uint64_t index) {
  StateVector<Scalar> s = StateVector<Scalar>::Zero(Eigen::Index{1} << num_qubits);
  s(static_cast<Eigen::Index>(index)) = 1;
  return s;
}

template <typename Derived>
StateVector<typename Derived::RealScalar> apply_pauli(const PauliOperator& p, const Eigen::MatrixBase<Derived>& s) {
  using Scalar = typename Derived::RealScalar;
  if (state_qubits(s) != p.num_qubits()) throw QubitCountMismatch("Pauli and state differ in qubit count");
  const BasisAction action(p);
  StateVector<Scalar> out(s.size());
  for (Eigen::Index b = 0; b < s.size(); ++b) {
    const auto index = static_cast<std::uint64_t>(b);
    out(static_cast<Eigen::Index>(action.target(index))) = i_power<Scalar>(action.phase_exponent(index)) * s(b);
  }
  return out;
}

// <s|P|s>. For Hermitian P the imaginary part must vanish.
template <typename Derived>
std::complex<typename Derived::RealScalar> expectation(const PauliOperator& p, const Eigen::MatrixBase<Derived>& s) {
  const auto value = s.dot(apply_pauli(p, s));
  if (p.is_hermitian() && std::abs(value.imag()) > kNormTolerance * std::max<double>(1.0, s.squaredNorm())) {
    throw std::logic_error("non-real expectation of Hermitian operator " + format_pauli(p));
  }
  return value;
}

// Normalized prod_i (I + P_i) |0...0>, factors applied right to left as written.
template <typename Scalar = double>
StateVector<Scalar> encode_zero(const StabilizerCode& code, const MemoryBudget& budget = {}) {
  check_budget(code.num_qubits(), budget);
  StateVector<Scalar> s = basis_state<Scalar>(code.num_qubits(), 0);
  const auto& gens = code.generators();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) s += apply_pauli(*it, s);
  const Scalar norm = s.norm();
  if (norm < kNormTolerance) throw ZeroVector("projector product annihilates |0...0> for code " + code.name());
  return s / norm;
}

// X1^b1 ... Xk^bk |0>_L for all b in lexicographic order (b1 most significant).
template <typename Scalar = double>
std::vector<StateVector<Scalar>> logical_basis(const StabilizerCode& code, const MemoryBudget& budget = {}) {
  const std::size_t k = code.logical_count();
  const auto& pairs = code.logical_pairs();
  if (pairs.size() != k) {
    throw MissingLogicalPairs("code " + code.name() + " has k=" + std::to_string(k) + " but " +
                              std::to_string(pairs.size()) + " logical pairs");
  }
  if (k >= 20) throw MemoryBudgetExceeded("logical basis of 2^" + std::to_string(k) + " states");
  const StateVector<Scalar> zero = encode_zero<Scalar>(code, budget);
  const std::size_t count = std::size_t{1} << k;
  std::vector<StateVector<Scalar>> basis;
  basis.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    StateVector<Scalar> s = zero;
    for (std::size_t i = k; i-- > 0;) {
      if ((j >> (k - 1 - i)) & 1U) s = apply_pauli(pairs[i].x_bar, s);
    }
    basis.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a; b < count; ++b) {
      const std::complex<Scalar> overlap = basis[a].dot(basis[b]);
      const double expected = a == b ? 1.0 : 0.0;
      if (std::abs(overlap - std::complex<Scalar>(expected)) > 1e-10) {
        throw NonOrthogonal("logical basis states " + std::to_string(a) + " and " + std::to_string(b) +
                            " of code " + code.name() + " are not orthonormal");
      }
    }
  }
  return basis;
}

// cos(theta/2)|0>_L + e^{i phi} sin(theta/2) Xbar|0>_L for the chosen pair.
template <typename Scalar = double>
StateVector<Scalar> logical_state(const StabilizerCode& code, std::size_t pair_index, double theta, double phi,
                                  const MemoryBudget& budget = {}) {
  if (!(theta >= 0.0 && theta <= M_PI)) throw std::invalid_argument("theta must lie in [0, pi]");
  if (!(phi >= 0.0 && phi <= 2.0 * M_PI)) throw std::invalid_argument("phi must lie in [0, 2pi]");
  if (pair_index >= code.logical_pairs().size()) {
    throw MissingLogicalPairs("code " + code.name() + " has no logical pair " + std::to_string(pair_index + 1));
  }
  const StateVector<Scalar> zero = encode_zero<Scalar>(code, budget);
  const StateVector<Scalar> one = apply_pauli(code.logical_pairs()[pair_index].x_bar, zero);
  const std::complex<Scalar> a(static_cast<Scalar>(std::cos(theta / 2)), 0);
  const std::complex<Scalar> b = std::polar(static_cast<Scalar>(std::sin(theta / 2)), static_cast<Scalar>(phi));
  StateVector<Scalar> s = a * zero + b * one;
  return s / s.norm();
}

}  // namespace hgc
