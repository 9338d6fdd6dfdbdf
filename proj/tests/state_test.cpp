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

#include "hgc/state.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "hgc/catalog.hpp"
#include "hgc/errors.hpp"
#include "hgc/io.hpp"
#include "oracle.hpp"

namespace hgc {
namespace {

TEST(ApplyPauli, MatchesDenseMatrices) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const PauliOperator p = testing::random_pauli(n, rng);
      StateVectorXd s = StateVectorXd::Random(Eigen::Index{1} << n);
      const StateVectorXd expected = testing::dense_matrix(p) * s;
      EXPECT_LT((apply_pauli(p, s) - expected).norm(), 1e-12);
    }
  }
}

TEST(ApplyPauli, QubitOneIsLowestBit) {
  const StateVectorXd s = apply_pauli(parse_pauli("X1", 3), basis_state(3, 0));
  EXPECT_EQ(s(1), std::complex<double>(1, 0));
  const StateVectorXd y = apply_pauli(parse_pauli("Y2", 2), basis_state(2, 0));
  EXPECT_EQ(y(2), std::complex<double>(0, 1));
}

TEST(ApplyPauli, RejectsMismatchedState) {
  EXPECT_THROW(apply_pauli(parse_pauli("X1", 3), basis_state(2, 0)), QubitCountMismatch);
  StateVectorXd bad(3);
  EXPECT_THROW(apply_pauli(parse_pauli("X1", 2), bad), std::invalid_argument);
}

TEST(ApplyPauli, FloatScalarWorks) {
  const StateVector<float> s = basis_state<float>(2, 3);
  const StateVector<float> out = apply_pauli(parse_pauli("Z1", 2), s);
  EXPECT_FLOAT_EQ(out(3).real(), -1.0f);
}

TEST(EncodeZero, Genus2UnitAmplitudes) {
  const StateVectorXd s = encode_zero(genus2_unit());
  EXPECT_EQ(format_state_support(s),
            "000000 0.5 0.0\n"
            "001111 0.5 0.0\n"
            "110011 0.5 0.0\n"
            "111100 0.5 0.0\n");
}

TEST(EncodeZero, NoGeneratorsGivesAllZeros) {
  const StabilizerCode code = build_code("free", 1, {});
  const StateVectorXd s = encode_zero(code);
  EXPECT_EQ(s(0), std::complex<double>(1, 0));
  EXPECT_EQ(s(1), std::complex<double>(0, 0));
}

TEST(EncodeZero, Genus5UnitSupport) {
  const StateVectorXd s = encode_zero(genus5_unit());
  int nonzero = 0;
  for (Eigen::Index b = 0; b < s.size(); ++b) {
    if (std::abs(s(b)) > 1e-12) {
      ++nonzero;
      EXPECT_NEAR(std::abs(s(b)), 0.125, 1e-12);
    }
  }
  EXPECT_EQ(nonzero, 64);
}

TEST(EncodeZero, BudgetAndAnnihilation) {
  EXPECT_THROW(encode_zero(genus5_stacked(), MemoryBudget{16}), MemoryBudgetExceeded);
  // X1X2 * Z1Z2 = -Y1Y2, so the projector product is zero.
  EXPECT_THROW(encode_zero(build_code("neg", 2, {parse_pauli("X1X2", 2), parse_pauli("Z1Z2", 2), parse_pauli("Y1Y2", 2)})),
               ZeroVector);
}

TEST(EncodeZero, FixedByEveryGeneratorOfCommutingCodes) {
  for (const char* name : {"genus2-unit", "genus2-chain-2", "surface-512", "genus2-chain-3"}) {
    const StabilizerCode code = catalog_code(name);
    const StateVectorXd s = encode_zero(code);
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    for (const auto& g : code.generators()) EXPECT_LT((apply_pauli(g, s) - s).norm(), 1e-12) << name;
    for (const auto& pair : code.logical_pairs()) {
      EXPECT_NEAR(expectation(pair.z_bar, s).real(), 1.0, 1e-12) << name;
    }
  }
}

TEST(LogicalBasis, OrthonormalAndLabelled) {
  const StabilizerCode code = genus2_unit();
  const auto basis = logical_basis(code);
  ASSERT_EQ(basis.size(), 4u);
  // Index 2 = |10>: first pair flipped.
  EXPECT_NEAR(expectation(code.logical_pairs()[0].z_bar, basis[2]).real(), -1.0, 1e-12);
  EXPECT_NEAR(expectation(code.logical_pairs()[1].z_bar, basis[2]).real(), 1.0, 1e-12);
  EXPECT_NEAR(expectation(code.logical_pairs()[1].z_bar, basis[1]).real(), -1.0, 1e-12);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      EXPECT_NEAR(std::abs(basis[a].dot(basis[b])), a == b ? 1.0 : 0.0, 1e-12);
    }
  }
}

TEST(LogicalBasis, RequiresOnePairPerLogicalQubit) {
  const StabilizerCode code = build_code("bare", 2, {parse_pauli("Z1Z2", 2)});
  EXPECT_THROW(logical_basis(code), MissingLogicalPairs);
}

TEST(LogicalBasis, RejectsNonOrthogonalLabels) {
  // X1X2 is a stabilizer, so |1>_L coincides with |0>_L.
  const StabilizerCode code =
      build_code("dup", 2, {parse_pauli("X1X2", 2)}, {{parse_pauli("X1X2", 2), parse_pauli("Z1Z2", 2)}}, {},
                 CommutationPolicy::kRecord);
  EXPECT_THROW(logical_basis(code), NonOrthogonal);
}

TEST(LogicalState, Examples) {
  const StabilizerCode code = genus2_unit();
  const StateVectorXd zero = encode_zero(code);
  EXPECT_LT((logical_state(code, 0, 0.0, 0.0) - zero).norm(), 1e-12);
  const StateVectorXd plus = logical_state(code, 0, M_PI / 2, 0.0);
  EXPECT_NEAR(expectation(code.logical_pairs()[0].x_bar, plus).real(), 1.0, 1e-12);
  EXPECT_NEAR(expectation(code.logical_pairs()[0].z_bar, plus).real(), 0.0, 1e-12);
  EXPECT_THROW(logical_state(code, 0, -0.1, 0.0), std::invalid_argument);
  EXPECT_THROW(logical_state(code, 0, 0.0, 7.0), std::invalid_argument);
  EXPECT_THROW(logical_state(code, 2, 0.0, 0.0), MissingLogicalPairs);
}

TEST(LogicalState, BlochSphereExpectations) {
  const StabilizerCode code = genus2_unit();
  const auto& pair = code.logical_pairs()[1];
  PauliOperator y_bar = pair.x_bar * pair.z_bar;
  y_bar.set_phase(static_cast<std::uint8_t>(y_bar.phase() + 1));
  for (double theta : {0.0, 0.4, 1.3, M_PI}) {
    for (double phi : {0.0, 1.0, 2.5, 5.0}) {
      const StateVectorXd s = logical_state(code, 1, theta, phi);
      EXPECT_NEAR(expectation(pair.x_bar, s).real(), std::sin(theta) * std::cos(phi), 1e-12);
      EXPECT_NEAR(expectation(y_bar, s).real(), std::sin(theta) * std::sin(phi), 1e-12);
      EXPECT_NEAR(expectation(pair.z_bar, s).real(), std::cos(theta), 1e-12);
    }
  }
}

TEST(Expectation, InvariantsOnRandomStates) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    StateVectorXd s = StateVectorXd::Random(16);
    s.normalize();
    PauliOperator p = testing::random_pauli(4, rng, false);
    const auto value = expectation(p, s);
    EXPECT_LE(std::abs(value.real()), 1.0 + 1e-12);
    EXPECT_NEAR(value.imag(), 0.0, 1e-12);
    PauliOperator negated = p;
    negated.set_phase(2);
    EXPECT_NEAR(expectation(negated, s).real(), -value.real(), 1e-12);
  }
}

}  // namespace
}  // namespace hgc
