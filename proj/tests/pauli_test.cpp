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

#include <random>

#include "gtest/gtest.h"
#include "hgc/errors.hpp"
#include "oracle.hpp"

namespace hgc {
namespace {

using testing::dense_matrix;
using testing::random_pauli;

std::string bits(const BitVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += v.get(i) ? '1' : '0';
  return s;
}

TEST(ParsePauli, GeneratorString) {
  const PauliOperator p = parse_pauli("X1 X2 X3 X4", 6);
  EXPECT_EQ(bits(p.x()), "111100");
  EXPECT_EQ(bits(p.z()), "000000");
  EXPECT_EQ(p.phase(), 0);
  EXPECT_EQ(parse_pauli("X1X2X3X4", 6), p);
}

TEST(ParsePauli, EmptyIsIdentity) {
  const PauliOperator p = parse_pauli("", 3);
  EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(p.phase(), 0);
  EXPECT_EQ(p.num_qubits(), 3u);
}

TEST(ParsePauli, RepeatedIndexMultipliesInOrder) {
  const PauliOperator xz = parse_pauli("X1 Z1", 1);
  EXPECT_EQ(xz.letter(0), 'Y');
  EXPECT_EQ(xz.phase(), 3);  // XZ = -iY
  const PauliOperator zx = parse_pauli("Z1X1", 1);
  EXPECT_EQ(zx.phase(), 1);
}

TEST(ParsePauli, Signs) {
  EXPECT_EQ(parse_pauli("-X1", 2).phase(), 2);
  EXPECT_EQ(parse_pauli("+iZ2", 2).phase(), 1);
  EXPECT_EQ(parse_pauli("-i Y1", 2).phase(), 3);
  EXPECT_EQ(parse_pauli("+ X1", 2).phase(), 0);
}

TEST(ParsePauli, Errors) {
  EXPECT_THROW(parse_pauli("X7", 6), PauliParseError);
  EXPECT_THROW(parse_pauli("X0", 6), PauliParseError);
  EXPECT_THROW(parse_pauli("X", 6), PauliParseError);
  EXPECT_THROW(parse_pauli("Q1", 6), PauliParseError);
  EXPECT_THROW(parse_pauli("X1 -Z2", 6), PauliParseError);
  EXPECT_THROW(parse_pauli("X1", 0), PauliParseError);
  EXPECT_THROW(parse_pauli("X99999999999999999999", 6), PauliParseError);
}

TEST(FormatPauli, CanonicalForm) {
  EXPECT_EQ(format_pauli(parse_pauli("Z3 X1", 3)), "X1Z3");
  EXPECT_EQ(format_pauli(parse_pauli("X1 Z1", 1)), "-iY1");
  EXPECT_EQ(format_pauli(parse_pauli("-X2", 2)), "-X2");
  EXPECT_EQ(format_pauli(PauliOperator(4)), "");
}

TEST(Multiply, GeneratorProductMatchesDenseOracle) {
  const PauliOperator a = parse_pauli("X1X2X3X4", 6);
  const PauliOperator b = parse_pauli("X3X4X5X6", 6);
  const PauliOperator product = a * b;
  EXPECT_EQ(format_pauli(product), "X1X2X5X6");
  EXPECT_EQ(product.phase(), 0);
  EXPECT_TRUE(dense_matrix(product).isApprox(dense_matrix(a) * dense_matrix(b)));
}

TEST(Multiply, SingleQubitTable) {
  const PauliOperator zx = parse_pauli("Z1", 1) * parse_pauli("X1", 1);
  EXPECT_EQ(format_pauli(zx), "+iY1");
  const PauliOperator xz = parse_pauli("X1", 1) * parse_pauli("Z1", 1);
  EXPECT_EQ(format_pauli(xz), "-iY1");
  const PauliOperator yx = parse_pauli("Y1", 1) * parse_pauli("X1", 1);
  EXPECT_EQ(format_pauli(yx), "-iZ1");
}

TEST(Multiply, HermitianSquaresToIdentity) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    PauliOperator p = random_pauli(9, rng, false);
    p.set_phase(static_cast<std::uint8_t>(2 * (i % 2)));
    const PauliOperator sq = p * p;
    EXPECT_TRUE(sq.is_identity());
    EXPECT_EQ(sq.phase(), 0);
  }
}

TEST(Multiply, MismatchedSizesThrow) {
  EXPECT_THROW(PauliOperator(2) * PauliOperator(3), QubitCountMismatch);
  EXPECT_THROW(commutes(PauliOperator(2), PauliOperator(3)), QubitCountMismatch);
}

TEST(Commutes, Examples) {
  EXPECT_TRUE(commutes(parse_pauli("X1X2X3X4", 6), parse_pauli("Z1Z3Z5", 6)));
  EXPECT_FALSE(commutes(parse_pauli("X1X3", 6), parse_pauli("Z1Z4Z6", 6)));
  EXPECT_TRUE(commutes(parse_pauli("Y2Z5", 6), PauliOperator(6)));
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(parse_pauli("X1X2X3X4", 6)), 4u);
  EXPECT_EQ(weight(PauliOperator(6)), 0u);
  EXPECT_EQ(weight(parse_pauli("Z1Z3Z4Z8Z10", 13)), 5u);
  EXPECT_EQ(weight(parse_pauli("Y1", 2)), 1u);
}

// Products, phases and commutation agree with dense 2^n x 2^n matrices.
TEST(PauliProperties, MatchDenseMatricesForSmallN) {
  std::mt19937_64 rng(42);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      const PauliOperator p = random_pauli(n, rng);
      const PauliOperator q = random_pauli(n, rng);
      const Eigen::MatrixXcd mp = dense_matrix(p);
      const Eigen::MatrixXcd mq = dense_matrix(q);
      EXPECT_TRUE(dense_matrix(p * q).isApprox(mp * mq, 1e-12)) << format_pauli(p) << " * " << format_pauli(q);
      const bool dense_commute = (mp * mq - mq * mp).cwiseAbs().maxCoeff() < 1e-12;
      EXPECT_EQ(commutes(p, q), dense_commute);
    }
  }
}

TEST(PauliProperties, AssociativeAndWeightSubadditive) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 70;
    const PauliOperator a = random_pauli(n, rng);
    const PauliOperator b = random_pauli(n, rng);
    const PauliOperator c = random_pauli(n, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_LE(weight(a * b), weight(a) + weight(b));
  }
}

TEST(PauliProperties, FormatParseRoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 30;
    const PauliOperator p = random_pauli(n, rng);
    EXPECT_EQ(parse_pauli(format_pauli(p), n), p) << format_pauli(p);
  }
}

}  // namespace
}  // namespace hgc
