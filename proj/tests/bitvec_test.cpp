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

#include "hgc/bitvec.hpp"

#include <random>

#include "gtest/gtest.h"

namespace hgc {
namespace {

BitVector from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] == '1');
  return v;
}

TEST(BitVector, SetGetAcrossWordBoundary) {
  BitVector v(130);
  v.set(0);
  v.set(63);
  v.set(64);
  v.set(129);
  EXPECT_EQ(v.popcount(), 4u);
  EXPECT_TRUE(v.get(64));
  EXPECT_FALSE(v.get(65));
  EXPECT_EQ(v.find_first(), 0u);
  v.flip(0);
  EXPECT_EQ(v.find_first(), 63u);
  EXPECT_EQ(BitVector(10).find_first(), 10u);
}

TEST(BitVector, DotParityAndConcat) {
  const BitVector a = from_string("1101");
  const BitVector b = from_string("1011");
  EXPECT_FALSE(dot_parity(a, b));  // overlap at 0 and 3
  EXPECT_TRUE(dot_parity(a, from_string("0100")));
  const BitVector c = concat(a, b);
  EXPECT_EQ(c, from_string("11011011"));
}

TEST(Gf2Echelon, RankSolveAndDependencies) {
  const std::vector<BitVector> rows = {from_string("1100"), from_string("0110"), from_string("1010"),
                                       from_string("0001")};
  const Gf2Echelon echelon(rows);
  EXPECT_EQ(echelon.rank(), 3u);
  EXPECT_EQ(echelon.independent_rows(), (std::vector<std::size_t>{0, 1, 3}));
  ASSERT_EQ(echelon.dependent_rows(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(echelon.dependencies()[0], from_string("1100"));

  BitVector combination;
  ASSERT_TRUE(echelon.solve(from_string("1011"), &combination));
  BitVector rebuilt(4);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (combination.get(r)) rebuilt ^= rows[r];
  }
  EXPECT_EQ(rebuilt, from_string("1011"));
  EXPECT_FALSE(echelon.in_span(from_string("1000")));
}

TEST(Gf2Echelon, SolveWitnessReproducesTargetOnRandomRows) {
  std::mt19937_64 rng(7);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BitVector> rows(12, BitVector(70));
    for (auto& row : rows) {
      for (std::size_t i = 0; i < 70; ++i) row.set(i, coin(rng));
    }
    const Gf2Echelon echelon(rows);
    BitVector target(70);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (coin(rng)) target ^= rows[r];
    }
    BitVector combination;
    ASSERT_TRUE(echelon.solve(target, &combination));
    BitVector rebuilt(70);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (combination.get(r)) rebuilt ^= rows[r];
    }
    EXPECT_EQ(rebuilt, target);
  }
}

}  // namespace
}  // namespace hgc
