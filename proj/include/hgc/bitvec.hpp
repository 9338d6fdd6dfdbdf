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
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hgc {

// Fixed-length bit vector packed into 64-bit words. Bits past size() in the
// last word are always zero, so word-wise popcounts need no masking.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  static constexpr std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

  std::size_t size() const { return size_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool any() const {
    for (Word w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }
  std::size_t popcount() const {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  // Index of the lowest set bit, or size() when empty.
  std::size_t find_first() const;

  // Low 64 bits; only meaningful when size() <= 64.
  Word low_word() const { return words_.empty() ? 0 : words_[0]; }

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

// Parity of popcount(a & b).
bool dot_parity(const BitVector& a, const BitVector& b);

// Concatenation a|b, used for the (x|z) symplectic row layout.
BitVector concat(const BitVector& a, const BitVector& b);

// Reduced row-echelon basis over GF(2) with provenance tracking: every basis
// row remembers which input rows were XOR-ed together to produce it.
class Gf2Echelon {
 public:
  Gf2Echelon() = default;
  // rows all share the same length; provenance has one bit per input row.
  explicit Gf2Echelon(std::span<const BitVector> rows);

  std::size_t rank() const { return basis_.size(); }
  std::size_t row_count() const { return row_count_; }
  // Input rows that became pivots, in input order.
  const std::vector<std::size_t>& independent_rows() const { return independent_rows_; }

  // Returns the set of input rows whose XOR equals target, or nothing when
  // target is outside the row space.
  bool solve(const BitVector& target, BitVector* combination) const;
  bool in_span(const BitVector& target) const { return solve(target, nullptr); }

  // For an input row that is a combination of earlier ones, the combination
  // (over input rows) that reproduces it; empty optional-like flag otherwise.
  const std::vector<BitVector>& dependencies() const { return dependencies_; }
  const std::vector<std::size_t>& dependent_rows() const { return dependent_rows_; }

 private:
  struct Row {
    BitVector bits;
    BitVector provenance;
    std::size_t pivot;
  };
  std::vector<Row> basis_;
  std::vector<std::size_t> independent_rows_;
  std::vector<std::size_t> dependent_rows_;
  std::vector<BitVector> dependencies_;
  std::size_t row_count_ = 0;
};

}  // namespace hgc
