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

#include <cassert>

namespace hgc {

std::size_t BitVector::find_first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  assert(size_ == other.size_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  assert(size_ == other.size_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  assert(size_ == other.size_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

bool dot_parity(const BitVector& a, const BitVector& b) {
  assert(a.size() == b.size());
  const auto aw = a.words();
  const auto bw = b.words();
  BitVector::Word acc = 0;
  for (std::size_t w = 0; w < aw.size(); ++w) acc ^= aw[w] & bw[w];
  return (std::popcount(acc) & 1) != 0;
}

BitVector concat(const BitVector& a, const BitVector& b) {
  BitVector out(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.get(i)) out.set(i);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.get(i)) out.set(a.size() + i);
  }
  return out;
}

Gf2Echelon::Gf2Echelon(std::span<const BitVector> rows) : row_count_(rows.size()) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Row candidate{rows[r], BitVector(rows.size()), 0};
    candidate.provenance.set(r);
    for (const Row& row : basis_) {
      if (candidate.bits.get(row.pivot)) {
        candidate.bits ^= row.bits;
        candidate.provenance ^= row.provenance;
      }
    }
    if (candidate.bits.none()) {
      candidate.provenance.flip(r);
      dependent_rows_.push_back(r);
      dependencies_.push_back(std::move(candidate.provenance));
      continue;
    }
    candidate.pivot = candidate.bits.find_first();
    // Keep the basis fully reduced: the new pivot column is cleared elsewhere.
    for (Row& row : basis_) {
      if (row.bits.get(candidate.pivot)) {
        row.bits ^= candidate.bits;
        row.provenance ^= candidate.provenance;
      }
    }
    basis_.push_back(std::move(candidate));
    independent_rows_.push_back(r);
  }
}

bool Gf2Echelon::solve(const BitVector& target, BitVector* combination) const {
  BitVector residual = target;
  if (combination != nullptr) *combination = BitVector(row_count_);
  for (const Row& row : basis_) {
    if (residual.get(row.pivot)) {
      residual ^= row.bits;
      if (combination != nullptr) *combination ^= row.provenance;
    }
  }
  return residual.none();
}

}  // namespace hgc
