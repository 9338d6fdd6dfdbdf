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

#include <stdexcept>
#include <string>

namespace hgc {

// Base of every error raised by the library. The CLI maps these to exit code 2
// (usage / parse) or 1 (verification), depending on the subclass.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PauliParseError : public Error {
 public:
  PauliParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class QubitCountMismatch : public Error {
 public:
  using Error::Error;
};

class NonCommutingGenerators : public Error {
 public:
  NonCommutingGenerators(const std::string& what, std::size_t first, std::size_t second)
      : Error(what), first_(first), second_(second) {}
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class PhasefulGenerator : public Error {
 public:
  using Error::Error;
};

class InvalidLogicalOperator : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

class MemoryBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class MissingLogicalPairs : public Error {
 public:
  using Error::Error;
};

class NonOrthogonal : public Error {
 public:
  using Error::Error;
};

class NoViolationFound : public Error {
 public:
  explicit NoViolationFound(int max_weight)
      : Error("no logical error found up to weight " + std::to_string(max_weight)),
        max_weight_(max_weight) {}
  int max_weight() const { return max_weight_; }

 private:
  int max_weight_;
};

class MethodDisagreement : public Error {
 public:
  using Error::Error;
};

class DocumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace hgc
