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

#include "hgc/catalog.hpp"

#include <charconv>
#include <stdexcept>

#include "hgc/errors.hpp"

namespace hgc {

namespace {

std::vector<PauliOperator> paulis(std::size_t n, std::initializer_list<std::string_view> texts) {
  std::vector<PauliOperator> out;
  out.reserve(texts.size());
  for (std::string_view t : texts) out.push_back(parse_pauli(t, n));
  return out;
}

LogicalPair pair(std::size_t n, std::string_view x, std::string_view z) {
  return {parse_pauli(x, n), parse_pauli(z, n)};
}

std::string term(char letter, int qubit) { return letter + std::to_string(qubit); }

}  // namespace

StabilizerCode genus2_unit() {
  constexpr std::size_t n = 6;
  CodeInfo info;
  info.expected = CodeParameters{6, 2, 2, 4, 1};
  info.genus = 2;
  info.provenance = "pi/3-rhombus fundamental domain, single unit";
  return build_code("genus2-unit", n, paulis(n, {"X1X2X3X4", "X3X4X5X6", "Z1Z3Z5", "Z2Z4Z6"}),
                    {pair(n, "X1X3", "Z1Z4Z6"), pair(n, "X4X6", "Z2Z4Z5")}, std::move(info));
}

StabilizerCode genus2_vertical_chain(int q) {
  if (q < 1) throw std::invalid_argument("chain length q must be >= 1");
  const int n = 4 * q + 2;
  auto x_check = [](int first, int last) {
    std::string s;
    for (int i = first; i <= last; ++i) s += term('X', i);
    return s;
  };
  std::vector<std::string> texts;
  texts.push_back(x_check(1, 4));
  for (int i = 1; i <= q - 1; ++i) texts.push_back(x_check(4 * i - 1, 4 * i + 4));
  texts.push_back(x_check(4 * q - 1, 4 * q + 2));
  for (int i = 1; i <= q; ++i) {
    const int base = 4 * (i - 1);
    texts.push_back(term('Z', base + 1) + term('Z', base + 3) + term('Z', base + 5));
    texts.push_back(term('Z', base + 2) + term('Z', base + 4) + term('Z', base + 6));
  }
  std::vector<PauliOperator> generators;
  for (const std::string& t : texts) generators.push_back(parse_pauli(t, static_cast<std::size_t>(n)));

  const auto un = static_cast<std::size_t>(n);
  std::vector<LogicalPair> pairs;
  CodeInfo info;
  info.genus = 2;
  info.provenance = "genus-2 units stacked vertically, q=" + std::to_string(q);
  if (q == 1) {
    pairs = {pair(un, "X1X3", "Z1Z4Z6"), pair(un, "X4X6", "Z2Z4Z5")};
    info.expected = CodeParameters{6, 2, 2, 4, 1};
  } else if (q == 2) {
    pairs = {pair(un, "X2X6X8", "Z1Z4Z8Z9"), pair(un, "X2X6X10", "Z5Z7Z10"), pair(un, "X4X6X8", "Z2Z3Z6")};
    info.expected = CodeParameters{10, 3, 3, 7, 2};
  }
  return build_code("genus2-chain-" + std::to_string(q), un, std::move(generators), std::move(pairs), std::move(info));
}

CodeParameters genus2_grid_parameters(int p) {
  if (p < 1) throw std::invalid_argument("grid size p must be >= 1");
  CodeParameters params;
  params.n = 2 * p * (2 * p + 1);
  params.ancillas = 2 * p * (p + 1);
  params.k = 2 * p * p;
  params.d = (p + 2) / 2 + 1;
  params.family_index = p;
  return params;
}

StabilizerCode genus5_unit() {
  constexpr std::size_t n = 13;
  CodeInfo info;
  info.expected = CodeParameters{13, 1, 3, 12, std::nullopt};
  info.genus = 5;
  info.provenance = "square torus billiard fundamental domain, single unit; listed generators anticommute at qubit 3";
  info.path_operators = paulis(n, {"X6X8X10X12", "X6X8X4X12", "X7X9X11X13", "X7X9X5X13", "Z8Z6Z7Z9", "Z8Z6Z2Z9",
                                   "Z8Z1Z7Z9", "Z8Z1Z2Z9", "Z10Z12Z13Z11"});
  return build_code("genus5-unit", n,
                    paulis(n, {"X1X2X3X6X7", "X3X4X5X12X13", "X1X6X8", "X2X7X9", "X3X10X12", "X3X11X13",
                               "Z1Z3Z4Z8Z10", "Z2Z3Z5Z9Z11", "Z3Z6Z8", "Z3Z7Z9", "Z4Z10Z12", "Z5Z11Z13"}),
                    {pair(n, "X6X8X4X12", "Z8Z1Z7Z9")}, std::move(info), CommutationPolicy::kRecord);
}

StabilizerCode genus5_stacked() {
  constexpr std::size_t n = 24;
  CodeInfo info;
  info.expected = CodeParameters{24, 1, 4, 23, std::nullopt};
  info.genus = 5;
  info.provenance = "two genus-5 units stacked vertically; listed generators anticommute at qubits 7 and 18";
  return build_code(
      "genus5-stacked", n,
      paulis(n, {"X1X2X3X4X7", "X1X3X5", "X2X4X6", "X7X8X10", "X7X9X11", "X7X10X11X12X13X14X15X18", "X12X14X16",
                 "X13X15X17", "X18X19X21", "X18X20X22", "X18X21X22X23X24", "Z3Z5Z7", "Z4Z6Z7", "Z1Z5Z7Z8Z12",
                 "Z2Z6Z7Z9Z13", "Z8Z10Z12", "Z9Z11Z13", "Z14Z16Z18", "Z15Z17Z18", "Z12Z16Z18Z19Z23",
                 "Z13Z17Z18Z20Z24", "Z19Z21Z23", "Z20Z22Z24"}),
      {pair(n, "X8X12X16X14", "Z8Z10Z15Z17")}, std::move(info), CommutationPolicy::kRecord);
}

StabilizerCode surface_512() {
  constexpr std::size_t n = 5;
  CodeInfo info;
  info.expected = CodeParameters{5, 1, 2, 4, std::nullopt};
  info.genus = 1;
  info.provenance = "standard planar surface-code generators (layout figure only; generator set derived)";
  return build_code("surface-512", n, paulis(n, {"X1X2X3", "X3X4X5", "Z1Z3Z4", "Z2Z3Z5"}),
                    {pair(n, "X2X3X4", "Z1Z3Z5")}, std::move(info));
}

std::vector<CatalogEntry> catalog_list() {
  std::vector<CatalogEntry> out;
  for (const char* name : {"genus2-unit", "genus2-chain-2", "genus5-unit", "genus5-stacked", "surface-512"}) {
    const StabilizerCode code = catalog_code(name);
    out.push_back({code.name(), *code.info().expected});
  }
  return out;
}

StabilizerCode catalog_code(std::string_view name) {
  if (name == "genus2-unit") return genus2_unit();
  if (name == "genus5-unit") return genus5_unit();
  if (name == "genus5-stacked") return genus5_stacked();
  if (name == "surface-512") return surface_512();
  constexpr std::string_view kChain = "genus2-chain-";
  if (name.starts_with(kChain)) {
    const std::string_view digits = name.substr(kChain.size());
    int q = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
    if (ec == std::errc() && end == digits.data() + digits.size() && q >= 1) return genus2_vertical_chain(q);
  }
  throw std::invalid_argument("unknown code '" + std::string(name) + "'");
}

}  // namespace hgc
