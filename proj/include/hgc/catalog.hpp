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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgc/code.hpp"

namespace hgc {

// Genus-2 unit cell, [[6,2,2]].
StabilizerCode genus2_unit();

// q genus-2 units stacked vertically; n = 4q + 2. q = 1 reproduces
// genus2_unit(), q = 2 the [[10,3,3]] layout. Logical pairs only for q <= 2.
StabilizerCode genus2_vertical_chain(int q);

// Closed-form parameters of the p x p genus-2 grid:
// [[2p(2p+1), 2p^2, floor((p+2)/2)+1]] with 2p(p+1) ancillas.
CodeParameters genus2_grid_parameters(int p);

// Genus-5 unit, 13 data qubits. The reference generator list is kept verbatim
// even though several generator pairs anticommute at qubit 3; the code is
// built with CommutationPolicy::kRecord.
StabilizerCode genus5_unit();

// Two genus-5 units stacked, 24 data qubits, same caveat as genus5_unit().
StabilizerCode genus5_stacked();

// Standard five-qubit planar surface code.
StabilizerCode surface_512();

struct CatalogEntry {
  std::string name;
  CodeParameters expected;
};

std::vector<CatalogEntry> catalog_list();

// Looks up a canonical name: genus2-unit, genus2-chain-<q>, genus5-unit,
// genus5-stacked, surface-512. Throws std::invalid_argument otherwise.
StabilizerCode catalog_code(std::string_view name);

}  // namespace hgc
