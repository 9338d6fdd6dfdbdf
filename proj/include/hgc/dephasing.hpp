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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hgc/code.hpp"
#include "hgc/state.hpp"

namespace hgc {

enum class DephasingModel {
  kGlobal,  // one fluctuating field B(t) on every data qubit
  kLocal,   // independent B_i(t) per qubit
};

std::string to_string(DephasingModel model);
DephasingModel parse_dephasing_model(const std::string& text);

struct DephasingSpec {
  DephasingModel model = DephasingModel::kGlobal;
  double gamma = 0.0;
  double t = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  std::size_t pair_index = 0;

  // Throws std::invalid_argument on gamma < 0, t < 0, theta outside [0, pi]
  // or phi outside [0, 2pi].
  void validate() const;
};

// Density matrix restricted to the basis states populated by |0>_L and
// Xbar|0>_L for the chosen pair. support is sorted ascending.
struct SupportDensityMatrix {
  std::size_t num_qubits = 0;
  std::vector<std::uint64_t> support;
  Eigen::MatrixXcd entries;

  std::complex<double> trace() const { return entries.trace(); }
  // Tr[rho P]; basis states leaving the support contribute nothing.
  std::complex<double> expectation(const PauliOperator& p) const;
};

struct BlochVector {
  double r_x = 0.0;
  double r_y = 0.0;
  double r_z = 0.0;

  double operator[](std::size_t i) const { return i == 0 ? r_x : (i == 1 ? r_y : r_z); }
  double squared_norm() const { return r_x * r_x + r_y * r_y + r_z * r_z; }
};

// <exp(+-i int_0^t B)> = e^{-gamma t / 2} for Gaussian delta-correlated noise.
double decoherence_factor(double gamma, double t);

// m' = 2 n' - N with n' the number of qubits in |0>.
int magnetization(std::uint64_t basis_index, std::size_t num_qubits);
// Bitstring printed qubit-1-first, e.g. "001111".
int magnetization(std::string_view bitstring);

// Pure logical state with its coherences damped by the Gaussian average:
// global: exp(-gamma t (m'_b - m'_b')^2 / 8), local: exp(-gamma t h(b,b') / 2).
SupportDensityMatrix dephase(const StabilizerCode& code, const DephasingSpec& spec, const MemoryBudget& budget = {});

// (Tr[rho' Xbar], Tr[rho' Ybar], Tr[rho' Zbar]) with Ybar = i Xbar Zbar.
BlochVector bloch_coordinates(const StabilizerCode& code, const DephasingSpec& spec, const MemoryBudget& budget = {});

// Reference closed-form Bloch coordinates for the genus-5 unit under global
// dephasing, evaluated verbatim (real parts).
BlochVector genus5_closed_form(double theta, double phi, double gamma, double t);

struct ClosedFormPoint {
  double gamma_t = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  BlochVector oracle;
  BlochVector closed_form;
  BlochVector abs_dev;
};

struct ComponentMaximum {
  double value = 0.0;
  std::size_t point = 0;
};

struct DeviationReport {
  DephasingModel model = DephasingModel::kGlobal;
  std::vector<double> gamma_t;
  std::vector<double> theta;
  std::vector<double> phi;
  std::vector<ClosedFormPoint> points;
  std::array<ComponentMaximum, 3> max_dev;
};

// Tabulates bloch_coordinates(genus5_unit) against genus5_closed_form over
// the grid (gamma = gamma_t, t = 1). Reports deviations, never asserts them.
DeviationReport compare_closed_form(const std::vector<double>& gamma_t, const std::vector<double>& theta,
                                    const std::vector<double>& phi, DephasingModel model = DephasingModel::kGlobal);

std::string render_table(const DeviationReport& report);

}  // namespace hgc
