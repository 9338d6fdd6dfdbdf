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

#include "hgc/dephasing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>

#include "hgc/catalog.hpp"

namespace hgc {

namespace {

constexpr double kImaginaryResidue = 1e-10;

double real_or_throw(std::complex<double> value, const char* component) {
  if (std::abs(value.imag()) > kImaginaryResidue) {
    throw std::logic_error(std::string("non-real Bloch component ") + component);
  }
  return value.real();
}

}  // namespace

std::string to_string(DephasingModel model) { return model == DephasingModel::kGlobal ? "global" : "local"; }

DephasingModel parse_dephasing_model(const std::string& text) {
  if (text == "global") return DephasingModel::kGlobal;
  if (text == "local") return DephasingModel::kLocal;
  throw std::invalid_argument("unknown dephasing model '" + text + "'");
}

void DephasingSpec::validate() const {
  if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be non-negative");
  if (!(t >= 0.0)) throw std::invalid_argument("t must be non-negative");
  if (!(theta >= 0.0 && theta <= M_PI)) throw std::invalid_argument("theta must lie in [0, pi]");
  if (!(phi >= 0.0 && phi <= 2.0 * M_PI)) throw std::invalid_argument("phi must lie in [0, 2pi]");
}

std::complex<double> SupportDensityMatrix::expectation(const PauliOperator& p) const {
  const BasisAction action(p);
  std::complex<double> sum = 0;
  for (std::size_t col = 0; col < support.size(); ++col) {
    const std::uint64_t b = support[col];
    const auto it = std::lower_bound(support.begin(), support.end(), action.target(b));
    if (it == support.end() || *it != action.target(b)) continue;
    const auto row = static_cast<Eigen::Index>(it - support.begin());
    sum += entries(static_cast<Eigen::Index>(col), row) * i_power<double>(action.phase_exponent(b));
  }
  return sum;
}

double decoherence_factor(double gamma, double t) {
  if (gamma < 0.0 || t < 0.0) throw std::invalid_argument("gamma and t must be non-negative");
  return std::exp(-gamma * t / 2.0);
}

int magnetization(std::uint64_t basis_index, std::size_t num_qubits) {
  const int ones = std::popcount(basis_index);
  const int zeros = static_cast<int>(num_qubits) - ones;
  return 2 * zeros - static_cast<int>(num_qubits);
}

int magnetization(std::string_view bitstring) {
  int zeros = 0;
  for (char c : bitstring) {
    if (c == '0') {
      ++zeros;
    } else if (c != '1') {
      throw std::invalid_argument("bitstring may only contain 0 and 1");
    }
  }
  return 2 * zeros - static_cast<int>(bitstring.size());
}

SupportDensityMatrix dephase(const StabilizerCode& code, const DephasingSpec& spec, const MemoryBudget& budget) {
  spec.validate();
  const StateVectorXd psi = logical_state<double>(code, spec.pair_index, spec.theta, spec.phi, budget);
  const StateVectorXd zero = encode_zero<double>(code, budget);
  const StateVectorXd one = apply_pauli(code.logical_pairs()[spec.pair_index].x_bar, zero);

  SupportDensityMatrix rho;
  rho.num_qubits = code.num_qubits();
  for (Eigen::Index b = 0; b < psi.size(); ++b) {
    if (std::abs(zero(b)) > 0.0 || std::abs(one(b)) > 0.0) rho.support.push_back(static_cast<std::uint64_t>(b));
  }
  const auto dim = static_cast<Eigen::Index>(rho.support.size());
  Eigen::VectorXcd amplitudes(dim);
  for (Eigen::Index i = 0; i < dim; ++i) amplitudes(i) = psi(static_cast<Eigen::Index>(rho.support[i]));
  rho.entries = amplitudes * amplitudes.adjoint();

  const double gt = spec.gamma * spec.t;
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (i == j) continue;
      const std::uint64_t a = rho.support[static_cast<std::size_t>(i)];
      const std::uint64_t b = rho.support[static_cast<std::size_t>(j)];
      double factor = 1.0;
      if (spec.model == DephasingModel::kGlobal) {
        const double dm = magnetization(a, rho.num_qubits) - magnetization(b, rho.num_qubits);
        factor = std::exp(-gt * dm * dm / 8.0);
      } else {
        factor = std::exp(-gt * std::popcount(a ^ b) / 2.0);
      }
      rho.entries(i, j) *= factor;
    }
  }
  return rho;
}

BlochVector bloch_coordinates(const StabilizerCode& code, const DephasingSpec& spec, const MemoryBudget& budget) {
  const SupportDensityMatrix rho = dephase(code, spec, budget);
  const LogicalPair& pair = code.logical_pairs()[spec.pair_index];
  PauliOperator y_bar = pair.x_bar * pair.z_bar;
  y_bar.set_phase(static_cast<std::uint8_t>(y_bar.phase() + 1));
  return {real_or_throw(rho.expectation(pair.x_bar), "R_X"), real_or_throw(rho.expectation(y_bar), "R_Y"),
          real_or_throw(rho.expectation(pair.z_bar), "R_Z")};
}

BlochVector genus5_closed_form(double theta, double phi, double gamma, double t) {
  using namespace std::complex_literals;
  const double gt = gamma * t;
  const std::complex<double> prefactor =
      std::exp(-(2.0 * gt + 1i * phi)) * std::pow(1.0 + std::exp(-gt), 4) * std::sin(theta);
  const std::complex<double> r_x = (1.0 / 32.0) * prefactor * (1.0 + std::exp(2i * phi));
  const std::complex<double> r_y = (1i / 32.0) * prefactor * (-1.0 + std::exp(2i * phi));
  return {r_x.real(), r_y.real(), std::cos(theta)};
}

DeviationReport compare_closed_form(const std::vector<double>& gamma_t, const std::vector<double>& theta,
                                    const std::vector<double>& phi, DephasingModel model) {
  const StabilizerCode code = genus5_unit();
  DeviationReport report;
  report.model = model;
  report.gamma_t = gamma_t;
  report.theta = theta;
  report.phi = phi;
  for (double gt : gamma_t) {
    for (double th : theta) {
      for (double ph : phi) {
        ClosedFormPoint point;
        point.gamma_t = gt;
        point.theta = th;
        point.phi = ph;
        point.oracle = bloch_coordinates(code, DephasingSpec{model, gt, 1.0, th, ph, 0});
        point.closed_form = genus5_closed_form(th, ph, gt, 1.0);
        point.abs_dev = {std::abs(point.oracle.r_x - point.closed_form.r_x),
                         std::abs(point.oracle.r_y - point.closed_form.r_y),
                         std::abs(point.oracle.r_z - point.closed_form.r_z)};
        for (std::size_t c = 0; c < 3; ++c) {
          if (point.abs_dev[c] > report.max_dev[c].value) report.max_dev[c] = {point.abs_dev[c], report.points.size()};
        }
        report.points.push_back(point);
      }
    }
  }
  return report;
}

std::string render_table(const DeviationReport& report) {
  std::string out = "closed-form comparison (genus5-unit, " + to_string(report.model) + " dephasing)\n";
  char line[256];
  std::snprintf(line, sizeof line, "%8s %8s %8s | %10s %10s %10s | %10s %10s %10s | %10s %10s %10s\n", "gamma*t",
                "theta", "phi", "oracle_x", "oracle_y", "oracle_z", "closed_x", "closed_y", "closed_z", "dev_x",
                "dev_y", "dev_z");
  out += line;
  for (const ClosedFormPoint& p : report.points) {
    std::snprintf(line, sizeof line,
                  "%8.4f %8.4f %8.4f | %10.6f %10.6f %10.6f | %10.6f %10.6f %10.6f | %10.3e %10.3e %10.3e\n",
                  p.gamma_t, p.theta, p.phi, p.oracle.r_x, p.oracle.r_y, p.oracle.r_z, p.closed_form.r_x,
                  p.closed_form.r_y, p.closed_form.r_z, p.abs_dev.r_x, p.abs_dev.r_y, p.abs_dev.r_z);
    out += line;
  }
  static constexpr const char* kNames[3] = {"R_X", "R_Y", "R_Z"};
  for (std::size_t c = 0; c < 3; ++c) {
    const ComponentMaximum& m = report.max_dev[c];
    if (report.points.empty()) break;
    const ClosedFormPoint& p = report.points[m.point];
    std::snprintf(line, sizeof line, "max |dev| %s = %.6e at gamma*t=%.4f theta=%.4f phi=%.4f\n", kNames[c], m.value,
                  p.gamma_t, p.theta, p.phi);
    out += line;
  }
  return out;
}

}  // namespace hgc
