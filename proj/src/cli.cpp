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

#include "hgc/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hgc/catalog.hpp"
#include "hgc/dephasing.hpp"
#include "hgc/distance.hpp"
#include "hgc/errors.hpp"
#include "hgc/io.hpp"
#include "hgc/state.hpp"

namespace hgc {

namespace {

struct CodeSource {
  std::string name;
  std::string file;
};

struct CommonOptions {
  CodeSource source;
  bool json = false;
  std::size_t max_qubits = MemoryBudget{}.max_qubits;
};

void add_source_options(CLI::App& cmd, CommonOptions& common) {
  auto* code = cmd.add_option("--code", common.source.name, "catalog code name");
  auto* file = cmd.add_option("--file", common.source.file, "code definition document (JSON)");
  code->excludes(file);
  file->excludes(code);
  cmd.add_flag("--json", common.json, "emit the machine-readable report on stdout");
  cmd.add_option("--max-qubits", common.max_qubits, "dense state-vector budget in qubits")->capture_default_str();
}

StabilizerCode load_code(const CodeSource& source) {
  if (!source.name.empty()) return catalog_code(source.name);
  if (!source.file.empty()) {
    std::ifstream in(source.file);
    if (!in) throw DocumentError("cannot open " + source.file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return import_code(buffer.str());
  }
  throw CLI::ValidationError("one of --code or --file is required");
}

int cmd_catalog(bool json, std::ostream& out) {
  const auto entries = catalog_list();
  if (json) {
    Json list = Json::array();
    for (const auto& e : entries) {
      Json item{{"name", e.name}, {"n", e.expected.n}, {"k", e.expected.k}, {"d", e.expected.d}};
      if (e.expected.ancillas) item["m"] = *e.expected.ancillas;
      list.push_back(item);
    }
    out << dump_json(Json{{"codes", list}, {"tool_version", kToolVersion}}) << "\n";
    return kExitOk;
  }
  out << "name              [[n,k,d]]\n";
  for (const auto& e : entries) {
    std::string name = e.name;
    name.resize(std::max<std::size_t>(name.size(), 17), ' ');
    out << name << " [[" << e.expected.n << "," << e.expected.k << "," << e.expected.d << "]]\n";
  }
  return kExitOk;
}

int cmd_verify(const CommonOptions& common, std::ostream& out) {
  const StabilizerCode code = load_code(common.source);
  const VerificationReport report = verify_code(code);
  if (common.json) {
    out << dump_json(to_json(report)) << "\n";
  } else {
    out << render_text(report);
  }
  return report.pass() ? kExitOk : kExitVerificationFailed;
}

int cmd_encode(const CommonOptions& common, std::ostream& out) {
  const StabilizerCode code = load_code(common.source);
  const StateVectorXd zero = encode_zero<double>(code, MemoryBudget{common.max_qubits});
  if (common.json) {
    Json amplitudes = Json::array();
    std::istringstream lines(format_state_support(zero));
    std::string bits;
    std::string re;
    std::string im;
    while (lines >> bits >> re >> im) {
      amplitudes.push_back(Json{{"basis", bits}, {"re", std::stod(re)}, {"im", std::stod(im)}});
    }
    out << dump_json(Json{{"code", code.name()}, {"n", code.num_qubits()}, {"amplitudes", amplitudes},
                          {"tool_version", kToolVersion}})
        << "\n";
  } else {
    out << format_state_support(zero);
  }
  return kExitOk;
}

int cmd_distance(const CommonOptions& common, const std::string& method_text, std::optional<int> max_weight,
                 unsigned workers, bool strict, std::ostream& out, std::ostream& err) {
  const StabilizerCode code = load_code(common.source);
  const DistanceMethod method = parse_distance_method(method_text);
  const int bound = max_weight.value_or(static_cast<int>(code.num_qubits()));
  SearchOptions options;
  options.workers = workers;
  options.budget.max_qubits = common.max_qubits;

  DistanceResult result;
  try {
    switch (method) {
      case DistanceMethod::kKnillLaflamme: result = kl_distance(code, bound, options); break;
      case DistanceMethod::kSymplectic: result = symplectic_distance(code, bound, options); break;
      case DistanceMethod::kBoth: result = cross_validate_distance(code, bound, options); break;
    }
  } catch (const NoViolationFound& e) {
    if (common.json) {
      std::uint64_t total = 0;
      for (int w = 1; w <= bound; ++w) total += pauli_count_of_weight(code.num_qubits(), static_cast<std::size_t>(w));
      out << dump_json(Json{{"code", code.name()},
                            {"method", to_string(method)},
                            {"d", nullptr},
                            {"witness", nullptr},
                            {"checked_up_to", bound},
                            {"errors_examined", total},
                            {"agrees_with_expected", false},
                            {"tool_version", kToolVersion}})
          << "\n";
    } else {
      out << code.name() << ": " << e.what() << "\n";
    }
    return kExitVerificationFailed;
  } catch (const MethodDisagreement& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }

  const Json report = distance_report(code, result);
  if (common.json) {
    out << dump_json(report) << "\n";
  } else {
    out << code.name() << ": d=" << result.d << " (" << to_string(result.method) << "), witness "
        << format_pauli(result.witness) << ", " << result.errors_examined << " errors examined\n";
    if (code.info().expected) {
      out << "  expected d=" << code.info().expected->d << ": "
          << (report["agrees_with_expected"].get<bool>() ? "agrees" : "DISAGREES") << "\n";
    }
  }
  if (strict && !report["agrees_with_expected"].get<bool>()) return kExitVerificationFailed;
  return kExitOk;
}

struct BlochOptions {
  std::string model = "global";
  double gamma = 0.0;
  double time = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  std::size_t pair = 1;
  bool compare = false;
};

int cmd_bloch(const CommonOptions& common, const BlochOptions& opts, std::ostream& out) {
  const StabilizerCode code = load_code(common.source);
  if (opts.pair < 1) throw std::invalid_argument("--pair is 1-based");
  DephasingSpec spec{parse_dephasing_model(opts.model), opts.gamma, opts.time, opts.theta, opts.phi, opts.pair - 1};
  const BlochVector r = bloch_coordinates(code, spec, MemoryBudget{common.max_qubits});

  std::vector<DeviationReport> comparisons;
  if (opts.compare) {
    const std::vector<double> gamma_t{0.0, 0.1, 0.5, 1.0};
    const std::vector<double> theta{M_PI / 4, M_PI / 2};
    const std::vector<double> phi{0.0, M_PI / 3, M_PI / 2};
    for (DephasingModel model : {DephasingModel::kGlobal, DephasingModel::kLocal}) {
      comparisons.push_back(compare_closed_form(gamma_t, theta, phi, model));
    }
  }

  if (common.json) {
    Json doc = bloch_report(code, spec, r);
    if (opts.compare) {
      Json list = Json::array();
      for (const auto& c : comparisons) list.push_back(deviation_report(c));
      doc["closed_form_comparison"] = list;
    }
    out << dump_json(doc) << "\n";
  } else {
    out << code.name() << " (" << opts.model << ", gamma=" << format_double(opts.gamma)
        << ", t=" << format_double(opts.time) << "): R_X=" << format_double(r.r_x) << " R_Y=" << format_double(r.r_y)
        << " R_Z=" << format_double(r.r_z) << "\n";
    for (const auto& c : comparisons) out << "\n" << render_table(c);
  }
  return kExitOk;
}

int cmd_export(const CommonOptions& common, const std::string& path, std::ostream& out) {
  const StabilizerCode code = load_code(common.source);
  const std::string text = export_code(code);
  if (path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(path);
  if (!file) throw DocumentError("cannot write " + path);
  file << text;
  if (!common.json) out << "wrote " << path << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stabilizer-code workbench for higher-genus surface codes", "hgcodes"};
  app.require_subcommand(1);

  CommonOptions common;
  bool catalog_json = false;
  auto* catalog = app.add_subcommand("catalog", "list built-in codes");
  catalog->add_flag("--json", catalog_json, "emit JSON");

  auto* verify = app.add_subcommand("verify", "structural checks: commutation, rank, k, logical pairs");
  add_source_options(*verify, common);

  auto* encode = app.add_subcommand("encode", "dump the support of |0>_L");
  add_source_options(*encode, common);

  std::string method = "both";
  std::optional<int> max_weight;
  unsigned workers = 1;
  bool strict = false;
  auto* distance = app.add_subcommand("distance", "code distance by exhaustive search");
  add_source_options(*distance, common);
  distance->add_option("--method", method, "kl | symplectic | both")
      ->check(CLI::IsMember({"kl", "symplectic", "both"}))
      ->capture_default_str();
  distance->add_option("--max-weight", max_weight, "largest error weight to examine (default n)");
  distance->add_option("--workers", workers, "search threads")->check(CLI::PositiveNumber)->capture_default_str();
  distance->add_flag("--strict", strict, "exit 1 when d differs from the expected value");

  BlochOptions bloch_opts;
  auto* bloch = app.add_subcommand("bloch", "logical Bloch coordinates under dephasing");
  add_source_options(*bloch, common);
  bloch->add_option("--model", bloch_opts.model, "global | local")
      ->check(CLI::IsMember({"global", "local"}))
      ->capture_default_str();
  bloch->add_option("--gamma", bloch_opts.gamma, "noise strength")->capture_default_str();
  bloch->add_option("--time", bloch_opts.time, "elapsed time")->capture_default_str();
  bloch->add_option("--theta", bloch_opts.theta, "polar angle in radians")->capture_default_str();
  bloch->add_option("--phi", bloch_opts.phi, "azimuth in radians")->capture_default_str();
  bloch->add_option("--pair", bloch_opts.pair, "logical pair (1-based)")->capture_default_str();
  bloch->add_flag("--compare-closed-form", bloch_opts.compare, "tabulate against the genus-5 closed form");

  std::string out_path;
  auto* exporter = app.add_subcommand("export", "write the code definition document");
  add_source_options(*exporter, common);
  exporter->add_option("--out", out_path, "output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(catalog_json, out);
    if (verify->parsed()) return cmd_verify(common, out);
    if (encode->parsed()) return cmd_encode(common, out);
    if (distance->parsed()) return cmd_distance(common, method, max_weight, workers, strict, out, err);
    if (bloch->parsed()) return cmd_bloch(common, bloch_opts, out);
    if (exporter->parsed()) return cmd_export(common, out_path, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonCommutingGenerators& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const MemoryBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hgc
