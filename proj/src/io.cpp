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

#include "hgc/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hgc/errors.hpp"

namespace hgc {

namespace {

void dump_into(const Json& value, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* newline = indent > 0 ? "\n" : "";
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += newline;
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) {
          out += ",";
          out += newline;
        }
        first = false;
        out += pad;
        out += Json(key).dump();
        out += indent > 0 ? ": " : ":";
        dump_into(item, indent, depth + 1, out);
      }
      out += newline;
      out += close_pad;
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += newline;
      bool first = true;
      for (const auto& item : value) {
        if (!first) {
          out += ",";
          out += newline;
        }
        first = false;
        out += pad;
        dump_into(item, indent, depth + 1, out);
      }
      out += newline;
      out += close_pad;
      out += "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(value.get<double>());
      return;
    default:
      out += value.dump();
      return;
  }
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

PauliOperator parse_field(const Json& value, const std::string& field, std::size_t n) {
  if (!value.is_string()) throw DocumentError(field + ": expected a Pauli string");
  try {
    return parse_pauli(value.get<std::string>(), n);
  } catch (const PauliParseError& e) {
    throw DocumentError(field + " \"" + value.get<std::string>() + "\": " + e.what());
  }
}

int get_int(const Json& value, const std::string& field) {
  if (!value.is_number_integer()) throw DocumentError(field + ": expected an integer");
  return value.get<int>();
}

Json bloch_json(const BlochVector& r) { return Json{{"r_x", r.r_x}, {"r_y", r.r_y}, {"r_z", r.r_z}}; }

}  // namespace

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  std::string s = buffer;
  if (std::isfinite(value) && s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string dump_json(const Json& value, int indent) {
  std::string out;
  dump_into(value, indent, 0, out);
  return out;
}

Json code_to_json(const StabilizerCode& code) {
  Json doc;
  doc["name"] = code.name();
  doc["n"] = code.num_qubits();
  Json stabilizers = Json::array();
  for (const auto& g : code.generators()) stabilizers.push_back(format_pauli(g));
  doc["stabilizers"] = stabilizers;
  Json pairs = Json::array();
  for (const auto& p : code.logical_pairs()) pairs.push_back(Json{{"x", format_pauli(p.x_bar)}, {"z", format_pauli(p.z_bar)}});
  doc["logical_pairs"] = pairs;

  const CodeInfo& info = code.info();
  if (info.expected) {
    Json expected{{"k", info.expected->k}, {"d", info.expected->d}};
    if (info.expected->ancillas) expected["m"] = *info.expected->ancillas;
    doc["expected"] = expected;
  }
  Json metadata = Json::object();
  if (info.genus) metadata["genus"] = *info.genus;
  if (info.expected && info.expected->family_index) metadata["family_index"] = *info.expected->family_index;
  if (!info.provenance.empty()) metadata["provenance"] = info.provenance;
  if (!info.path_operators.empty()) {
    Json paths = Json::array();
    for (const auto& p : info.path_operators) paths.push_back(format_pauli(p));
    metadata["path_operators"] = paths;
  }
  if (code.policy() == CommutationPolicy::kRecord) metadata["commutation"] = "record";
  if (!metadata.empty()) doc["metadata"] = metadata;
  return doc;
}

std::string export_code(const StabilizerCode& code) { return dump_json(code_to_json(code)) + "\n"; }

StabilizerCode code_from_json(const Json& doc) {
  if (!doc.is_object()) throw DocumentError("code document must be an object");
  const Json& name = require(doc, "name");
  if (!name.is_string()) throw DocumentError("name: expected a string");
  const int n_value = get_int(require(doc, "n"), "n");
  if (n_value <= 0) throw DocumentError("n: must be positive");
  const auto n = static_cast<std::size_t>(n_value);

  const Json& stabilizers = require(doc, "stabilizers");
  if (!stabilizers.is_array()) throw DocumentError("stabilizers: expected a list");
  std::vector<PauliOperator> generators;
  for (std::size_t i = 0; i < stabilizers.size(); ++i) {
    generators.push_back(parse_field(stabilizers[i], "stabilizers[" + std::to_string(i) + "]", n));
  }

  std::vector<LogicalPair> pairs;
  if (doc.contains("logical_pairs")) {
    const Json& list = doc.at("logical_pairs");
    if (!list.is_array()) throw DocumentError("logical_pairs: expected a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string field = "logical_pairs[" + std::to_string(i) + "]";
      if (!list[i].is_object() || !list[i].contains("x") || !list[i].contains("z")) {
        throw DocumentError(field + ": expected {\"x\": ..., \"z\": ...}");
      }
      pairs.push_back({parse_field(list[i].at("x"), field + ".x", n), parse_field(list[i].at("z"), field + ".z", n)});
    }
  }

  CodeInfo info;
  CommutationPolicy policy = CommutationPolicy::kEnforce;
  std::optional<int> family_index;
  if (doc.contains("metadata")) {
    const Json& metadata = doc.at("metadata");
    if (!metadata.is_object()) throw DocumentError("metadata: expected an object");
    if (metadata.contains("genus")) info.genus = get_int(metadata.at("genus"), "metadata.genus");
    if (metadata.contains("family_index")) family_index = get_int(metadata.at("family_index"), "metadata.family_index");
    if (metadata.contains("provenance") && metadata.at("provenance").is_string()) {
      info.provenance = metadata.at("provenance").get<std::string>();
    }
    if (metadata.contains("path_operators")) {
      const Json& paths = metadata.at("path_operators");
      if (!paths.is_array()) throw DocumentError("metadata.path_operators: expected a list");
      for (std::size_t i = 0; i < paths.size(); ++i) {
        info.path_operators.push_back(parse_field(paths[i], "metadata.path_operators[" + std::to_string(i) + "]", n));
      }
    }
    if (metadata.contains("commutation")) {
      const Json& mode = metadata.at("commutation");
      if (mode == "record") {
        policy = CommutationPolicy::kRecord;
      } else if (mode != "enforce") {
        throw DocumentError("metadata.commutation: expected \"enforce\" or \"record\"");
      }
    }
  }
  if (doc.contains("expected")) {
    const Json& expected = doc.at("expected");
    if (!expected.is_object()) throw DocumentError("expected: expected an object");
    CodeParameters params;
    params.n = n_value;
    params.k = get_int(require(expected, "k"), "expected.k");
    params.d = get_int(require(expected, "d"), "expected.d");
    if (expected.contains("m")) params.ancillas = get_int(expected.at("m"), "expected.m");
    params.family_index = family_index;
    info.expected = params;
  }

  const std::string code_name = name.get<std::string>();
  try {
    return build_code(code_name, n, std::move(generators), std::move(pairs), std::move(info), policy);
  } catch (const NonCommutingGenerators& e) {
    throw NonCommutingGenerators("stabilizers: " + std::string(e.what()), e.first(), e.second());
  } catch (const InvalidLogicalOperator& e) {
    throw InvalidLogicalOperator("metadata.path_operators: " + std::string(e.what()));
  }
}

StabilizerCode import_code(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw DocumentError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                        e.what());
  }
  return code_from_json(doc);
}

bool VerificationReport::pass() const {
  return generators_commute && phases_consistent && logical_pairs.pass() && expected_match &&
         (k >= 64 || degeneracy == (std::uint64_t{1} << k));
}

VerificationReport verify_code(const StabilizerCode& code) {
  VerificationReport report;
  report.code = code.name();
  report.n = code.num_qubits();
  report.rank = code.rank();
  report.k = code.logical_count();
  report.generators_commute = code.generators_commute();
  report.phases_consistent = code.phases_consistent();
  report.anticommuting = code.anticommuting_pairs();
  report.logical_pairs = validate_logical_pairs(code);
  report.degeneracy = ground_state_degeneracy(code);
  report.expected = code.info().expected;
  if (report.expected) {
    report.expected_match = static_cast<std::size_t>(report.expected->n) == report.n &&
                            static_cast<std::size_t>(report.expected->k) == report.k;
  }
  return report;
}

Json to_json(const VerificationReport& report) {
  Json doc;
  doc["code"] = report.code;
  doc["n"] = report.n;
  doc["rank"] = report.rank;
  doc["k"] = report.k;
  doc["generators_commute"] = report.generators_commute;
  Json pairs = Json::array();
  for (const PairCheck& p : report.logical_pairs.pairs) {
    pairs.push_back(Json{{"index", p.index + 1}, {"pass", p.pass}, {"failures", p.failures}});
  }
  doc["logical_pairs"] = pairs;
  doc["degeneracy"] = report.degeneracy;
  doc["expected_match"] = report.expected_match;
  Json anticommuting = Json::array();
  for (const auto& [a, b] : report.anticommuting) anticommuting.push_back(Json::array({a + 1, b + 1}));
  doc["anticommuting_generators"] = anticommuting;
  doc["phases_consistent"] = report.phases_consistent;
  if (report.expected) {
    Json expected{{"n", report.expected->n}, {"k", report.expected->k}, {"d", report.expected->d}};
    if (report.expected->ancillas) expected["m"] = *report.expected->ancillas;
    doc["expected"] = expected;
  }
  doc["pass"] = report.pass();
  doc["tool_version"] = kToolVersion;
  return doc;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "code " << report.code << ": n=" << report.n << " rank=" << report.rank << " k=" << report.k << "\n";
  out << "  generators commute: " << (report.generators_commute ? "yes" : "no");
  if (!report.generators_commute) {
    out << " (" << report.anticommuting.size() << " anticommuting pairs:";
    for (const auto& [a, b] : report.anticommuting) out << " " << a + 1 << "/" << b + 1;
    out << ")";
  }
  out << "\n";
  if (!report.phases_consistent) out << "  generator phases inconsistent: -I lies in the generated group\n";
  for (const PairCheck& p : report.logical_pairs.pairs) {
    out << "  logical pair " << p.index + 1 << ": " << (p.pass ? "pass" : "FAIL") << "\n";
    for (const std::string& f : p.failures) out << "    " << f << "\n";
  }
  out << "  ground-state degeneracy: " << report.degeneracy << "\n";
  if (report.expected) {
    out << "  expected [[" << report.expected->n << "," << report.expected->k << "," << report.expected->d
        << "]]: " << (report.expected_match ? "n, k match" : "MISMATCH") << "\n";
  }
  out << (report.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

Json distance_report(const StabilizerCode& code, const DistanceResult& result) {
  Json doc;
  doc["code"] = code.name();
  doc["method"] = to_string(result.method);
  doc["d"] = result.d;
  doc["witness"] = format_pauli(result.witness);
  doc["checked_up_to"] = result.checked_up_to;
  doc["errors_examined"] = result.errors_examined;
  const auto& expected = code.info().expected;
  doc["agrees_with_expected"] = expected.has_value() && expected->d == result.d;
  doc["expected_d"] = expected ? Json(expected->d) : Json(nullptr);
  doc["tool_version"] = kToolVersion;
  return doc;
}

Json deviation_report(const DeviationReport& report) {
  Json doc;
  doc["model"] = to_string(report.model);
  doc["grid"] = Json{{"gamma_t", report.gamma_t}, {"theta", report.theta}, {"phi", report.phi}};
  Json points = Json::array();
  for (const ClosedFormPoint& p : report.points) {
    points.push_back(Json{{"params", Json{{"gamma_t", p.gamma_t}, {"theta", p.theta}, {"phi", p.phi}}},
                          {"oracle", bloch_json(p.oracle)},
                          {"closed_form", bloch_json(p.closed_form)},
                          {"abs_dev", bloch_json(p.abs_dev)}});
  }
  doc["per_point"] = points;
  Json maxima;
  static constexpr const char* kNames[3] = {"r_x", "r_y", "r_z"};
  for (std::size_t c = 0; c < 3; ++c) {
    const ComponentMaximum& m = report.max_dev[c];
    Json entry{{"value", m.value}};
    if (!report.points.empty()) {
      const ClosedFormPoint& p = report.points[m.point];
      entry["at"] = Json{{"gamma_t", p.gamma_t}, {"theta", p.theta}, {"phi", p.phi}};
    }
    maxima[kNames[c]] = entry;
  }
  doc["max_dev_per_component"] = maxima;
  return doc;
}

Json bloch_report(const StabilizerCode& code, const DephasingSpec& spec, const BlochVector& r) {
  Json doc;
  doc["code"] = code.name();
  doc["model"] = to_string(spec.model);
  doc["gamma"] = spec.gamma;
  doc["time"] = spec.t;
  doc["theta"] = spec.theta;
  doc["phi"] = spec.phi;
  doc["pair"] = spec.pair_index + 1;
  doc["bloch"] = bloch_json(r);
  doc["tool_version"] = kToolVersion;
  return doc;
}

std::string basis_bitstring(std::uint64_t index, std::size_t num_qubits) {
  std::string s(num_qubits, '0');
  for (std::size_t q = 0; q < num_qubits; ++q) {
    if ((index >> q) & 1U) s[q] = '1';
  }
  return s;
}

std::string format_state_support(const StateVectorXd& state) {
  const std::size_t n = state_qubits(state);
  std::vector<std::string> lines;
  for (Eigen::Index b = 0; b < state.size(); ++b) {
    if (state(b) == std::complex<double>(0.0, 0.0)) continue;
    lines.push_back(basis_bitstring(static_cast<std::uint64_t>(b), n) + " " + format_double(state(b).real()) + " " +
                    format_double(state(b).imag()));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) out += line + "\n";
  return out;
}

}  // namespace hgc
