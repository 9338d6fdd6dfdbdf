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

#include "gtest/gtest.h"
#include "hgc/catalog.hpp"
#include "hgc/errors.hpp"

namespace hgc {
namespace {

TEST(FormatDouble, Examples) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(2.0), "2.0");
  EXPECT_EQ(format_double(-0.0), "0.0");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1e-20), "9.9999999999999995e-21");
}

TEST(DumpJson, StableLayout) {
  Json doc;
  doc["b"] = 1;
  doc["a"] = Json::array({0.25, true, "x"});
  doc["c"] = Json::object();
  EXPECT_EQ(dump_json(doc), "{\n  \"b\": 1,\n  \"a\": [\n    0.25,\n    true,\n    \"x\"\n  ],\n  \"c\": {}\n}");
  EXPECT_EQ(dump_json(doc, 0), "{\"b\":1,\"a\":[0.25,true,\"x\"],\"c\":{}}");
}

TEST(ImportCode, MinimalDocument) {
  const StabilizerCode code = import_code(R"({"name": "rep", "n": 3, "stabilizers": ["Z1Z2", "Z2 Z3"]})");
  EXPECT_EQ(code.name(), "rep");
  EXPECT_EQ(code.num_qubits(), 3u);
  EXPECT_EQ(code.logical_count(), 1u);
  EXPECT_TRUE(code.logical_pairs().empty());
  EXPECT_FALSE(code.info().expected.has_value());
}

TEST(ImportCode, FullDocument) {
  const StabilizerCode code = import_code(R"({
    "name": "g2",
    "n": 6,
    "stabilizers": ["X1X2X3X4", "X3X4X5X6", "Z1Z3Z5", "Z2Z4Z6"],
    "logical_pairs": [{"x": "X1X3", "z": "Z1Z4Z6"}],
    "expected": {"k": 2, "d": 2, "m": 4},
    "metadata": {"genus": 2, "note": "ignored"}
  })");
  ASSERT_EQ(code.logical_pairs().size(), 1u);
  EXPECT_EQ(code.info().expected->d, 2);
  EXPECT_EQ(code.info().expected->ancillas, 4);
  EXPECT_EQ(code.info().genus, 2);
}

TEST(ImportCode, SyntaxErrorCarriesLineAndColumn) {
  try {
    import_code("{\n  \"name\": \"x\",\n  \"n\": 3,,\n}");
    FAIL() << "expected DocumentError";
  } catch (const DocumentError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ImportCode, FieldErrors) {
  auto message = [](const char* text) {
    try {
      import_code(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(R"({"name": "x", "n": 3, "stabilizers": ["Z1", "Q2"]})").find("stabilizers[1]"),
            std::string::npos);
  EXPECT_NE(message(R"({"name": "x", "n": 3, "stabilizers": ["Z4"]})").find("stabilizers[0]"), std::string::npos);
  EXPECT_NE(message(R"({"name": "x", "stabilizers": []})").find("'n'"), std::string::npos);
  EXPECT_NE(message(R"({"name": "x", "n": 2, "stabilizers": [], "logical_pairs": [{"x": "X1"}]})")
                .find("logical_pairs[0]"),
            std::string::npos);
  EXPECT_THROW(import_code(R"({"name": "x", "n": 1, "stabilizers": ["X1", "Z1"]})"), NonCommutingGenerators);
  EXPECT_THROW(import_code(R"({"name": "x", "n": 0, "stabilizers": []})"), DocumentError);
}

TEST(ExportCode, Genus2UnitDocument) {
  const std::string text = export_code(genus2_unit());
  EXPECT_EQ(text.substr(0, 52), "{\n  \"name\": \"genus2-unit\",\n  \"n\": 6,\n  \"stabilizers\"");
  EXPECT_NE(text.find("\"x\": \"X1X3\""), std::string::npos);
  EXPECT_NE(text.find("\"m\": 4"), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

TEST(RoundTrip, EveryCatalogCode) {
  for (const auto& entry : catalog_list()) {
    const StabilizerCode code = catalog_code(entry.name);
    const std::string first = export_code(code);
    const StabilizerCode back = import_code(first);
    EXPECT_TRUE(back == code) << entry.name;
    EXPECT_EQ(export_code(back), first) << entry.name;
  }
}

TEST(VerifyCode, ReportFields) {
  const VerificationReport good = verify_code(genus2_unit());
  EXPECT_TRUE(good.pass());
  EXPECT_EQ(good.degeneracy, 4u);
  const Json doc = to_json(good);
  const std::vector<std::string> keys = {"code",         "n",         "rank", "k", "generators_commute",
                                         "logical_pairs", "degeneracy", "expected_match"};
  for (const auto& key : keys) EXPECT_TRUE(doc.contains(key)) << key;
  EXPECT_EQ(doc["logical_pairs"][1]["index"], 2);

  const VerificationReport bad = verify_code(genus5_unit());
  EXPECT_FALSE(bad.pass());
  EXPECT_EQ(bad.anticommuting.size(), 8u);
  EXPECT_NE(render_text(bad).find("anticommuting pairs"), std::string::npos);
}

TEST(DistanceReport, Fields) {
  const StabilizerCode code = genus2_unit();
  const Json doc = distance_report(code, cross_validate_distance(code, 3));
  EXPECT_EQ(dump_json(doc, 0),
            "{\"code\":\"genus2-unit\",\"method\":\"both\",\"d\":2,\"witness\":\"Z1Z2\",\"checked_up_to\":2,"
            "\"errors_examined\":23,\"agrees_with_expected\":true,\"expected_d\":2,\"tool_version\":\"hgcodes 1.0.0\"}");
}

TEST(StateSupport, BitstringsAreQubitOneFirst) {
  EXPECT_EQ(basis_bitstring(1, 4), "1000");
  EXPECT_EQ(basis_bitstring(0b1100, 4), "0011");
  StateVectorXd s = StateVectorXd::Zero(4);
  s(1) = std::complex<double>(0.0, -1.0);
  EXPECT_EQ(format_state_support(s), "10 0.0 -1.0\n");
}

TEST(DeviationReport, JsonKeys) {
  const Json doc = deviation_report(compare_closed_form({0.0}, {M_PI / 2}, {0.0}));
  EXPECT_EQ(doc["model"], "global");
  EXPECT_EQ(doc["per_point"].size(), 1u);
  EXPECT_TRUE(doc["max_dev_per_component"].contains("r_y"));
  EXPECT_EQ(dump_json(doc), dump_json(deviation_report(compare_closed_form({0.0}, {M_PI / 2}, {0.0}))));
}

}  // namespace
}  // namespace hgc
