// Copyright 2026 The bvpcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bvpcf/report.hpp"

#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "bvpcf/error.hpp"
#include "json.hpp"

namespace bvpcf {
namespace {

using nlohmann::json;

RunConfig config_for(Command command, long k, unsigned long m, std::size_t terms) {
  RunConfig c;
  c.command = command;
  c.k_lo = c.k_hi = k;
  c.m_lo = c.m_hi = m;
  c.terms = terms;
  return c;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          field += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        row.push_back(field);
        field.clear();
      } else {
        field += c;
      }
    }
    row.push_back(field);
    rows.push_back(row);
  }
  return rows;
}

TEST(Decimal, TruncatesTowardZero) {
  EXPECT_EQ(to_decimal(Rational(-7, 2), 3), "-3.500");
  EXPECT_EQ(to_decimal(Rational(-1, 3), 2), "-0.33");
  EXPECT_EQ(to_decimal(Rational(2, 3), 4), "0.6666");
  EXPECT_EQ(to_decimal(Rational(98415, 7849), 4), "12.5385");
  EXPECT_EQ(to_decimal(Rational(1, 1000), 2), "0.00");
  EXPECT_EQ(to_decimal(Rational(17, 2), 0), "8");
  EXPECT_EQ(to_fraction(Rational(196830, 15698)), "196830/15698");
  Rational h(196830, 15698);
  h.canonicalize();
  EXPECT_EQ(to_fraction(h), "98415/7849");
}

TEST(Decimal, DigitsNeverExceedTheWidth) {
  const CertifiedDecimal a =
      render_enclosure({Rational(112689, 10000), Rational(112690, 10000)});
  EXPECT_EQ(a.value, "11.2689");
  EXPECT_EQ(a.width, "<=1e-4");
  const CertifiedDecimal b = render_enclosure({Rational(1, 3), Rational(1, 3)});
  EXPECT_EQ(b.width, "<=1e-20");
  EXPECT_EQ(b.value, "0.33333333333333333333");
  const CertifiedDecimal c = render_enclosure({Rational(-2), Rational(3)});
  EXPECT_EQ(c.width, "<=1e1");
  EXPECT_EQ(c.value, "0");
  const CertifiedDecimal d = render_enclosure({Rational(-3, 2), Rational(-1, 2)});
  EXPECT_EQ(d.width, "<=1e0");
  EXPECT_EQ(d.value, "-1");
}

TEST(Decimal, PrintedValueLiesNearTheEnclosure) {
  for (long den : {7l, 97l, 1009l, 65537l}) {
    for (long w = 1; w < 2000; w += 37) {
      const RationalInterval iv(Rational(-w, den), Rational(w * w, den * 13));
      const CertifiedDecimal r = render_enclosure(iv);
      const std::size_t dot = r.value.find('.');
      const long places = dot == std::string::npos ? 0 : long(r.value.size() - dot - 1);
      std::string digits = r.value;
      if (dot != std::string::npos) digits.erase(dot, 1);
      const Rational printed(Integer(digits), ipow(10, places));
      // Midpoint truncation loses at most one unit in the last place.
      const Rational slack(1, ipow(10, places));
      EXPECT_LE(printed, iv.hi() + slack);
      EXPECT_GE(printed, iv.lo() - slack);
      if (places > 0) EXPECT_EQ(r.width, "<=1e-" + std::to_string(places)) << r.value;
    }
  }
}

TEST(ValidateConfig, RejectsBadConfigs) {
  RunConfig c = config_for(Command::kExpand, 2, 3, 0);
  EXPECT_THROW(validate_config(c), Error);
  c.terms = 1;
  EXPECT_NO_THROW(validate_config(c));
  c.k_lo = 5;
  c.k_hi = 2;
  EXPECT_THROW(validate_config(c), Error);
  c.k_hi = 5;
  c.m_lo = 4;
  c.m_hi = 3;
  EXPECT_THROW(validate_config(c), Error);
  c.m_hi = 4;
  c.precision_cap_bits = 63;
  EXPECT_THROW(validate_config(c), Error);
}

TEST(Run, PropagatesSpecErrors) {
  try {
    run(config_for(Command::kExpand, 8, 3, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kPerfectPower);
  }
}

TEST(Emit, ExpandJsonListsQuotients) {
  const json j = json::parse(emit(run(config_for(Command::kExpand, 50, 10, 3)), Format::kJson));
  EXPECT_EQ(j["tool"], "bvpcf");
  EXPECT_EQ(j["version"], kToolVersion);
  ASSERT_EQ(j["results"].size(), 1u);
  std::vector<std::string> b;
  for (const json& t : j["results"][0]["quotients"]) b.push_back(t);
  EXPECT_EQ(b, (std::vector<std::string>{"1", "2", "11", "3"}));
}

TEST(Emit, JsonKeyOrderIsStable) {
  const std::string text = emit(run(config_for(Command::kVerify, 2, 3, 4)), Format::kJson);
  const std::size_t tool = text.find("\"tool\""), version = text.find("\"version\""),
                    config = text.find("\"config\""), results = text.find("\"results\""),
                    summary = text.find("\"summary\"");
  EXPECT_LT(tool, version);
  EXPECT_LT(version, config);
  EXPECT_LT(config, results);
  EXPECT_LT(results, summary);
}

TEST(Emit, EmptyScanHasEmptyViolationsAndZeroSummary) {
  Report empty;
  empty.config = config_for(Command::kScan, 2, 3, 5);
  const json j = json::parse(emit(empty, Format::kJson));
  ASSERT_EQ(j["results"].size(), 1u);
  EXPECT_TRUE(j["results"][0]["violations"].is_array());
  EXPECT_TRUE(j["results"][0]["violations"].empty());
  for (const auto& [key, value] : j["summary"].items()) EXPECT_EQ(value.get<int>(), 0) << key;

  // A range holding only a cube: one skipped cell, nothing else.
  const json c = json::parse(emit(run(config_for(Command::kScan, 8, 3, 5)), Format::kJson));
  EXPECT_TRUE(c["results"][0]["violations"].empty());
  EXPECT_EQ(c["summary"]["skipped"], 1);
  EXPECT_EQ(c["summary"]["violations"], 0);
  EXPECT_EQ(c["summary"]["failed"], 0);
}

TEST(Emit, GoldenCaseCsvRow) {
  const std::string text = emit(run(config_for(Command::kVerify, 50, 10, 1)), Format::kCsv);
  const auto rows = csv_rows(text);
  ASSERT_GE(rows.size(), 2u);
  const std::vector<std::string>& header = rows.front();
  EXPECT_EQ(header.front(), "schema_version");
  auto col = [&](const char* name) {
    return std::size_t(std::find(header.begin(), header.end(), name) - header.begin());
  };
  bool found = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i].size(), header.size()) << i;
    EXPECT_EQ(rows[i][0], kCsvSchemaVersion);
    if (rows[i][col("record")] == "check" && rows[i][col("n")] == "1") {
      found = true;
      EXPECT_EQ(rows[i][col("k")], "50");
      EXPECT_EQ(rows[i][col("m")], "10");
      EXPECT_EQ(rows[i][col("d")], "7849");
      EXPECT_EQ(rows[i][col("H")], "98415/7849");
      EXPECT_EQ(rows[i][col("b_next")], "11");
    }
  }
  EXPECT_TRUE(found);
}

TEST(Emit, CsvFieldsWithCommasAreQuoted) {
  const std::string text = emit(run(config_for(Command::kVerify, 3, 3, 3)), Format::kCsv);
  EXPECT_NE(text.find("\"claimed eps_n in {0, 1}"), std::string::npos) << text;
  const auto rows = csv_rows(text);
  for (const auto& row : rows) EXPECT_EQ(row.size(), rows.front().size());
}

TEST(Emit, EveryDecimalCarriesAWidth) {
  const json j = json::parse(emit(run(config_for(Command::kVerify, 2, 3, 12)), Format::kJson));
  std::size_t values = 0;
  std::function<void(const json&)> walk = [&](const json& node) {
    if (node.is_object()) {
      if (node.contains("value") || node.contains("decimal")) {
        ++values;
        ASSERT_TRUE(node.contains("width")) << node.dump();
        EXPECT_TRUE(std::regex_match(node["width"].get<std::string>(),
                                     std::regex("<=1e-?[0-9]+")));
      }
      for (const auto& [key, child] : node.items()) walk(child);
    } else if (node.is_array()) {
      for (const json& child : node) walk(child);
    }
  };
  walk(j);
  EXPECT_GT(values, 30u);
}

TEST(Emit, TextPresentsBelowSideClaimsAsMeasured) {
  const std::string text = emit(run(config_for(Command::kVerify, 2, 3, 2)), Format::kText);
  EXPECT_NE(text.find("(measured)"), std::string::npos);
  EXPECT_NE(text.find("H <= b_next: FAILS"), std::string::npos);
}

TEST(Emit, IdenticalConfigIsByteIdentical) {
  for (Command command : {Command::kExpand, Command::kPredict, Command::kVerify, Command::kScan}) {
    RunConfig c = config_for(command, 5, 3, 15);
    c.k_hi = 7;
    c.m_hi = 4;
    for (Format format : {Format::kJson, Format::kCsv, Format::kText}) {
      c.threads = 1;
      const std::string a = emit(run(c), format);
      c.threads = 3;
      const std::string b = emit(run(c), format);
      EXPECT_EQ(a, b) << command_name(command);
    }
  }
}

}  // namespace
}  // namespace bvpcf
