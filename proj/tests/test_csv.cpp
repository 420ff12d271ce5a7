// Copyright 2026 The nidsbench Authors
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

#include <doctest.h>

#include <sstream>

#include "nids/csv.hpp"
#include "nids/error.hpp"
#include "nids/feature_table.hpp"
#include "test_support.hpp"

using namespace nids;

namespace {

const Schema& mini_schema() {
  static const Schema schema = {{"a", ColumnKind::numeric},
                                {"proto", ColumnKind::nominal},
                                {"label", ColumnKind::label_binary}};
  return schema;
}

}  // namespace

TEST_SUITE("csv") {
  TEST_CASE("quoted fields, escapes and CRLF records") {
    std::istringstream in("x,y\r\n\"a,b\",\"say \"\"hi\"\"\"\r\n\"line\nbreak\",plain\n");
    CsvReader reader(in);
    std::vector<std::string> fields;
    REQUIRE(reader.next_record(fields));
    CHECK(fields == std::vector<std::string>{"x", "y"});
    REQUIRE(reader.next_record(fields));
    CHECK(fields == std::vector<std::string>{"a,b", "say \"hi\""});
    REQUIRE(reader.next_record(fields));
    CHECK(fields == std::vector<std::string>{"line\nbreak", "plain"});
    CHECK_FALSE(reader.next_record(fields));
  }

  TEST_CASE("utf-8 byte-order mark is skipped") {
    std::istringstream in("\xEF\xBB\xBFx,y\n1,2\n");
    CsvReader reader(in);
    std::vector<std::string> fields;
    REQUIRE(reader.next_record(fields));
    CHECK(fields[0] == "x");
  }

  TEST_CASE("fixture loads with the full schema") {
    const FeatureTable table = load_csv(testing::fixture_csv(), unsw_nb15_schema());
    CHECK(table.n_rows == 200);
    CHECK(table.columns.size() == 45);
    // nominal nulls were replaced before anything downstream sees them
    const auto* service = table.find("service");
    REQUIRE(service != nullptr);
    for (const std::string& v : service->nominal) {
      CHECK_FALSE(v.empty());
      CHECK(v != "-");
    }
  }

  TEST_CASE("header-only file is an empty-file error") {
    testing::TempDir dir("csv_empty");
    const std::string path = dir.str() + "/empty.csv";
    testing::write_file(path, "a,proto,label\n");
    CHECK_THROWS_WITH_AS(load_csv(path, mini_schema()), doctest::Contains("no data rows"),
                         Error);
  }

  TEST_CASE("zero-byte file is an empty-file error") {
    testing::TempDir dir("csv_zero");
    const std::string path = dir.str() + "/zero.csv";
    testing::write_file(path, "");
    try {
      load_csv(path, mini_schema());
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::empty_file);
    }
  }

  TEST_CASE("missing column is reported by name") {
    testing::TempDir dir("csv_missing");
    const std::string path = dir.str() + "/missing.csv";
    testing::write_file(path, "a,label\n1,0\n");
    try {
      load_csv(path, mini_schema());
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::missing_column);
      CHECK(std::string(e.what()).find("proto") != std::string::npos);
    }
  }

  TEST_CASE("unknown column is rejected") {
    testing::TempDir dir("csv_unknown");
    const std::string path = dir.str() + "/unknown.csv";
    testing::write_file(path, "a,proto,label,bogus\n1,tcp,0,9\n");
    try {
      load_csv(path, mini_schema());
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::unexpected_column);
    }
  }

  TEST_CASE("unparseable numeric cell names the row and column") {
    testing::TempDir dir("csv_bad");
    const std::string path = dir.str() + "/bad.csv";
    testing::write_file(path, "a,proto,label\n1,tcp,0\nnot_a_number,udp,1\n");
    try {
      load_csv(path, mini_schema());
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::unparseable_cell);
      CHECK(std::string(e.what()).find("row 2") != std::string::npos);
      CHECK(std::string(e.what()).find("column a") != std::string::npos);
    }
  }

  TEST_CASE("binary label outside {0,1} is rejected") {
    testing::TempDir dir("csv_label");
    const std::string path = dir.str() + "/label.csv";
    testing::write_file(path, "a,proto,label\n1,tcp,2\n");
    CHECK_THROWS_AS(load_csv(path, mini_schema()), Error);
  }

  TEST_CASE("numeric column rejects empty cells") {
    testing::TempDir dir("csv_null_num");
    const std::string path = dir.str() + "/null.csv";
    testing::write_file(path, "a,proto,label\n,tcp,0\n");
    CHECK_THROWS_AS(load_csv(path, mini_schema()), Error);
  }

  TEST_CASE("nominal null becomes the other category") {
    testing::TempDir dir("csv_null_nom");
    const std::string path = dir.str() + "/nulls.csv";
    testing::write_file(path, "a,proto,label\n1,-,0\n2,,1\n3,tcp,1\n");
    const FeatureTable table = load_csv(path, mini_schema());
    const auto* proto = table.find("proto");
    CHECK(proto->nominal == std::vector<std::string>{"other", "other", "tcp"});
  }
}
