// Copyright 2026 The charnoise Authors
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

#include "charnoise/dataset_io.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace charnoise {
namespace {

std::vector<SourceRow> ReadAll(const std::string& content, Format format, bool skip_bad = false,
                               std::size_t* skipped = nullptr) {
  std::istringstream in(content);
  RecordReader reader(in, format, skip_bad);
  std::vector<SourceRow> rows;
  while (auto row = reader.Next()) rows.push_back(std::move(*row));
  if (skipped != nullptr) *skipped = reader.skipped();
  return rows;
}

TEST(ReadTest, TsvTextAndLabel) {
  const auto rows = ReadAll("Wird es heute sonnig?\tweather/find\n", Format::kTsv);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].record.text, "Wird es heute sonnig?");
  EXPECT_EQ(rows[0].record.label, "weather/find");
  EXPECT_TRUE(rows[0].record.extras.empty());
  EXPECT_EQ(rows[0].line_index, 0u);
}

TEST(ReadTest, TsvExtraColumns) {
  const auto rows = ReadAll("a\tb\tc\t\td\n", Format::kTsv);
  ASSERT_EQ(rows.size(), 1u);
  const std::vector<std::pair<std::string, std::string>> extras = {
      {"col3", "c"}, {"col4", ""}, {"col5", "d"}};
  EXPECT_EQ(rows[0].record.extras, extras);
}

TEST(ReadTest, TsvSingleColumnFailsWithLineNumber) {
  try {
    ReadAll("ok\tlabel\nonly one column\n", Format::kTsv);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    ASSERT_TRUE(e.line_index().has_value());
    EXPECT_EQ(*e.line_index(), 1u);
    EXPECT_EQ(std::string(e.what()).rfind("line 2:", 0), 0u) << e.what();
  }
}

TEST(ReadTest, JsonlExtrasKeepRawValues) {
  const auto rows = ReadAll(R"({"text":"x","label":"y","id":7})" "\n", Format::kJsonl);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].record.text, "x");
  EXPECT_EQ(rows[0].record.label, "y");
  const std::vector<std::pair<std::string, std::string>> extras = {{"id", "7"}};
  EXPECT_EQ(rows[0].record.extras, extras);
}

TEST(ReadTest, JsonlNestedExtrasAndOddSpacing) {
  const std::string line =
      R"( { "id" : 1.0e5 , "slots": {"a": [1, "}", {"b": null}]}, "text" : "café \"x\"", "label":"l" } )";
  const auto rows = ReadAll(line + "\n", Format::kJsonl);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].record.text, "café \"x\"");
  const std::vector<std::pair<std::string, std::string>> extras = {
      {"id", "1.0e5"}, {"slots", R"({"a": [1, "}", {"b": null}]})"}};
  EXPECT_EQ(rows[0].record.extras, extras);
}

TEST(ReadTest, JsonlErrors) {
  EXPECT_THROW(ReadAll("{\"text\":\"x\"}\n", Format::kJsonl), DataError);
  EXPECT_THROW(ReadAll("{\"label\":\"x\"}\n", Format::kJsonl), DataError);
  EXPECT_THROW(ReadAll("{\"text\":null,\"label\":\"x\"}\n", Format::kJsonl), DataError);
  EXPECT_THROW(ReadAll("{\"text\":\"a\",\"label\":3}\n", Format::kJsonl), DataError);
  EXPECT_THROW(ReadAll("[1,2]\n", Format::kJsonl), DataError);
  EXPECT_THROW(ReadAll("{\"text\":\"a\",\n", Format::kJsonl), DataError);
  EXPECT_THROW(ReadAll("\n", Format::kJsonl), DataError);
}

TEST(ReadTest, InvalidUtf8) {
  EXPECT_THROW(ReadAll("ab\xC3\tlabel\n", Format::kTsv), DataError);
}

TEST(ReadTest, SkipBadCountsAndContinues) {
  std::size_t skipped = 0;
  const auto rows = ReadAll("a\tx\nbroken\nb\ty\n\xFF\tz\nc\tw\n", Format::kTsv, true, &skipped);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(skipped, 2u);
  EXPECT_EQ(rows[1].line_index, 2u);
  EXPECT_EQ(rows[2].line_index, 4u);
}

TEST(ReadTest, CrlfLinesKeepRawBytes) {
  const auto rows = ReadAll("hello\tgreet\r\n", Format::kTsv);
  EXPECT_EQ(rows[0].record.label, "greet");
  EXPECT_EQ(rows[0].raw, "hello\tgreet\r");
}

TEST(WithTextTest, SplicesOnlyTheTextField) {
  const std::string line = R"({"id": 1.0e5, "text" : "café ok", "label":"x"})";
  const auto row = ParseRow(line, 0, Format::kJsonl);
  EXPECT_EQ(WithText(row, row.record.text, Format::kJsonl), line);
  EXPECT_EQ(WithText(row, "cafe ko", Format::kJsonl),
            R"({"id": 1.0e5, "text" : "cafe ko", "label":"x"})");
  const auto tsv = ParseRow("abc def\tl\tkeep\r", 0, Format::kTsv);
  EXPECT_EQ(WithText(tsv, "bac def", Format::kTsv), "bac def\tl\tkeep\r");
}

TEST(WriteTest, EmptyStreamMakesEmptyFile) {
  testing::TempDir dir;
  WriteRecords({}, dir / "empty.jsonl", Format::kJsonl);
  EXPECT_EQ(testing::ReadFile(dir / "empty.jsonl"), "");
  EXPECT_TRUE(ReadRecords(dir / "empty.jsonl", Format::kJsonl).empty());
}

TEST(WriteTest, TabInTsvTextPointsToJsonl) {
  std::ostringstream out;
  RecordWriter writer(out, Format::kTsv);
  try {
    writer.Write(Record{"a\tb", "l", {}});
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("JSONL"), std::string::npos);
  }
}

TEST(WriteTest, LfLineEndings) {
  std::ostringstream out;
  RecordWriter writer(out, Format::kJsonl);
  writer.Write(Record{"x", "y", {{"id", "7"}}});
  EXPECT_EQ(out.str(), "{\"text\":\"x\",\"label\":\"y\",\"id\":7}\n");
}

Record RandomRecord(std::mt19937_64& gen, bool tsv_safe) {
  static const std::vector<std::string> kPieces = {"a",  "Z", "ü", "ß", " ",  "?", "\"", "\\",
                                                   "中", "😀", "1", "{", "}",  ",", ":", "'"};
  auto text = [&](int max_len) {
    std::string s;
    for (int n = static_cast<int>(gen() % max_len); n > 0; --n) s += kPieces[gen() % kPieces.size()];
    if (!tsv_safe && gen() % 5 == 0) s += "\t";
    return s;
  };
  Record r{text(20), text(6), {}};
  const int extras = static_cast<int>(gen() % 3);
  for (int i = 0; i < extras; ++i) {
    if (tsv_safe) {
      r.extras.emplace_back("col" + std::to_string(i + 3), text(5));
    } else {
      r.extras.emplace_back("k" + std::to_string(i), nlohmann::json(text(5)).dump());
    }
  }
  return r;
}

TEST(RoundTripPropertyTest, JsonlAndTsv) {
  std::mt19937_64 gen(77);
  testing::TempDir dir;
  for (Format format : {Format::kJsonl, Format::kTsv}) {
    std::vector<Record> records;
    for (int i = 0; i < 1000; ++i) records.push_back(RandomRecord(gen, format == Format::kTsv));
    const auto path = dir / (format == Format::kTsv ? "r.tsv" : "r.jsonl");
    WriteRecords(records, path, format);
    EXPECT_EQ(ReadRecords(path, format), records);
  }
}

TEST(FormatTest, FromPathAndName) {
  EXPECT_EQ(FormatFromPath("a/b.tsv"), Format::kTsv);
  EXPECT_EQ(FormatFromPath("a/b.jsonl"), Format::kJsonl);
  EXPECT_EQ(ParseFormat("tsv"), Format::kTsv);
  EXPECT_THROW(ParseFormat("csv"), ConfigError);
}

TEST(ReaderTest, OpenMissingFile) {
  EXPECT_THROW(RecordReader::Open("/nonexistent/x.jsonl", Format::kJsonl), DataError);
}

}  // namespace
}  // namespace charnoise
