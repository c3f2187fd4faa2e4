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

#include "charnoise/importers.hpp"

#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace charnoise {
namespace {

std::vector<Record> Parse(const std::string& jsonl) {
  std::istringstream in(jsonl);
  RecordReader reader(in, Format::kJsonl);
  std::vector<Record> out;
  while (auto row = reader.Next()) out.push_back(row->record);
  return out;
}

TEST(ImportXsidTest, KeepsTextIntentAndMetadata) {
  std::istringstream in(
      "# id: 0\n"
      "# text-en: will it be sunny today ?\n"
      "# text: Wird es heute sonnig?\n"
      "# intent: weather/find\n"
      "1\tWird\tweather/find\tO\n"
      "2\tes\tweather/find\tO\n"
      "\n"
      "# id: 1\n"
      "# text: Stelle einen Wecker\n"
      "# intent: alarm/set_alarm\n"
      "1\tStelle\talarm/set_alarm\tO\n");
  std::ostringstream out;
  RecordWriter writer(out, Format::kJsonl);
  EXPECT_EQ(ImportXsid(in, writer).records, 2u);
  const auto records = Parse(out.str());
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].text, "Wird es heute sonnig?");
  EXPECT_EQ(records[0].label, "weather/find");
  const std::vector<std::pair<std::string, std::string>> extras = {
      {"id", "\"0\""}, {"text-en", "\"will it be sunny today ?\""}};
  EXPECT_EQ(records[0].extras, extras);
  EXPECT_EQ(records[1].label, "alarm/set_alarm");
}

TEST(ImportXsidTest, MissingIntent) {
  std::istringstream in("# text: hallo\n1\thallo\tO\n");
  std::ostringstream out;
  RecordWriter writer(out, Format::kJsonl);
  EXPECT_THROW(ImportXsid(in, writer), DataError);
}

TEST(ImportMorocoTest, JoinsOnId) {
  std::istringstream samples("a1\tPrimul text $NE$ aici.\nb2\tAl doilea\ttext\n");
  std::istringstream labels("b2\t3\na1\t1\n");
  std::istringstream dialects("a1\t1\nb2\t2\n");
  std::ostringstream out;
  RecordWriter writer(out, Format::kJsonl);
  EXPECT_EQ(ImportMoroco(samples, labels, &dialects, writer).records, 2u);
  const auto records = Parse(out.str());
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].text, "Primul text $NE$ aici.");
  EXPECT_EQ(records[0].label, "1");
  EXPECT_EQ(records[1].text, "Al doilea text");
  EXPECT_EQ(records[1].label, "3");
  EXPECT_EQ(records[1].extras.back().second, "\"2\"");
}

TEST(ImportMorocoTest, PipeSeparatorAndMissingLabel) {
  std::istringstream samples("7|text one\n8|text two\n");
  std::istringstream labels("7|sports\n");
  std::ostringstream out;
  RecordWriter writer(out, Format::kJsonl);
  EXPECT_THROW(ImportMoroco(samples, labels, nullptr, writer, '|'), DataError);
}

TEST(ImportTassTest, ConfigurableColumns) {
  std::istringstream in("id\ttext\tlabel\n1\tQue bonito dia\tP\n2\tNo me gusta\tN \n");
  std::ostringstream out;
  RecordWriter writer(out, Format::kJsonl);
  TassColumns columns;
  columns.header = true;
  EXPECT_EQ(ImportTass(in, writer, columns).records, 2u);
  const auto records = Parse(out.str());
  EXPECT_EQ(records[1].text, "No me gusta");
  EXPECT_EQ(records[1].label, "N");
  EXPECT_EQ(records[1].extras.front().second, "\"2\"");
}

TEST(ImportTassTest, ShortRow) {
  std::istringstream in("1\tonly text\n");
  std::ostringstream out;
  RecordWriter writer(out, Format::kJsonl);
  EXPECT_THROW(ImportTass(in, writer), DataError);
}

}  // namespace
}  // namespace charnoise
