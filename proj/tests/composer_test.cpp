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

#include "charnoise/composer.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace charnoise {
namespace {

std::vector<Record> Corpus(std::size_t n, std::uint64_t seed = 5) {
  std::mt19937_64 gen(seed);
  std::vector<Record> records;
  for (std::size_t i = 0; i < n; ++i) {
    records.push_back(Record{testing::RandomSentence(gen, 1 + static_cast<int>(gen() % 12)),
                             "label" + std::to_string(gen() % 7),
                             {{"id", std::to_string(i)}}});
  }
  return records;
}

CompositionPlan MakePlan(CompositionMode mode, std::uint64_t seed = 42) {
  return CompositionPlan::Make(mode, ParseLevel("50%"), *BuiltinAlphabet("en"), seed);
}

TEST(CompositionPlanTest, Shapes) {
  const auto joint = MakePlan(CompositionMode::kJoint);
  ASSERT_EQ(joint.copies().size(), 2u);
  EXPECT_FALSE(joint.copies()[0].noise.has_value());
  ASSERT_TRUE(joint.copies()[1].noise.has_value());
  EXPECT_EQ(joint.copies()[1].noise->types.size(), 4u);
  EXPECT_EQ(joint.copies()[1].noise->mix, MixMode::kUniformMix);

  const auto stacked = MakePlan(CompositionMode::kStacked);
  ASSERT_EQ(stacked.copies().size(), 5u);
  EXPECT_FALSE(stacked.copies()[0].noise.has_value());
  const EditType order[] = {EditType::kInsert, EditType::kDelete, EditType::kReplace,
                            EditType::kSwap};
  for (std::size_t k = 1; k < 5; ++k) {
    EXPECT_EQ(stacked.copies()[k].copy_index, k);
    ASSERT_EQ(stacked.copies()[k].noise->types.size(), 1u);
    EXPECT_EQ(stacked.copies()[k].noise->types[0], order[k - 1]);
    EXPECT_EQ(stacked.copies()[k].noise->mix, MixMode::kSingleType);
  }
}

TEST(CompositionPlanTest, RejectsBadMode) {
  EXPECT_THROW(ParseCompositionMode("mixed"), ConfigError);
  EXPECT_EQ(ParseCompositionMode("stacked"), CompositionMode::kStacked);
}

TEST(ComposeTest, SizesAndCleanCopy) {
  for (std::size_t n : {0u, 1u, 37u}) {
    const auto records = Corpus(n);
    const auto joint = Compose(records, MakePlan(CompositionMode::kJoint));
    const auto stacked = Compose(records, MakePlan(CompositionMode::kStacked));
    EXPECT_EQ(joint.size(), 2 * n);
    EXPECT_EQ(stacked.size(), 5 * n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(joint[i], records[i]);
      EXPECT_EQ(stacked[i], records[i]);
    }
  }
}

TEST(ComposeTest, LabelsAndExtrasAreInvariant) {
  const auto records = Corpus(50);
  const auto stacked = Compose(records, MakePlan(CompositionMode::kStacked));
  for (std::size_t k = 0; k < 5; ++k) {
    for (std::size_t i = 0; i < records.size(); ++i) {
      EXPECT_EQ(stacked[k * records.size() + i].label, records[i].label);
      EXPECT_EQ(stacked[k * records.size() + i].extras, records[i].extras);
    }
  }
}

TEST(ComposeTest, StackedCopiesUseOneEditTypeEach) {
  const auto records = Corpus(200);
  std::vector<AuditEntry> audit;
  const auto plan = MakePlan(CompositionMode::kStacked);
  Compose(records, plan, &audit);
  std::vector<std::size_t> per_copy(5, 0);
  for (const auto& e : audit) {
    ASSERT_GE(e.copy_index, 1u);
    ASSERT_LE(e.copy_index, 4u);
    EXPECT_EQ(e.edit.type, plan.copies()[e.copy_index].noise->types[0]);
    ++per_copy[e.copy_index];
  }
  for (std::size_t k = 1; k < 5; ++k) EXPECT_GT(per_copy[k], 0u) << k;
}

TEST(ComposeTest, NoisedCopyMatchesDirectNoiseLine) {
  const auto records = Corpus(30);
  const auto plan = MakePlan(CompositionMode::kJoint, 9);
  const auto out = Compose(records, plan);
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(out[records.size() + i].text,
              NoiseLine(records[i].text, *plan.copies()[1].noise, {1, i}).text);
  }
}

TEST(EqualPassEpochsTest, Examples) {
  EXPECT_EQ(EqualPassEpochs(5, 2, 5), Rational(2));
  EXPECT_EQ(EqualPassEpochs(2, 2, 5), Rational(5));
  EXPECT_EQ(EqualPassEpochs(3, 2, 5), Rational(10, 3));
  EXPECT_EQ(EqualPassEpochs(4, 2, 5), Rational(5, 2));
}

TEST(EqualPassEpochsTest, PassCountIsPreserved) {
  for (std::int64_t c = 1; c <= 20; ++c) {
    for (std::int64_t r = 1; r <= 6; ++r) {
      for (std::int64_t e = 1; e <= 10; ++e) {
        EXPECT_EQ(EqualPassEpochs(c, r, e) * c, Rational(r * e));
      }
    }
  }
}

TEST(EqualPassEpochsTest, RejectsNonPositive) {
  EXPECT_THROW(EqualPassEpochs(0, 2, 5), ConfigError);
  EXPECT_THROW(EqualPassEpochs(5, 0, 5), ConfigError);
  EXPECT_THROW(EqualPassEpochs(5, 2, -1), ConfigError);
}

std::string Jsonl(const std::vector<Record>& records) {
  std::ostringstream out;
  RecordWriter writer(out, Format::kJsonl);
  for (const auto& r : records) writer.Write(r);
  return out.str();
}

std::string Stream(const std::string& input, const CopyDescriptor& copy, unsigned jobs,
                   std::size_t batch, std::vector<AuditEntry>* audit) {
  std::istringstream in(input);
  std::ostringstream out;
  RecordReader reader(in, Format::kJsonl);
  RecordWriter writer(out, Format::kJsonl);
  StreamCopy(reader, writer, copy, [&](const AuditEntry& e) { audit->push_back(e); }, jobs, batch);
  return out.str();
}

TEST(StreamCopyTest, BatchingAndJobsDoNotChangeOutput) {
  const auto records = Corpus(101);
  const std::string input = Jsonl(records);
  const auto plan = MakePlan(CompositionMode::kStacked, 3);

  std::vector<AuditEntry> expected_audit;
  const auto expected = Compose(records, plan, &expected_audit);

  std::string streamed;
  std::vector<AuditEntry> audit;
  for (const auto& copy : plan.copies()) {
    const std::string a = Stream(input, copy, 1, 8192, &audit);
    std::vector<AuditEntry> ignored;
    EXPECT_EQ(Stream(input, copy, 4, 7, &ignored), a);
    EXPECT_EQ(Stream(input, copy, 3, 1, &ignored), a);
    streamed += a;
  }
  EXPECT_EQ(streamed, Jsonl(expected));
  EXPECT_EQ(audit, expected_audit);
}

TEST(StreamCopyTest, CleanCopyIsByteIdentical) {
  const std::string input =
      "{ \"text\" : \"Caf\\u00e9 ok\",  \"label\":\"x\", \"n\": 1.50}\n{\"text\":\"b\",\"label\":\"y\"}\n";
  std::vector<AuditEntry> audit;
  EXPECT_EQ(Stream(input, CopyDescriptor{0, std::nullopt}, 2, 1, &audit), input);
  EXPECT_TRUE(audit.empty());
}

}  // namespace
}  // namespace charnoise
