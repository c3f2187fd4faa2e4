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

#include "charnoise/tokenizer.hpp"

#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace charnoise {
namespace {

using Tokens = std::vector<std::string>;

TEST(NormalizeTest, Lowercase) {
  EXPECT_EQ(Normalize("Wird", {}), "wird");
  EXPECT_EQ(Normalize("sonnig", {}), "sonnig");
  EXPECT_EQ(Normalize("Wird", {.lowercase = false}), "Wird");
}

// Hand-written canonical decompositions for the letters used below.
std::string StripWithTable(const std::string& text) {
  static const std::map<std::string, std::string> kBase = {
      {"ü", "u"}, {"Ü", "U"}, {"é", "e"}, {"ñ", "n"}, {"ș", "s"}, {"ă", "a"}, {"å", "a"}};
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    unicode::NextCodePoint(text, pos);
    const std::string ch = text.substr(start, pos - start);
    const auto it = kBase.find(ch);
    out += it == kBase.end() ? ch : it->second;
  }
  return out;
}

TEST(NormalizeTest, StripAccentsAgainstTable) {
  const NormalizationFlags both{.lowercase = true, .strip_accents = true};
  EXPECT_EQ(Normalize("Glück", both), "gluck");
  for (std::string word : {"Glück", "café", "niño", "școală", "Ålborg", "Über"}) {
    std::string lowered = Normalize(word, {});
    EXPECT_EQ(Normalize(word, both), StripWithTable(lowered)) << word;
  }
  // Decomposed input strips the same way.
  EXPECT_EQ(Normalize("Glu\u0308ck", both), "gluck");
  // Non-mark characters are left alone.
  EXPECT_EQ(Normalize("straße, øl", both), "straße, øl");
}

Vocab Toy() { return Vocab::FromPieces({"[UNK]", "a", "ab", "##b", "##c"}); }

TEST(TokenizeWordTest, Examples) {
  EXPECT_EQ(TokenizeWord("abc", Toy()), (Tokens{"ab", "##c"}));
  EXPECT_EQ(TokenizeWord("abd", Toy()), (Tokens{"[UNK]"}));
  EXPECT_EQ(TokenizeWord("a", Toy()), (Tokens{"a"}));
  EXPECT_EQ(TokenizeWord("b", Toy()), (Tokens{"[UNK]"}));
  const auto vocab = Vocab::FromPieces({"[UNK]", "st", "straw", "##raw"});
  EXPECT_EQ(TokenizeWord("straw", vocab), (Tokens{"straw"}));
}

TEST(TokenizeWordTest, LongWordIsUnknown) {
  const auto vocab = Vocab::FromPieces({"[UNK]", "a", "##a"});
  EXPECT_EQ(TokenizeWord(std::string(100, 'a'), vocab).size(), 100u);
  EXPECT_EQ(TokenizeWord(std::string(101, 'a'), vocab), (Tokens{"[UNK]"}));
}

TEST(TokenizeWordTest, MultibyteLetters) {
  const auto vocab = Vocab::FromPieces({"[UNK]", "gr", "grü", "##ße", "##ß", "##e"});
  EXPECT_EQ(TokenizeWord("grüße", vocab), (Tokens{"grü", "##ße"}));
}

const std::vector<std::vector<std::string>>& ToyVocabularies() {
  static const std::vector<std::vector<std::string>> kVocabs = {
      {"[UNK]", "a", "ab", "abc", "b", "##a", "##b", "##c", "##ca", "##bca"},
      {"[UNK]", "a", "b", "c", "aa", "aaa", "##a", "##aa", "##b", "##bb", "##cab"},
      {"[UNK]", "abcd", "ab", "d", "##d", "##cd", "##abc", "##b", "##a"},
  };
  return kVocabs;
}

TEST(TokenizeWordTest, AgreesWithExhaustiveOracle) {
  std::mt19937_64 gen(12);
  for (const auto& pieces : ToyVocabularies()) {
    const auto vocab = Vocab::FromPieces(pieces);
    const testing::GreedyOracle oracle(pieces);
    auto words = testing::AllWords("abcd", 6);
    for (int i = 0; i < 1000; ++i) {
      std::string w;
      for (int n = 7 + static_cast<int>(gen() % 6); n > 0; --n) w += static_cast<char>('a' + gen() % 4);
      words.push_back(w);
    }
    for (const auto& w : words) {
      ASSERT_EQ(TokenizeWord(w, vocab), oracle.Tokenize(w)) << w;
    }
  }
}

std::string Body(const std::string& token) {
  return token.rfind("##", 0) == 0 ? token.substr(2) : token;
}

TEST(TokenizeWordTest, ConcatenationAndGreedyProperties) {
  for (const auto& pieces : ToyVocabularies()) {
    const auto vocab = Vocab::FromPieces(pieces);
    for (const auto& w : testing::AllWords("abcd", 7)) {
      const auto tokens = TokenizeWord(w, vocab);
      if (tokens == Tokens{"[UNK]"}) continue;
      std::string joined;
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::size_t pos = joined.size();
        joined += Body(tokens[i]);
        for (const auto& p : pieces) {
          if (p == "[UNK]" || (pos == 0) == (p.rfind("##", 0) == 0)) continue;
          const std::string body = Body(p);
          if (body.size() > Body(tokens[i]).size()) {
            EXPECT_NE(w.compare(pos, body.size(), body), 0) << w << " at " << pos << ": " << p;
          }
        }
      }
      EXPECT_EQ(joined, w);
    }
  }
}

TEST(TokenizeTextTest, SegmentsAndPunctuation) {
  const auto vocab = Vocab::FromPieces({"[UNK]", "wird", "es", "heute", "sonn", "##ig", "?"});
  EXPECT_EQ(TokenizeText("Wird es heute sonnig?", vocab),
            (Tokens{"wird", "es", "heute", "sonn", "##ig", "?"}));
  EXPECT_EQ(TokenizeText("es, 42!", vocab), (Tokens{"es", "[UNK]", "[UNK]", "[UNK]", "[UNK]"}));
  EXPECT_TRUE(TokenizeText("", vocab).empty());
  EXPECT_TRUE(TokenizeText(" \t ", vocab).empty());
}

TEST(TokenizeCorpusTest, CarriesRecordIndex) {
  const auto vocab = Vocab::FromPieces({"[UNK]", "a", "b"});
  const std::vector<std::string> texts = {"a", "", "b a"};
  std::vector<std::pair<std::size_t, std::string>> got;
  TokenizeCorpus(texts, vocab, {}, [&](CorpusToken t) { got.emplace_back(t.record_index, t.token); });
  const std::vector<std::pair<std::size_t, std::string>> want = {{0, "a"}, {2, "b"}, {2, "a"}};
  EXPECT_EQ(got, want);

  std::vector<std::string> empty_corpus = {""};
  std::size_t count = 0;
  TokenizeCorpus(empty_corpus, vocab, {}, [&](CorpusToken) { ++count; });
  EXPECT_EQ(count, 0u);
}

TEST(VocabTest, ParseAndIds) {
  std::istringstream in("[PAD]\n[UNK]\nab\r\n##c\n");
  const auto vocab = Vocab::Parse(in);
  EXPECT_EQ(vocab.size(), 4u);
  EXPECT_EQ(vocab.IdOf("ab"), 2u);
  EXPECT_EQ(vocab.IdOf("##c"), 3u);
  EXPECT_FALSE(vocab.IdOf("zz").has_value());
  EXPECT_EQ(vocab.max_piece_chars(), 5u);
}

TEST(VocabTest, Errors) {
  EXPECT_THROW(Vocab::FromPieces({}), ConfigError);
  EXPECT_THROW(Vocab::FromPieces({"a", "b"}), ConfigError);
  EXPECT_THROW(Vocab::FromPieces({"[UNK]", "a", "a"}), ConfigError);
  EXPECT_THROW(Vocab::FromPieces({"[UNK]", ""}), ConfigError);
  EXPECT_THROW(Vocab::Load("/nonexistent/vocab.txt"), ConfigError);
}

// Runs only when a German uncased WordPiece vocabulary is provided.
TEST(GermanVocabTest, SonnigAndSunnig) {
  const char* path = std::getenv("CHARNOISE_DE_VOCAB");
  if (path == nullptr) GTEST_SKIP() << "set CHARNOISE_DE_VOCAB to a German uncased vocab.txt";
  const auto vocab = Vocab::Load(path);
  EXPECT_EQ(TokenizeText("sonnig", vocab), (Tokens{"sonn", "##ig"}));
  EXPECT_EQ(TokenizeText("sunnig", vocab), (Tokens{"sun", "##nig"}));
}

}  // namespace
}  // namespace charnoise
