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

#ifndef CHARNOISE_TOKENIZER_HPP_
#define CHARNOISE_TOKENIZER_HPP_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "charnoise/error.hpp"
#include "charnoise/unicode.hpp"
#include "charnoise/word_model.hpp"

namespace charnoise {

inline constexpr std::string_view kUnknownToken = "[UNK]";
inline constexpr std::string_view kContinuationPrefix = "##";
// Words longer than this (in characters) map straight to the unknown token.
inline constexpr std::size_t kMaxWordChars = 100;

struct NormalizationFlags {
  bool lowercase = true;
  bool strip_accents = false;
};

// Simple case folding and/or canonical decomposition with nonspacing marks
// removed.
inline std::string Normalize(std::string_view text, NormalizationFlags flags) {
  if (!flags.lowercase && !flags.strip_accents) return std::string(text);
  std::u32string cps = unicode::ToUtf32(text);
  if (flags.lowercase) {
    for (char32_t& c : cps) c = unicode::FoldCase(c);
  }
  if (flags.strip_accents) {
    cps = unicode::Decompose(cps);
    std::erase_if(cps, unicode::IsNonspacingMark);
  }
  return unicode::ToUtf8(cps);
}

// Subword vocabulary: one piece per line, line number = id. Continuation
// pieces carry the "##" prefix.
class Vocab {
 public:
  static Vocab FromPieces(std::vector<std::string> pieces) {
    Vocab vocab;
    vocab.pieces_ = std::move(pieces);
    if (vocab.pieces_.empty()) throw ConfigError("vocabulary is empty");
    vocab.ids_.reserve(vocab.pieces_.size());
    for (std::size_t id = 0; id < vocab.pieces_.size(); ++id) {
      const std::string& piece = vocab.pieces_[id];
      if (piece.empty()) {
        throw ConfigError("vocabulary entry " + std::to_string(id) + " is empty");
      }
      if (!vocab.ids_.emplace(piece, id).second) {
        throw ConfigError("vocabulary entry '" + piece + "' is duplicated (id " +
                          std::to_string(id) + ")");
      }
      std::string_view body = piece;
      if (body.starts_with(kContinuationPrefix) && body.size() > kContinuationPrefix.size()) {
        body.remove_prefix(kContinuationPrefix.size());
      }
      vocab.max_piece_chars_ = std::max(vocab.max_piece_chars_, unicode::CodePointCount(body));
    }
    if (!vocab.Contains(std::string(kUnknownToken))) {
      throw ConfigError("vocabulary lacks the unknown token " + std::string(kUnknownToken));
    }
    return vocab;
  }

  static Vocab Parse(std::istream& in) {
    std::vector<std::string> pieces;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!unicode::IsValidUtf8(line)) {
        throw ConfigError("vocabulary line " + std::to_string(pieces.size() + 1) +
                          " is not valid UTF-8");
      }
      pieces.push_back(std::move(line));
    }
    return FromPieces(std::move(pieces));
  }

  static Vocab Load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open vocabulary " + path.string());
    return Parse(in);
  }

  bool Contains(const std::string& piece) const { return ids_.find(piece) != ids_.end(); }

  std::optional<std::size_t> IdOf(const std::string& piece) const {
    const auto it = ids_.find(piece);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const { return pieces_.size(); }
  const std::vector<std::string>& pieces() const { return pieces_; }
  // Longest piece in characters, continuation prefix excluded.
  std::size_t max_piece_chars() const { return max_piece_chars_; }

 private:
  Vocab() = default;

  std::vector<std::string> pieces_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::size_t max_piece_chars_ = 0;
};

// Greedy longest-match-first segmentation of an already normalized word.
// If some position has no matching piece the whole word is [UNK].
inline std::vector<std::string> TokenizeWord(std::u32string_view word, const Vocab& vocab) {
  if (word.empty()) return {};
  if (word.size() > kMaxWordChars) return {std::string(kUnknownToken)};
  std::vector<std::string> tokens;
  std::string candidate;
  std::size_t start = 0;
  while (start < word.size()) {
    std::size_t end = std::min(word.size(), start + vocab.max_piece_chars());
    bool found = false;
    for (; end > start; --end) {
      candidate.clear();
      if (start > 0) candidate.append(kContinuationPrefix);
      for (std::size_t i = start; i < end; ++i) unicode::AppendUtf8(candidate, word[i]);
      if (vocab.Contains(candidate)) {
        found = true;
        break;
      }
    }
    if (!found) return {std::string(kUnknownToken)};
    tokens.push_back(candidate);
    start = end;
  }
  return tokens;
}

inline std::vector<std::string> TokenizeWord(std::string_view word, const Vocab& vocab) {
  return TokenizeWord(unicode::ToUtf32(word), vocab);
}

// Normalizes `text`, splits it with the word/non-word segment model and
// tokenizes each word. Whitespace is dropped; any other non-word character
// is its own token if the vocabulary has it, else [UNK].
template <typename Emit>
void TokenizeText(std::string_view text, const Vocab& vocab, NormalizationFlags flags, Emit&& emit) {
  const std::string normalized = Normalize(text, flags);
  std::string piece;
  for (const Segment& segment : SegmentLine(normalized)) {
    if (segment.is_word()) {
      for (auto& token : TokenizeWord(segment.text, vocab)) emit(std::move(token));
      continue;
    }
    std::size_t pos = 0;
    while (pos < segment.text.size()) {
      const auto c = unicode::NextCodePoint(segment.text, pos);
      if (c >= 0 && unicode::IsWhitespace(static_cast<char32_t>(c))) continue;
      piece = c < 0 ? std::string(kUnknownToken) : unicode::ToUtf8(static_cast<char32_t>(c));
      emit(vocab.Contains(piece) ? piece : std::string(kUnknownToken));
    }
  }
}

inline std::vector<std::string> TokenizeText(std::string_view text, const Vocab& vocab,
                                             NormalizationFlags flags = {}) {
  std::vector<std::string> tokens;
  TokenizeText(text, vocab, flags, [&](std::string t) { tokens.push_back(std::move(t)); });
  return tokens;
}

struct CorpusToken {
  std::size_t record_index;
  std::string token;
};

// Tokenizes every text in order, tagging tokens with their record index.
template <typename TextRange, typename Emit>
void TokenizeCorpus(const TextRange& texts, const Vocab& vocab, NormalizationFlags flags, Emit&& emit) {
  std::size_t index = 0;
  for (const auto& text : texts) {
    TokenizeText(std::string_view(text), vocab, flags,
                 [&](std::string t) { emit(CorpusToken{index, std::move(t)}); });
    ++index;
  }
}

}  // namespace charnoise

#endif  // CHARNOISE_TOKENIZER_HPP_
