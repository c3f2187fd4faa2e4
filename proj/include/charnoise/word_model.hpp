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

#ifndef CHARNOISE_WORD_MODEL_HPP_
#define CHARNOISE_WORD_MODEL_HPP_

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charnoise/error.hpp"
#include "charnoise/unicode.hpp"

namespace charnoise {

enum class SegmentKind { kWord, kNonWord };

// A classified span of a line. `text` views the caller's line; `start` and
// `end` are code point offsets into it.
struct Segment {
  SegmentKind kind;
  std::string_view text;
  std::size_t start;
  std::size_t end;

  bool is_word() const { return kind == SegmentKind::kWord; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// Splits `line` into maximal runs of alphabetic and non-alphabetic code
// points. Ill-formed UTF-8 bytes are non-word characters, so joining the
// segments always reproduces the input bytes.
inline std::vector<Segment> SegmentLine(std::string_view line) {
  std::vector<Segment> segments;
  std::size_t pos = 0;
  std::size_t run_byte_start = 0;
  std::size_t run_cp_start = 0;
  std::size_t cp_index = 0;
  bool run_is_word = false;
  while (pos < line.size()) {
    const std::size_t byte_start = pos;
    const auto c = unicode::NextCodePoint(line, pos);
    const bool is_word = c >= 0 && unicode::IsAlphabetic(static_cast<char32_t>(c));
    if (cp_index == 0) {
      run_is_word = is_word;
    } else if (is_word != run_is_word) {
      segments.push_back(
          {run_is_word ? SegmentKind::kWord : SegmentKind::kNonWord,
           line.substr(run_byte_start, byte_start - run_byte_start),
           run_cp_start, cp_index});
      run_byte_start = byte_start;
      run_cp_start = cp_index;
      run_is_word = is_word;
    }
    ++cp_index;
  }
  if (cp_index > 0) {
    segments.push_back({run_is_word ? SegmentKind::kWord : SegmentKind::kNonWord,
                        line.substr(run_byte_start), run_cp_start, cp_index});
  }
  return segments;
}

inline bool IsWord(std::u32string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), unicode::IsAlphabetic);
}

// Ordered set of distinct lowercase alphabetic characters used to sample
// inserted and replacement letters.
class Alphabet {
 public:
  // Throws ConfigError if `letters` violates the alphabet invariants.
  explicit Alphabet(std::u32string letters, std::string language_tag = "")
      : letters_(std::move(letters)), language_tag_(std::move(language_tag)) {
    if (letters_.empty()) throw ConfigError("alphabet is empty");
    std::set<char32_t> seen;
    for (char32_t c : letters_) {
      const auto shown = "'" + unicode::ToUtf8(c) + "'";
      if (!unicode::IsAlphabetic(c)) {
        throw ConfigError("alphabet entry " + shown + " is not alphabetic");
      }
      if (unicode::FoldCase(c) != c) {
        throw ConfigError("alphabet entry " + shown + " is not lowercase");
      }
      if (!seen.insert(c).second) {
        throw ConfigError("alphabet entry " + shown + " is a duplicate");
      }
    }
  }

  const std::u32string& letters() const { return letters_; }
  const std::string& language_tag() const { return language_tag_; }
  std::size_t size() const { return letters_.size(); }
  char32_t operator[](std::size_t i) const { return letters_[i]; }

  std::optional<std::size_t> IndexOf(char32_t c) const {
    const auto pos = letters_.find(c);
    if (pos == std::u32string::npos) return std::nullopt;
    return pos;
  }
  bool Contains(char32_t c) const { return IndexOf(c).has_value(); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::u32string letters_;
  std::string language_tag_;
};

namespace internal {

inline constexpr std::u32string_view kLatinBase = U"abcdefghijklmnopqrstuvwxyz";

struct BuiltinAlphabet {
  std::string_view tag;
  std::u32string_view extras;
};

// Extras appended to a-z. The files under data/alphabets/ carry the same
// letters and are kept in sync by a unit test.
inline constexpr std::array<BuiltinAlphabet, 7> kBuiltinAlphabets = {{
    {"en", U""},
    {"de", U"äöüß"},
    {"it", U"àèéìòù"},
    {"es", U"áéíñóúü"},
    {"ro", U"ăâîșț"},
    {"nl", U"éëïöü"},
    {"da", U"æøå"},
}};

}  // namespace internal

inline std::vector<std::string> BuiltinAlphabetNames() {
  std::vector<std::string> names;
  for (const auto& b : internal::kBuiltinAlphabets) names.emplace_back(b.tag);
  return names;
}

inline std::optional<Alphabet> BuiltinAlphabet(std::string_view language) {
  for (const auto& b : internal::kBuiltinAlphabets) {
    if (b.tag == language) {
      std::u32string letters(internal::kLatinBase);
      letters += b.extras;
      return Alphabet(std::move(letters), std::string(language));
    }
  }
  return std::nullopt;
}

// Alphabet file: UTF-8, one character per line, '#' lines are comments and
// blank lines are skipped.
inline Alphabet ParseAlphabet(std::istream& in, std::string language_tag = "") {
  std::u32string letters;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::u32string cps;
    try {
      cps = unicode::ToUtf32(line);
    } catch (const DataError&) {
      throw ConfigError("alphabet line " + std::to_string(line_no) +
                        ": invalid UTF-8");
    }
    if (cps.size() != 1) {
      throw ConfigError("alphabet line " + std::to_string(line_no) +
                        ": expected exactly one character, got '" + line + "'");
    }
    letters.push_back(cps.front());
  }
  return Alphabet(std::move(letters), std::move(language_tag));
}

// `source` is either a shipped language name (de, en, it, es, ro, nl, da) or
// a path to an alphabet file.
inline Alphabet LoadAlphabet(std::string_view source) {
  if (auto builtin = BuiltinAlphabet(source)) return *std::move(builtin);
  const std::filesystem::path path(source);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    std::string known;
    for (const auto& name : BuiltinAlphabetNames()) {
      known += (known.empty() ? "" : ", ") + name;
    }
    throw ConfigError("unknown alphabet '" + std::string(source) +
                      "' (not a file; shipped languages: " + known + ")");
  }
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open alphabet file " + path.string());
  return ParseAlphabet(in, path.stem().string());
}

// Accumulates the case-folded alphabetic characters of a text stream.
class AlphabetDeriver {
 public:
  void Add(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      const auto c = unicode::NextCodePoint(text, pos);
      if (c < 0 || !unicode::IsAlphabetic(static_cast<char32_t>(c))) continue;
      const char32_t folded = unicode::FoldCase(static_cast<char32_t>(c));
      // A folded form can in principle leave the Alphabetic set; skip it then.
      if (unicode::IsAlphabetic(folded)) letters_.insert(folded);
    }
  }

  // Letters sorted by code point. Throws DataError when none were seen.
  Alphabet Finish() const {
    if (letters_.empty()) throw DataError("corpus contains no alphabetic characters");
    return Alphabet(std::u32string(letters_.begin(), letters_.end()), "derived");
  }

 private:
  std::set<char32_t> letters_;
};

template <typename TextRange>
Alphabet DeriveAlphabet(const TextRange& texts) {
  AlphabetDeriver deriver;
  for (const auto& text : texts) deriver.Add(std::string_view(text));
  return deriver.Finish();
}

}  // namespace charnoise

#endif  // CHARNOISE_WORD_MODEL_HPP_
