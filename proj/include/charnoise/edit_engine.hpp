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

#ifndef CHARNOISE_EDIT_ENGINE_HPP_
#define CHARNOISE_EDIT_ENGINE_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "charnoise/error.hpp"
#include "charnoise/random_stream.hpp"
#include "charnoise/rational.hpp"
#include "charnoise/unicode.hpp"
#include "charnoise/word_model.hpp"

namespace charnoise {

enum class EditType : std::uint8_t { kInsert, kDelete, kReplace, kSwap };

inline constexpr std::array<EditType, 4> kAllEditTypes = {
    EditType::kInsert, EditType::kDelete, EditType::kReplace, EditType::kSwap};

inline std::string_view ToString(EditType type) {
  switch (type) {
    case EditType::kInsert: return "insert";
    case EditType::kDelete: return "delete";
    case EditType::kReplace: return "replace";
    case EditType::kSwap: return "swap";
  }
  return "?";
}

inline EditType ParseEditType(std::string_view name) {
  for (EditType t : kAllEditTypes) {
    if (ToString(t) == name) return t;
  }
  throw ConfigError("unknown edit type '" + std::string(name) +
                    "' (expected insert, delete, replace or swap)");
}

// One character edit. Indices are code point positions in the word.
// Insert: [0, len]; Delete and Replace: [0, len); Swap: [0, len - 1), and
// exchanges the characters at index and index + 1.
struct Edit {
  EditType type;
  std::size_t index;
  char32_t ch = 0;  // Insert and Replace only.

  static Edit Insert(std::size_t index, char32_t ch) { return {EditType::kInsert, index, ch}; }
  static Edit Delete(std::size_t index) { return {EditType::kDelete, index, 0}; }
  static Edit Replace(std::size_t index, char32_t ch) { return {EditType::kReplace, index, ch}; }
  static Edit Swap(std::size_t index) { return {EditType::kSwap, index, 0}; }

  bool has_char() const {
    return type == EditType::kInsert || type == EditType::kReplace;
  }

  friend bool operator==(const Edit&, const Edit&) = default;
};

inline std::u32string ApplyEdit(std::u32string word, const Edit& edit) {
  if (!IsWord(word)) {
    throw std::invalid_argument("edits apply only to non-empty alphabetic words");
  }
  if (edit.has_char() && !unicode::IsAlphabetic(edit.ch)) {
    throw std::invalid_argument("edit character is not alphabetic");
  }
  const std::size_t len = word.size();
  const std::size_t limit = edit.type == EditType::kInsert ? len + 1
                            : edit.type == EditType::kSwap ? len - 1
                                                           : len;
  if (edit.index >= limit) {
    throw std::out_of_range(std::string(ToString(edit.type)) + " index " +
                            std::to_string(edit.index) +
                            " out of range for word of length " +
                            std::to_string(len));
  }
  switch (edit.type) {
    case EditType::kInsert: word.insert(edit.index, 1, edit.ch); break;
    case EditType::kDelete: word.erase(edit.index, 1); break;
    case EditType::kReplace: word[edit.index] = edit.ch; break;
    case EditType::kSwap: std::swap(word[edit.index], word[edit.index + 1]); break;
  }
  return word;
}

inline std::string ApplyEdit(std::string_view word, const Edit& edit) {
  return unicode::ToUtf8(ApplyEdit(unicode::ToUtf32(word), edit));
}

// Whether `type` can fire on a word of `length` characters. Delete would
// empty a one-letter word and Swap has no valid index there.
inline bool IsApplicable(EditType type, std::size_t length) {
  switch (type) {
    case EditType::kInsert:
    case EditType::kReplace: return length >= 1;
    case EditType::kDelete:
    case EditType::kSwap: return length >= 2;
  }
  return false;
}

// Samples one edit of `type` for `word`, or nullopt when the type is not
// applicable. Random draws, in order: the index, then (Insert/Replace) the
// letter. Replace never picks the letter already at the index (compared
// after case folding). With `match_case`, an inserted letter is upper-cased
// when the character before it (or after it, at index 0) is upper case.
inline std::optional<Edit> SampleEdit(std::u32string_view word, EditType type,
                                      const Alphabet& alphabet,
                                      RandomStream& rng,
                                      bool match_case = false) {
  const std::size_t len = word.size();
  if (!IsApplicable(type, len)) return std::nullopt;
  switch (type) {
    case EditType::kInsert: {
      const auto index = static_cast<std::size_t>(rng.Below(len + 1));
      char32_t ch = alphabet[static_cast<std::size_t>(rng.Below(alphabet.size()))];
      if (match_case) {
        const char32_t neighbor = index > 0 ? word[index - 1] : word[index];
        if (unicode::IsUpper(neighbor)) ch = unicode::ToUpper(ch);
      }
      return Edit::Insert(index, ch);
    }
    case EditType::kDelete:
      return Edit::Delete(static_cast<std::size_t>(rng.Below(len)));
    case EditType::kReplace: {
      const auto index = static_cast<std::size_t>(rng.Below(len));
      const auto excluded = alphabet.IndexOf(unicode::FoldCase(word[index]));
      const std::size_t candidates = alphabet.size() - (excluded ? 1 : 0);
      if (candidates == 0) {
        throw ConfigError("alphabet has no replacement candidate for '" +
                          unicode::ToUtf8(word[index]) + "'");
      }
      auto pick = static_cast<std::size_t>(rng.Below(candidates));
      if (excluded && pick >= *excluded) ++pick;
      return Edit::Replace(index, alphabet[pick]);
    }
    case EditType::kSwap:
      return Edit::Swap(static_cast<std::size_t>(rng.Below(len - 1)));
  }
  return std::nullopt;
}

enum class MixMode : std::uint8_t { kSingleType, kUniformMix };

inline MixMode ParseMixMode(std::string_view name) {
  if (name == "single" || name == "single-type") return MixMode::kSingleType;
  if (name == "uniform" || name == "uniform-mix") return MixMode::kUniformMix;
  throw ConfigError("unknown mix mode '" + std::string(name) +
                    "' (expected single or uniform)");
}

inline std::string_view ToString(MixMode mode) {
  return mode == MixMode::kSingleType ? "single" : "uniform";
}

struct NoiseConfig {
  Rational level;
  std::vector<EditType> types;
  MixMode mix = MixMode::kUniformMix;
  Alphabet alphabet;
  std::uint64_t seed = 0;
  bool match_case = false;

  bool Uses(EditType type) const {
    return std::find(types.begin(), types.end(), type) != types.end();
  }

  // Throws ConfigError.
  void Validate() const {
    if (level < Rational(0) || level > Rational(1)) {
      throw ConfigError("noise level must be within [0, 1]");
    }
    if (types.empty()) throw ConfigError("at least one edit type is required");
    for (std::size_t i = 0; i < types.size(); ++i) {
      for (std::size_t j = i + 1; j < types.size(); ++j) {
        if (types[i] == types[j]) {
          throw ConfigError("edit type '" + std::string(ToString(types[i])) +
                            "' listed twice");
        }
      }
    }
    if (mix == MixMode::kSingleType && types.size() != 1) {
      throw ConfigError("single-type mode requires exactly one edit type");
    }
    if (Uses(EditType::kReplace) && alphabet.size() < 2) {
      throw ConfigError("replace noise needs an alphabet of at least two letters");
    }
  }
};

struct StreamKey {
  std::uint64_t copy_index = 0;
  std::uint64_t line_index = 0;
};

struct AuditEntry {
  std::uint64_t copy_index = 0;
  std::uint64_t line_index = 0;
  std::uint64_t word_index = 0;  // Counts Word segments only.
  std::string original_word;
  std::string noised_word;
  Edit edit;

  friend bool operator==(const AuditEntry&, const AuditEntry&) = default;
};

// Audit log line. Field names and order are part of the file format.
inline nlohmann::ordered_json ToJson(const AuditEntry& e) {
  nlohmann::ordered_json j;
  j["copy"] = e.copy_index;
  j["line"] = e.line_index;
  j["word"] = e.word_index;
  j["orig"] = e.original_word;
  j["noised"] = e.noised_word;
  j["edit_type"] = ToString(e.edit.type);
  j["index"] = e.edit.index;
  if (e.edit.has_char()) {
    j["char"] = unicode::ToUtf8(e.edit.ch);
  } else {
    j["char"] = nullptr;
  }
  return j;
}

// Throws DataError on a malformed entry.
inline AuditEntry AuditEntryFromJson(const nlohmann::json& j) {
  try {
    AuditEntry e;
    e.copy_index = j.at("copy").get<std::uint64_t>();
    e.line_index = j.at("line").get<std::uint64_t>();
    e.word_index = j.at("word").get<std::uint64_t>();
    e.original_word = j.at("orig").get<std::string>();
    e.noised_word = j.at("noised").get<std::string>();
    e.edit.type = ParseEditType(j.at("edit_type").get<std::string>());
    e.edit.index = j.at("index").get<std::size_t>();
    const auto& ch = j.at("char");
    if (e.edit.has_char()) {
      const auto cps = unicode::ToUtf32(ch.get<std::string>());
      if (cps.size() != 1) throw DataError("audit char must be one character");
      e.edit.ch = cps.front();
    } else if (!ch.is_null()) {
      throw DataError("audit char must be null for delete and swap");
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw DataError(std::string("malformed audit entry: ") + ex.what());
  } catch (const ConfigError& ex) {
    throw DataError(std::string("malformed audit entry: ") + ex.what());
  }
}

struct NoisedLine {
  std::string text;
  std::vector<AuditEntry> audit;
};

// Noises one line. Per Word segment, in order: one Bernoulli(level) draw;
// if selected, in uniform-mix mode one draw choosing among the configured
// types applicable to the word; then the SampleEdit draws. A selected word
// with no applicable type is left unchanged and is not audited. Non-word
// segments are copied verbatim. The result depends only on (line, config,
// key). `config` must already be validated.
inline NoisedLine NoiseLine(std::string_view line, const NoiseConfig& config,
                            StreamKey key) {
  NoisedLine result;
  if (config.level == Rational(0)) {
    result.text.assign(line);
    return result;
  }
  RandomStream rng(config.seed, key.copy_index, key.line_index);
  result.text.reserve(line.size() + 8);
  std::uint64_t word_index = 0;
  std::array<EditType, 4> applicable{};
  for (const Segment& segment : SegmentLine(line)) {
    if (!segment.is_word()) {
      result.text.append(segment.text);
      continue;
    }
    const std::uint64_t this_word = word_index++;
    if (!rng.Bernoulli(config.level)) {
      result.text.append(segment.text);
      continue;
    }
    const std::u32string word = unicode::ToUtf32(segment.text);
    std::optional<EditType> type;
    if (config.mix == MixMode::kSingleType) {
      type = config.types.front();
    } else {
      std::size_t n = 0;
      for (EditType t : config.types) {
        if (IsApplicable(t, word.size())) applicable[n++] = t;
      }
      if (n > 0) type = applicable[static_cast<std::size_t>(rng.Below(n))];
    }
    std::optional<Edit> edit;
    if (type) edit = SampleEdit(word, *type, config.alphabet, rng, config.match_case);
    if (!edit) {
      result.text.append(segment.text);
      continue;
    }
    std::string noised = unicode::ToUtf8(ApplyEdit(word, *edit));
    result.text.append(noised);
    result.audit.push_back({key.copy_index, key.line_index, this_word,
                            std::string(segment.text), std::move(noised), *edit});
  }
  return result;
}

}  // namespace charnoise

#endif  // CHARNOISE_EDIT_ENGINE_HPP_
