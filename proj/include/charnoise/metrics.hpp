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

#ifndef CHARNOISE_METRICS_HPP_
#define CHARNOISE_METRICS_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "charnoise/edit_engine.hpp"
#include "charnoise/error.hpp"
#include "charnoise/rational.hpp"
#include "charnoise/tokenizer.hpp"
#include "charnoise/unicode.hpp"
#include "charnoise/word_model.hpp"

namespace charnoise {

// Distinct subword tokens of a corpus. Never holds the unknown token.
struct VocabSet {
  std::set<std::string> tokens;
  std::string source;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

template <typename TextRange>
VocabSet BuildVocabSet(const TextRange& texts, const Vocab& vocab, NormalizationFlags flags,
                       std::string source = "") {
  VocabSet set{{}, std::move(source)};
  for (const auto& text : texts) {
    TokenizeText(std::string_view(text), vocab, flags, [&](std::string token) {
      if (token != kUnknownToken) set.tokens.insert(std::move(token));
    });
  }
  return set;
}

// Character length of a token with the continuation marker removed.
inline std::size_t TokenLength(std::string_view token) {
  if (token.starts_with(kContinuationPrefix) && token.size() > kContinuationPrefix.size()) {
    token.remove_prefix(kContinuationPrefix.size());
  }
  return unicode::CodePointCount(token);
}

// Mean TokenLength over `tokens`; nullopt when empty.
template <typename TokenRange>
std::optional<Rational> AverageTokenLength(const TokenRange& tokens) {
  std::int64_t total = 0;
  std::int64_t count = 0;
  for (const auto& t : tokens) {
    total += static_cast<std::int64_t>(TokenLength(t));
    ++count;
  }
  if (count == 0) return std::nullopt;
  return Rational(total, count);
}

// Tokens of T absent from S, in sorted order.
inline std::vector<std::string> OovTokens(const VocabSet& source, const VocabSet& target) {
  std::vector<std::string> oov;
  std::set_difference(target.tokens.begin(), target.tokens.end(), source.tokens.begin(),
                      source.tokens.end(), std::back_inserter(oov));
  return oov;
}

// Average length of target tokens missing from the source; nullopt when the
// source covers the target.
inline std::optional<Rational> AvgOovLength(const VocabSet& source, const VocabSet& target) {
  return AverageTokenLength(OovTokens(source, target));
}

struct OverlapReport {
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  std::size_t intersection = 0;
  Rational overlap;
  std::optional<Rational> avg_oov_len;
  std::vector<std::string> oov_tokens;

  // Percentage with one decimal, e.g. "66.7".
  std::string OverlapPercent() const { return FormatOneDecimal(overlap * 100); }
};

// |S ∩ T| / |T|. Throws DataError when T is empty.
inline OverlapReport LexicalOverlap(const VocabSet& source, const VocabSet& target) {
  if (target.empty()) throw DataError("target vocabulary set is empty");
  OverlapReport report;
  report.source_size = source.size();
  report.target_size = target.size();
  report.oov_tokens = OovTokens(source, target);
  report.intersection = target.size() - report.oov_tokens.size();
  report.overlap = Rational(static_cast<std::int64_t>(report.intersection),
                            static_cast<std::int64_t>(report.target_size));
  report.avg_oov_len = AverageTokenLength(report.oov_tokens);
  return report;
}

inline nlohmann::ordered_json ToJson(const OverlapReport& report, bool include_oov_tokens = false) {
  nlohmann::ordered_json j;
  j["overlap_pct"] = std::stod(report.OverlapPercent());
  j["s_size"] = report.source_size;
  j["t_size"] = report.target_size;
  j["intersection"] = report.intersection;
  if (report.avg_oov_len) {
    j["avg_oov_len"] = ToDouble(*report.avg_oov_len);
  } else {
    j["avg_oov_len"] = nullptr;
  }
  if (include_oov_tokens) j["oov_tokens"] = report.oov_tokens;
  return j;
}

struct CopyNoiseStats {
  std::uint64_t copy_index = 0;
  std::size_t eligible_words = 0;
  std::size_t noised_words = 0;
  std::array<std::size_t, 4> per_type{};

  Rational rate() const {
    if (eligible_words == 0) return Rational(0);
    return Rational(static_cast<std::int64_t>(noised_words), static_cast<std::int64_t>(eligible_words));
  }
  // Share of noised words that received `type`.
  Rational share(EditType type) const {
    if (noised_words == 0) return Rational(0);
    return Rational(static_cast<std::int64_t>(per_type[static_cast<std::size_t>(type)]),
                    static_cast<std::int64_t>(noised_words));
  }
};

struct NoiseStats {
  std::vector<CopyNoiseStats> copies;
  CopyNoiseStats total;  // copy_index unused
};

// Cross-checks an audit log against the original corpus texts (one per
// line index) and tallies noise rates. Every entry must name an existing
// line and word, its original word must match the corpus, and replaying its
// edit must reproduce the noised word; otherwise DataError. Eligible words
// are all Word segments of the corpus, counted once per copy. `copies`
// selects the copies to report; by default those present in the log, or
// copy 0 for an empty log.
template <typename TextRange>
NoiseStats ComputeNoiseStats(const std::vector<AuditEntry>& audit, const TextRange& corpus,
                             std::optional<std::vector<std::uint64_t>> copies = std::nullopt) {
  std::vector<std::vector<std::string>> words;
  std::size_t eligible = 0;
  for (const auto& text : corpus) {
    auto& line_words = words.emplace_back();
    for (const auto& s : SegmentLine(std::string_view(text))) {
      if (s.is_word()) line_words.emplace_back(s.text);
    }
    eligible += line_words.size();
  }

  std::set<std::uint64_t> selected;
  if (copies) {
    selected.insert(copies->begin(), copies->end());
  } else {
    for (const auto& e : audit) selected.insert(e.copy_index);
    if (selected.empty()) selected.insert(0);
  }
  std::map<std::uint64_t, CopyNoiseStats> by_copy;
  for (auto c : selected) by_copy[c] = {c, eligible, 0, {}};

  std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> seen;
  for (const auto& e : audit) {
    if (e.line_index >= words.size()) {
      throw DataError("audit entry refers to line " + std::to_string(e.line_index) +
                      " but the corpus has " + std::to_string(words.size()) + " lines");
    }
    const auto& line_words = words[e.line_index];
    if (e.word_index >= line_words.size()) {
      throw DataError("audit entry refers to word " + std::to_string(e.word_index) + " of line " +
                      std::to_string(e.line_index) + " which has " +
                      std::to_string(line_words.size()) + " words");
    }
    if (line_words[e.word_index] != e.original_word) {
      throw DataError("audit entry for line " + std::to_string(e.line_index) + " word " +
                      std::to_string(e.word_index) + " names '" + e.original_word +
                      "' but the corpus has '" + line_words[e.word_index] + "'");
    }
    std::string replayed;
    try {
      replayed = ApplyEdit(std::string_view(e.original_word), e.edit);
    } catch (const std::exception& ex) {
      throw DataError("audit edit cannot be replayed: " + std::string(ex.what()));
    }
    if (replayed != e.noised_word) {
      throw DataError("audit edit on '" + e.original_word + "' yields '" + replayed +
                      "', log says '" + e.noised_word + "'");
    }
    if (!seen.emplace(e.copy_index, e.line_index, e.word_index).second) continue;
    const auto it = by_copy.find(e.copy_index);
    if (it == by_copy.end()) continue;
    ++it->second.noised_words;
    ++it->second.per_type[static_cast<std::size_t>(e.edit.type)];
  }

  NoiseStats stats;
  for (auto& [index, s] : by_copy) {
    stats.total.eligible_words += s.eligible_words;
    stats.total.noised_words += s.noised_words;
    for (std::size_t t = 0; t < 4; ++t) stats.total.per_type[t] += s.per_type[t];
    stats.copies.push_back(s);
  }
  return stats;
}

inline nlohmann::ordered_json ToJson(const CopyNoiseStats& s) {
  nlohmann::ordered_json j;
  j["eligible_words"] = s.eligible_words;
  j["noised_words"] = s.noised_words;
  j["rate"] = ToDouble(s.rate());
  for (EditType t : kAllEditTypes) {
    nlohmann::ordered_json per;
    per["count"] = s.per_type[static_cast<std::size_t>(t)];
    per["share"] = ToDouble(s.share(t));
    j["types"][std::string(ToString(t))] = per;
  }
  return j;
}

inline nlohmann::ordered_json ToJson(const NoiseStats& stats) {
  nlohmann::ordered_json j = ToJson(stats.total);
  j["copies"] = nlohmann::ordered_json::array();
  for (const auto& c : stats.copies) {
    auto cj = ToJson(c);
    cj["copy"] = c.copy_index;
    j["copies"].push_back(cj);
  }
  return j;
}

}  // namespace charnoise

#endif  // CHARNOISE_METRICS_HPP_
