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

#ifndef CHARNOISE_NOISER_HPP_
#define CHARNOISE_NOISER_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "charnoise/composer.hpp"
#include "charnoise/edit_engine.hpp"
#include "charnoise/error.hpp"
#include "charnoise/rational.hpp"
#include "charnoise/word_model.hpp"

namespace charnoise {

// Splits "insert,delete" into edit types.
inline std::vector<EditType> ParseEditTypes(std::string_view list) {
  std::vector<EditType> types;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    const auto name = list.substr(start, end - start);
    if (!name.empty()) types.push_back(ParseEditType(name));
    start = end + 1;
  }
  return types;
}

inline std::uint64_t ParseSeed(std::string_view text) {
  std::uint64_t value = 0;
  if (text.empty()) throw ConfigError("empty seed");
  for (char c : text) {
    if (c < '0' || c > '9') throw ConfigError("seed must be a non-negative integer");
    const std::uint64_t next = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (next / 10 != value) throw ConfigError("seed does not fit in 64 bits");
    value = next;
  }
  return value;
}

// Immutable noising handle for embedding hosts. Configuration errors surface
// at construction; calls never fail on configuration.
class Noiser {
 public:
  explicit Noiser(NoiseConfig config) : config_(std::move(config)) { config_.Validate(); }

  // Keys: level (required; "0.5" or "50%"), alphabet (required; language or
  // file), types (default all four), mix (default uniform), seed (default 0),
  // match_case ("true"/"false", default false).
  static Noiser FromConfigMap(const std::map<std::string, std::string>& options) {
    static const std::set<std::string> kKnown = {"level", "alphabet", "types", "mix", "seed",
                                                 "match_case"};
    for (const auto& [key, value] : options) {
      if (!kKnown.contains(key)) throw ConfigError("unknown noiser option '" + key + "'");
    }
    auto required = [&](const std::string& key) -> const std::string& {
      const auto it = options.find(key);
      if (it == options.end()) throw ConfigError("noiser option '" + key + "' is required");
      return it->second;
    };
    auto optional = [&](const std::string& key, std::string fallback) {
      const auto it = options.find(key);
      return it == options.end() ? fallback : it->second;
    };
    const std::string match_case = optional("match_case", "false");
    if (match_case != "true" && match_case != "false") {
      throw ConfigError("match_case must be true or false");
    }
    return Noiser(NoiseConfig{ParseLevel(required("level")),
                              ParseEditTypes(optional("types", "insert,delete,replace,swap")),
                              ParseMixMode(optional("mix", "uniform")),
                              LoadAlphabet(required("alphabet")),
                              ParseSeed(optional("seed", "0")), match_case == "true"});
  }

  // Same result as the `noise` command for the line at `line_index`.
  std::string NoiseSentence(std::string_view text, std::uint64_t line_index) const {
    return NoiseLine(text, config_, {0, line_index}).text;
  }

  NoisedLine NoiseSentenceAudited(std::string_view text, std::uint64_t line_index) const {
    return NoiseLine(text, config_, {0, line_index});
  }

  // Same result as the `compose` command; the handle's types and mix are
  // ignored because the composition mode fixes them.
  std::vector<Record> Compose(std::span<const Record> records, CompositionMode mode) const {
    return charnoise::Compose(records, Plan(mode));
  }

  CompositionPlan Plan(CompositionMode mode) const {
    return CompositionPlan::Make(mode, config_.level, config_.alphabet, config_.seed,
                                 config_.match_case);
  }

  const NoiseConfig& config() const { return config_; }

 private:
  NoiseConfig config_;
};

}  // namespace charnoise

#endif  // CHARNOISE_NOISER_HPP_
