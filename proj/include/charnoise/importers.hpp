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

#ifndef CHARNOISE_IMPORTERS_HPP_
#define CHARNOISE_IMPORTERS_HPP_

// Converters from upstream dataset distributions to canonical JSONL records.
// Each keeps the sentence text and the sentence-level label; every other
// field it understands goes to extras as a JSON string.
//
//   xSID   CoNLL-style blocks separated by blank lines. "# text: ..." is the
//          text, "# intent: ..." the label, other "# key: value" comments
//          become extras. Token (slot) lines are dropped.
//   MOROCO samples file of "id<sep>text" lines plus a labels file of
//          "id<sep>label" lines, joined on id; an optional dialect-labels
//          file with the same shape adds a "dialect" extra.
//   TASS   delimited rows; text, label and id columns are configurable.

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "charnoise/dataset_io.hpp"
#include "charnoise/error.hpp"

namespace charnoise {

namespace internal {

inline std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::string JsonString(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

inline std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace internal

struct ImportSummary {
  std::size_t records = 0;
};

inline ImportSummary ImportXsid(std::istream& in, RecordWriter& out) {
  ImportSummary summary;
  std::optional<std::string> text;
  std::optional<std::string> label;
  std::vector<std::pair<std::string, std::string>> extras;
  std::size_t block_start = 0;
  bool in_block = false;

  auto flush = [&] {
    if (!in_block) return;
    if (!text) throw DataError("xSID block has no '# text:' line", block_start);
    if (!label) throw DataError("xSID block has no '# intent:' line", block_start);
    out.Write(Record{*text, *label, extras});
    ++summary.records;
    text.reset();
    label.reset();
    extras.clear();
    in_block = false;
  };

  std::string line;
  std::size_t index = 0;
  for (; std::getline(in, line); ++index) {
    const auto body = internal::Trim(line);
    if (body.empty()) {
      flush();
      continue;
    }
    if (!in_block) {
      in_block = true;
      block_start = index;
    }
    if (body.front() != '#') continue;  // token line
    auto comment = internal::Trim(body.substr(1));
    const auto colon = comment.find(':');
    if (colon == std::string_view::npos) continue;
    const auto key = internal::Trim(comment.substr(0, colon));
    const auto value = internal::Trim(comment.substr(colon + 1));
    if (key == "text") {
      text.emplace(value);
    } else if (key == "intent") {
      label.emplace(value);
    } else {
      extras.emplace_back(std::string(key), internal::JsonString(value));
    }
  }
  flush();
  return summary;
}

inline ImportSummary ImportMoroco(std::istream& samples, std::istream& labels,
                                  std::istream* dialects, RecordWriter& out,
                                  char sep = '\t') {
  auto read_map = [sep](std::istream& in, std::string_view what) {
    std::unordered_map<std::string, std::string> map;
    std::string line;
    for (std::size_t index = 0; std::getline(in, line); ++index) {
      const auto body = internal::Trim(line);
      if (body.empty()) continue;
      const auto pos = body.find(sep);
      if (pos == std::string_view::npos) {
        throw DataError(std::string(what) + ": expected 'id<sep>value'", index);
      }
      map.emplace(std::string(internal::Trim(body.substr(0, pos))),
                  std::string(internal::Trim(body.substr(pos + 1))));
    }
    return map;
  };
  const auto label_map = read_map(labels, "labels");
  std::unordered_map<std::string, std::string> dialect_map;
  if (dialects != nullptr) dialect_map = read_map(*dialects, "dialect labels");

  ImportSummary summary;
  std::string line;
  for (std::size_t index = 0; std::getline(samples, line); ++index) {
    std::string_view body = line;
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
    if (internal::Trim(body).empty()) continue;
    const auto pos = body.find(sep);
    if (pos == std::string_view::npos) {
      throw DataError("samples: expected 'id<sep>text'", index);
    }
    const std::string id(internal::Trim(body.substr(0, pos)));
    std::string text(body.substr(pos + 1));
    for (char& c : text) {
      if (c == '\t') c = ' ';
    }
    const auto label = label_map.find(id);
    if (label == label_map.end()) throw DataError("no label for sample id '" + id + "'", index);
    Record record{std::move(text), label->second, {{"id", internal::JsonString(id)}}};
    if (dialects != nullptr) {
      const auto dialect = dialect_map.find(id);
      if (dialect == dialect_map.end()) {
        throw DataError("no dialect label for sample id '" + id + "'", index);
      }
      record.extras.emplace_back("dialect", internal::JsonString(dialect->second));
    }
    out.Write(record);
    ++summary.records;
  }
  return summary;
}

struct TassColumns {
  std::size_t text = 1;
  std::size_t label = 2;
  std::optional<std::size_t> id = 0;
  bool header = false;
  char sep = '\t';
};

inline ImportSummary ImportTass(std::istream& in, RecordWriter& out, const TassColumns& columns = {}) {
  ImportSummary summary;
  std::string line;
  for (std::size_t index = 0; std::getline(in, line); ++index) {
    if (index == 0 && columns.header) continue;
    std::string_view body = line;
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
    if (internal::Trim(body).empty()) continue;
    const auto fields = internal::Split(body, columns.sep);
    std::size_t needed = std::max(columns.text, columns.label);
    if (columns.id) needed = std::max(needed, *columns.id);
    if (fields.size() <= needed) {
      throw DataError("expected at least " + std::to_string(needed + 1) + " columns, got " +
                          std::to_string(fields.size()),
                      index);
    }
    Record record{std::string(fields[columns.text]), std::string(internal::Trim(fields[columns.label])), {}};
    if (columns.id) record.extras.emplace_back("id", internal::JsonString(fields[*columns.id]));
    out.Write(record);
    ++summary.records;
  }
  return summary;
}

}  // namespace charnoise

#endif  // CHARNOISE_IMPORTERS_HPP_
