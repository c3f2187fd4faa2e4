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

#ifndef CHARNOISE_DATASET_IO_HPP_
#define CHARNOISE_DATASET_IO_HPP_

#include <filesystem>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "charnoise/error.hpp"
#include "charnoise/unicode.hpp"

namespace charnoise {

enum class Format { kTsv, kJsonl };

inline Format ParseFormat(std::string_view name) {
  if (name == "tsv") return Format::kTsv;
  if (name == "jsonl" || name == "json") return Format::kJsonl;
  throw ConfigError("unknown format '" + std::string(name) + "' (expected tsv or jsonl)");
}

inline std::string_view ToString(Format format) {
  return format == Format::kTsv ? "tsv" : "jsonl";
}

// Infers the format from the extension; .tsv is TSV, everything else JSONL.
inline Format FormatFromPath(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".tsv" || ext == ".txt") return Format::kTsv;
  return Format::kJsonl;
}

// One dataset row. Extras are (key, raw value) pairs in source order: for
// JSONL the value is the verbatim JSON text of the field, for TSV it is the
// column content and the key is "colN" (1-based column number).
struct Record {
  std::string text;
  std::string label;
  std::vector<std::pair<std::string, std::string>> extras;

  friend bool operator==(const Record&, const Record&) = default;
};

// A parsed input line together with its raw bytes.
struct SourceRow {
  std::size_t line_index = 0;
  std::string raw;
  Record record;
  // Byte range of the encoded text field inside `raw` (for JSONL the string
  // literal including its quotes).
  std::size_t text_offset = 0;
  std::size_t text_length = 0;
};

namespace internal {

inline void SkipJsonWhitespace(std::string_view s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
}

// Advances past a JSON string literal starting at s[i] == '"'.
inline void SkipJsonString(std::string_view s, std::size_t& i) {
  ++i;
  while (i < s.size() && s[i] != '"') {
    if (s[i] == '\\') ++i;
    ++i;
  }
  ++i;
}

// Advances past one JSON value. The input is already known to be valid.
inline void SkipJsonValue(std::string_view s, std::size_t& i) {
  if (s[i] == '"') {
    SkipJsonString(s, i);
    return;
  }
  if (s[i] == '{' || s[i] == '[') {
    int depth = 0;
    do {
      if (s[i] == '"') {
        SkipJsonString(s, i);
        continue;
      }
      if (s[i] == '{' || s[i] == '[') ++depth;
      if (s[i] == '}' || s[i] == ']') --depth;
      ++i;
    } while (depth > 0 && i < s.size());
    return;
  }
  while (i < s.size() && s[i] != ',' && s[i] != '}' && s[i] != ']' &&
         s[i] != ' ' && s[i] != '\t' && s[i] != '\r' && s[i] != '\n') {
    ++i;
  }
}

struct JsonMember {
  std::string key;
  std::size_t value_offset;
  std::size_t value_length;
};

// Top-level members of a valid JSON object, with byte spans of their values.
inline std::vector<JsonMember> ScanJsonObject(std::string_view s) {
  std::vector<JsonMember> members;
  std::size_t i = 0;
  SkipJsonWhitespace(s, i);
  ++i;  // '{'
  for (;;) {
    SkipJsonWhitespace(s, i);
    if (s[i] == '}') break;
    const std::size_t key_start = i;
    SkipJsonString(s, i);
    auto key = nlohmann::json::parse(s.substr(key_start, i - key_start)).get<std::string>();
    SkipJsonWhitespace(s, i);
    ++i;  // ':'
    SkipJsonWhitespace(s, i);
    const std::size_t value_start = i;
    SkipJsonValue(s, i);
    members.push_back({std::move(key), value_start, i - value_start});
    SkipJsonWhitespace(s, i);
    if (s[i] == ',') ++i;
  }
  return members;
}

inline std::string_view StripCr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

inline SourceRow ParseTsvRow(std::string line, std::size_t line_index) {
  SourceRow row;
  row.line_index = line_index;
  row.raw = std::move(line);
  const std::string_view body = StripCr(row.raw);
  std::vector<std::string_view> columns;
  std::size_t start = 0;
  for (;;) {
    const auto tab = body.find('\t', start);
    if (tab == std::string_view::npos) {
      columns.push_back(body.substr(start));
      break;
    }
    columns.push_back(body.substr(start, tab - start));
    start = tab + 1;
  }
  if (columns.size() < 2) {
    throw DataError("expected at least 2 tab-separated columns (text, label), got " +
                        std::to_string(columns.size()),
                    line_index);
  }
  row.record.text.assign(columns[0]);
  row.record.label.assign(columns[1]);
  for (std::size_t c = 2; c < columns.size(); ++c) {
    row.record.extras.emplace_back("col" + std::to_string(c + 1), std::string(columns[c]));
  }
  row.text_offset = 0;
  row.text_length = columns[0].size();
  return row;
}

inline SourceRow ParseJsonlRow(std::string line, std::size_t line_index) {
  SourceRow row;
  row.line_index = line_index;
  row.raw = std::move(line);
  const std::string_view body = row.raw;
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("malformed JSON: ") + e.what(), line_index);
  }
  if (!parsed.is_object()) throw DataError("JSONL row is not an object", line_index);
  bool have_text = false;
  bool have_label = false;
  for (auto& member : ScanJsonObject(body)) {
    const auto value = body.substr(member.value_offset, member.value_length);
    if (member.key == "text" || member.key == "label") {
      bool& seen = member.key == "text" ? have_text : have_label;
      if (seen) throw DataError("duplicate \"" + member.key + "\" field", line_index);
      seen = true;
      const auto& field = parsed[member.key];
      if (!field.is_string()) {
        throw DataError("\"" + member.key + "\" must be a string", line_index);
      }
      if (member.key == "text") {
        row.record.text = field.get<std::string>();
        row.text_offset = member.value_offset;
        row.text_length = member.value_length;
      } else {
        row.record.label = field.get<std::string>();
      }
    } else {
      row.record.extras.emplace_back(std::move(member.key), std::string(value));
    }
  }
  if (!have_text) throw DataError("missing \"text\" field", line_index);
  if (!have_label) throw DataError("missing \"label\" field", line_index);
  return row;
}

}  // namespace internal

// Parses one physical line. Throws DataError carrying `line_index`.
inline SourceRow ParseRow(std::string line, std::size_t line_index, Format format) {
  if (!unicode::IsValidUtf8(line)) throw DataError("invalid UTF-8", line_index);
  return format == Format::kTsv ? internal::ParseTsvRow(std::move(line), line_index)
                                : internal::ParseJsonlRow(std::move(line), line_index);
}

// The raw line of `row` with its text field replaced by `text`; everything
// else is kept byte for byte.
inline std::string WithText(const SourceRow& row, std::string_view text, Format format) {
  if (text == row.record.text) return row.raw;
  std::string encoded;
  if (format == Format::kTsv) {
    if (text.find_first_of("\t\n") != std::string_view::npos) {
      throw DataError("text contains a TAB or newline; use JSONL", row.line_index);
    }
    encoded.assign(text);
  } else {
    encoded = nlohmann::json(std::string(text)).dump();
  }
  std::string out = row.raw;
  out.replace(row.text_offset, row.text_length, encoded);
  return out;
}

// Streams rows from a line-oriented dataset. Holds one line at a time.
class RecordReader {
 public:
  RecordReader(std::istream& in, Format format, bool skip_bad = false)
      : in_(&in), format_(format), skip_bad_(skip_bad) {}

  static RecordReader Open(const std::filesystem::path& path, Format format,
                           bool skip_bad = false) {
    auto file = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file) throw DataError("cannot open " + path.string());
    RecordReader reader(*file, format, skip_bad);
    reader.owned_ = std::move(file);
    return reader;
  }

  // Next well-formed row, or nullopt at end of input. Malformed rows throw
  // DataError unless skip_bad was requested, in which case they are counted.
  std::optional<SourceRow> Next() {
    std::string line;
    while (std::getline(*in_, line)) {
      const std::size_t index = next_line_++;
      try {
        return ParseRow(std::move(line), index, format_);
      } catch (const DataError&) {
        if (!skip_bad_) throw;
        ++skipped_;
      }
    }
    if (in_->bad()) throw DataError("read error");
    return std::nullopt;
  }

  std::size_t skipped() const { return skipped_; }
  std::size_t lines_read() const { return next_line_; }
  Format format() const { return format_; }

 private:
  std::unique_ptr<std::istream> owned_;
  std::istream* in_;
  Format format_;
  bool skip_bad_;
  std::size_t next_line_ = 0;
  std::size_t skipped_ = 0;
};

// Writes LF-terminated rows.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format) : out_(&out), format_(format) {}

  static RecordWriter Create(const std::filesystem::path& path, Format format) {
    auto file = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file) throw DataError("cannot create " + path.string());
    RecordWriter writer(*file, format);
    writer.owned_ = std::move(file);
    return writer;
  }

  // Throws DataError if the record cannot be represented in the format.
  void Write(const Record& record) { WriteRaw(Serialize(record, format_)); }

  void WriteRaw(std::string_view line) {
    out_->write(line.data(), static_cast<std::streamsize>(line.size()));
    out_->put('\n');
    if (!*out_) throw DataError("write failed");
  }

  void Flush() {
    out_->flush();
    if (!*out_) throw DataError("write failed");
  }

  static std::string Serialize(const Record& record, Format format) {
    if (format == Format::kTsv) {
      auto check = [](std::string_view field, std::string_view name) {
        if (field.find_first_of("\t\n") != std::string_view::npos) {
          throw DataError(std::string(name) +
                          " contains a TAB or newline, which TSV cannot hold; use JSONL");
        }
      };
      check(record.text, "text");
      check(record.label, "label");
      std::string line = record.text + "\t" + record.label;
      for (const auto& [key, value] : record.extras) {
        check(value, key);
        line += "\t" + value;
      }
      return line;
    }
    std::string line = "{\"text\":" + nlohmann::json(record.text).dump() +
                       ",\"label\":" + nlohmann::json(record.label).dump();
    for (const auto& [key, value] : record.extras) {
      line += "," + nlohmann::json(key).dump() + ":" + value;
    }
    line += "}";
    return line;
  }

 private:
  std::unique_ptr<std::ostream> owned_;
  std::ostream* out_;
  Format format_;
};

inline std::vector<Record> ReadRecords(const std::filesystem::path& path, Format format) {
  auto reader = RecordReader::Open(path, format);
  std::vector<Record> records;
  while (auto row = reader.Next()) records.push_back(std::move(row->record));
  return records;
}

inline void WriteRecords(const std::vector<Record>& records,
                         const std::filesystem::path& path, Format format) {
  auto writer = RecordWriter::Create(path, format);
  for (const auto& r : records) writer.Write(r);
  writer.Flush();
}

}  // namespace charnoise

#endif  // CHARNOISE_DATASET_IO_HPP_
