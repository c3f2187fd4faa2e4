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

#ifndef CHARNOISE_ERROR_HPP_
#define CHARNOISE_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace charnoise {

// Invalid configuration or usage. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unreadable input data. The CLI maps this to exit code 1.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
  DataError(const std::string& what, std::size_t line_index)
      : std::runtime_error("line " + std::to_string(line_index + 1) + ": " +
                           what),
        line_index_(line_index) {}

  // 0-based index of the offending line, when known.
  std::optional<std::size_t> line_index() const { return line_index_; }

 private:
  std::optional<std::size_t> line_index_;
};

}  // namespace charnoise

#endif  // CHARNOISE_ERROR_HPP_
