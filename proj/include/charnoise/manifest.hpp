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

#ifndef CHARNOISE_MANIFEST_HPP_
#define CHARNOISE_MANIFEST_HPP_

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "charnoise/error.hpp"

namespace charnoise {

inline constexpr std::string_view kToolVersion = "1.0.0";

// Hex SHA-256 of a file's bytes.
inline std::string Sha256File(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string() + " for hashing");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 unavailable");
  }
  std::array<char, 1 << 16> buffer;
  while (in) {
    in.read(buffer.data(), buffer.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buffer.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &length);
  std::string hex;
  hex.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    char byte[3];
    std::snprintf(byte, sizeof byte, "%02x", digest[i]);
    hex += byte;
  }
  return hex;
}

struct FileDigest {
  std::string flag;  // command-line option that named the file
  std::string path;
  std::string sha256;
};

// Provenance record written next to every command output. `args` is the
// argument vector (without the program name) that reproduces the run.
struct RunManifest {
  std::string tool_version{kToolVersion};
  std::string command;
  std::vector<std::string> args;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::optional<std::uint64_t> seed;
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;

  void AddInput(std::string flag, const std::filesystem::path& path) {
    inputs.push_back({std::move(flag), path.string(), Sha256File(path)});
  }
  void AddOutput(std::string flag, const std::filesystem::path& path) {
    outputs.push_back({std::move(flag), path.string(), Sha256File(path)});
  }

  nlohmann::ordered_json ToJson() const {
    auto files = [](const std::vector<FileDigest>& list) {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& f : list) {
        arr.push_back({{"flag", f.flag}, {"path", f.path}, {"sha256", f.sha256}});
      }
      return arr;
    };
    nlohmann::ordered_json j;
    j["tool"] = "charnoise";
    j["tool_version"] = tool_version;
    j["command"] = command;
    j["args"] = args;
    j["config"] = config;
    if (seed) {
      j["seed"] = *seed;
    } else {
      j["seed"] = nullptr;
    }
    j["inputs"] = files(inputs);
    j["outputs"] = files(outputs);
    return j;
  }

  static RunManifest FromJson(const nlohmann::json& j) {
    try {
      RunManifest m;
      m.tool_version = j.at("tool_version").get<std::string>();
      m.command = j.at("command").get<std::string>();
      m.args = j.at("args").get<std::vector<std::string>>();
      m.config = j.at("config");
      if (!j.at("seed").is_null()) m.seed = j.at("seed").get<std::uint64_t>();
      auto files = [](const nlohmann::json& arr) {
        std::vector<FileDigest> list;
        for (const auto& f : arr) {
          list.push_back({f.at("flag").get<std::string>(), f.at("path").get<std::string>(),
                          f.at("sha256").get<std::string>()});
        }
        return list;
      };
      m.inputs = files(j.at("inputs"));
      m.outputs = files(j.at("outputs"));
      return m;
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string("malformed manifest: ") + e.what());
    }
  }

  static RunManifest Load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open manifest " + path.string());
    try {
      return FromJson(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError(std::string("malformed manifest: ") + e.what());
    }
  }

  void Save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write manifest " + path.string());
    out << ToJson().dump(2) << '\n';
  }
};

inline std::filesystem::path ManifestPathFor(const std::filesystem::path& output) {
  return output.string() + ".manifest.json";
}

}  // namespace charnoise

#endif  // CHARNOISE_MANIFEST_HPP_
