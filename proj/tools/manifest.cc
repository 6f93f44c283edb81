// Copyright 2026 The patternlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "manifest.h"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

#include "patternlab/pattern_io.h"

namespace patternlab::tools {

std::string Sha256Hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length,
                 EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int k = 0; k < length; ++k) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[k]);
    hex += buf;
  }
  return hex;
}

std::string RunManifest::AddInput(const std::string& path) {
  std::string contents = ReadTextFile(path);
  inputs.emplace_back(path, Sha256Hex(contents));
  return contents;
}

Json RunManifest::ToJson() const {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["config"] = config;
  j["seed"] = seed;
  Json files = Json::array();
  for (const auto& [path, hash] : inputs) {
    files.push_back(Json{{"path", path}, {"sha256", hash}});
  }
  j["inputs"] = std::move(files);
  if (wall_clock_seconds) j["wall_clock_seconds"] = *wall_clock_seconds;
  return j;
}

}  // namespace patternlab::tools
