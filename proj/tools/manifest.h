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

#ifndef PATTERNLAB_TOOLS_MANIFEST_H_
#define PATTERNLAB_TOOLS_MANIFEST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json_reports.h"

namespace patternlab::tools {

inline constexpr char kToolName[] = "patternlab";
inline constexpr char kToolVersion[] = "0.1.0";

// Hex SHA-256 of `data`.
std::string Sha256Hex(const std::string& data);

// Everything needed to reproduce a run. Wall-clock time is recorded only on
// request so that default output is byte-identical across runs.
struct RunManifest {
  std::vector<std::string> command;
  Json config = Json::object();
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, sha256
  std::optional<double> wall_clock_seconds;

  // Reads the file, records its hash and returns its contents.
  std::string AddInput(const std::string& path);
  Json ToJson() const;
};

}  // namespace patternlab::tools

#endif  // PATTERNLAB_TOOLS_MANIFEST_H_
