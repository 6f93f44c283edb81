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

#ifndef PATTERNLAB_TOOLS_JSON_REPORTS_H_
#define PATTERNLAB_TOOLS_JSON_REPORTS_H_

#include <span>
#include <string>

#include "json.hpp"
#include "patternlab/blowup.h"
#include "patternlab/catalog.h"
#include "patternlab/grid_oracle.h"
#include "patternlab/lagrangian.h"
#include "patternlab/optimizer.h"
#include "patternlab/pattern.h"
#include "patternlab/pattern_union.h"
#include "patternlab/reduced_objective.h"
#include "patternlab/sequence_check.h"

namespace patternlab::tools {

using Json = nlohmann::ordered_json;

std::string RationalString(const Rational& q);

// Index lists are emitted 1-based throughout.
Json IndicesJson(std::span<const Index> indices);
Json IndicesJson(std::span<const std::size_t> indices);

Json ToJson(const OptimizerConfig& cfg);
Json ToJson(const OptimizerReport& report);
Json ToJson(const GridOracleResult& grid);
Json ToJson(const MinimalityReport& report);
Json ToJson(const UnionLambdaReport& report);
Json ToJson(const UnionLabeling& labeling);
Json ToJson(const CatalogEntry& entry);
Json ToJson(const DensityLimitReport& report);
Json ToJson(const ConstructionReport& report);
Json ToJson(const SequenceCheckReport& report);

// The pattern/hypergraph file documents as JSON values.
Json PatternJson(const Pattern& p);
Json HypergraphJson(const Hypergraph& g);

}  // namespace patternlab::tools

#endif  // PATTERNLAB_TOOLS_JSON_REPORTS_H_
