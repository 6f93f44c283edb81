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

#include "patternlab/pattern_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "patternlab/errors.h"

namespace patternlab {
namespace {

using Json = nlohmann::ordered_json;

Json ParseDocument(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into line/column.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t k = 0; k + 1 < limit; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError("parse error at line " + std::to_string(line) +
                     ", column " + std::to_string(column) + ": " + e.what());
  }
}

std::int64_t RequireInt(const Json& doc, const char* field) {
  if (!doc.is_object()) throw InputError("document root must be an object");
  auto it = doc.find(field);
  if (it == doc.end()) {
    throw InputError(std::string("missing field \"") + field + "\"");
  }
  if (!it->is_number_integer()) {
    throw InputError(std::string("field \"") + field + "\" must be an integer");
  }
  return it->get<std::int64_t>();
}

std::vector<std::vector<std::int64_t>> RequireEdges(const Json& doc) {
  auto it = doc.find("edges");
  if (it == doc.end()) throw InputError("missing field \"edges\"");
  if (!it->is_array()) throw InputError("field \"edges\" must be an array");
  std::vector<std::vector<std::int64_t>> edges;
  for (std::size_t k = 0; k < it->size(); ++k) {
    const Json& edge = (*it)[k];
    if (!edge.is_array()) {
      throw InputError("edges[" + std::to_string(k) + "] must be an array");
    }
    std::vector<std::int64_t> items;
    for (std::size_t j = 0; j < edge.size(); ++j) {
      if (!edge[j].is_number_integer()) {
        throw InputError("edges[" + std::to_string(k) + "][" +
                         std::to_string(j) + "] must be an integer");
      }
      items.push_back(edge[j].get<std::int64_t>());
    }
    edges.push_back(std::move(items));
  }
  return edges;
}

}  // namespace

std::string SerializePattern(const Pattern& p) {
  Json doc;
  doc["r"] = p.r();
  doc["m"] = p.m();
  Json edges = Json::array();
  for (const Multiset& e : p.edges()) {
    Json edge = Json::array();
    for (Index i : e.items()) edge.push_back(i + 1);
    edges.push_back(std::move(edge));
  }
  doc["edges"] = std::move(edges);
  return doc.dump();
}

Pattern DeserializePattern(std::string_view text,
                           std::vector<Diagnostic>* warnings) {
  const Json doc = ParseDocument(text);
  RawPattern raw;
  raw.r = RequireInt(doc, "r");
  raw.m = RequireInt(doc, "m");
  raw.edges = RequireEdges(doc);
  return Pattern::FromRaw(raw, warnings);
}

std::string SerializeHypergraph(const Hypergraph& g) {
  Json doc;
  doc["r"] = g.r();
  doc["n"] = g.n();
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json edge = Json::array();
    for (Index v : e) edge.push_back(v + 1);
    edges.push_back(std::move(edge));
  }
  doc["edges"] = std::move(edges);
  return doc.dump();
}

Hypergraph DeserializeHypergraph(std::string_view text) {
  const Json doc = ParseDocument(text);
  const std::int64_t r = RequireInt(doc, "r");
  const std::int64_t n = RequireInt(doc, "n");
  if (r < 2) throw InputError("field \"r\" must be >= 2");
  if (n < 1) throw InputError("field \"n\" must be >= 1");
  std::vector<std::vector<Index>> edges;
  const auto raw_edges = RequireEdges(doc);
  for (std::size_t k = 0; k < raw_edges.size(); ++k) {
    std::vector<Index> edge;
    for (std::int64_t v : raw_edges[k]) {
      if (v < 1 || v > n) {
        throw InputError("edges[" + std::to_string(k) + "]: vertex " +
                         std::to_string(v) + " outside [1, " +
                         std::to_string(n) + "]");
      }
      edge.push_back(static_cast<Index>(v - 1));
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph(static_cast<std::size_t>(n), static_cast<std::size_t>(r),
                    std::move(edges));
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace patternlab
