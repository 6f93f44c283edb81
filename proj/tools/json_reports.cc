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

#include "json_reports.h"

#include "patternlab/pattern_io.h"

namespace patternlab::tools {

std::string RationalString(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Json IndicesJson(std::span<const Index> indices) {
  Json out = Json::array();
  for (Index i : indices) out.push_back(i + 1);
  return out;
}

Json IndicesJson(std::span<const std::size_t> indices) {
  Json out = Json::array();
  for (std::size_t i : indices) out.push_back(i + 1);
  return out;
}

Json ToJson(const OptimizerConfig& cfg) {
  Json j;
  j["restarts"] = cfg.restarts;
  j["max_iterations"] = cfg.max_iterations;
  j["tolerance"] = cfg.tolerance;
  j["seed"] = cfg.seed;
  j["support_threshold"] = cfg.support_threshold;
  j["kkt_tolerance"] = cfg.kkt_tolerance;
  j["jobs"] = cfg.jobs;
  return j;
}

Json ToJson(const OptimizerReport& report) {
  Json j;
  j["value"] = report.value;
  j["argmax"] = std::vector<double>(report.argmax.weights().begin(),
                                    report.argmax.weights().end());
  j["support"] = IndicesJson(report.support);
  j["restarts_used"] = report.restarts_used;
  j["converged"] = report.converged;
  j["kkt_residual"] = report.kkt_residual;
  j["oracle_gap"] = report.oracle_gap ? Json(*report.oracle_gap) : Json(nullptr);
  j["bound"] = "lower";
  return j;
}

Json ToJson(const GridOracleResult& grid) {
  Json j;
  j["denominator"] = grid.denominator;
  j["value"] = RationalString(grid.value);
  j["value_float"] = boost::rational_cast<double>(grid.value);
  Json point = Json::array();
  for (std::uint32_t k : grid.argmax_counts) {
    point.push_back(RationalString(Rational(k, grid.denominator)));
  }
  j["argmax"] = std::move(point);
  j["points"] = grid.points;
  return j;
}

Json ToJson(const MinimalityReport& report) {
  Json j;
  j["minimal"] = report.minimal;
  j["lambda"] = report.lambda;
  j["margins"] = report.margins;
  j["margin_tolerance"] = report.margin_tolerance;
  j["converged"] = report.converged;
  j["report"] = ToJson(report.report);
  return j;
}

Json ToJson(const UnionLambdaReport& report) {
  Json j;
  j["union_value"] = report.union_value;
  j["inner_value"] = report.inner_value;
  j["f_value"] = report.f_value;
  j["gap"] = report.gap;
  j["union_m"] = report.union_m;
  j["converged"] = report.converged;
  return j;
}

Json ToJson(const UnionLabeling& labeling) {
  Json j;
  j["m1"] = labeling.m1();
  j["m2"] = labeling.m2();
  j["glue"] = IndicesJson(labeling.glue());
  Json labels = Json::array();
  for (const IndexOrigin& o : labeling.origin()) labels.push_back(o.Label());
  j["labels"] = std::move(labels);
  return j;
}

Json ToJson(const CatalogEntry& entry) {
  Json j;
  j["value"] = RationalString(entry.value);
  j["value_float"] = boost::rational_cast<double>(entry.value);
  j["tag"] = entry.tag;
  j["kind"] = entry.kind;
  j["citation"] = entry.citation;
  if (entry.family_parameter != 0) j["l"] = entry.family_parameter;
  if (!entry.note.empty()) j["note"] = entry.note;
  return j;
}

Json ToJson(const DensityLimitReport& report) {
  Json j;
  j["lagrange_value"] = report.lagrange_value;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["n"] = row.n;
    r["sizes"] = row.sizes;
    r["edges"] = row.edges;
    r["density"] = row.density;
    r["deviation"] = row.deviation;
    r["scaled_deviation"] = row.scaled_deviation;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["monotone"] = report.monotone;
  j["max_scaled_deviation"] = report.max_scaled_deviation;
  return j;
}

Json ToJson(const ConstructionReport& report) {
  Json j;
  j["graph_lambda"] = report.graph_lambda;
  j["pattern_lambda"] = report.pattern_lambda;
  j["vertices"] = report.vertices;
  j["edges"] = report.edges;
  j["holds"] = report.holds;
  j["converged"] = report.converged;
  return j;
}

Json ToJson(const SequenceCheckReport& report) {
  Json j;
  j["k"] = report.k;
  j["lambda0"] = report.lambda0;
  j["slack"] = report.slack;
  Json terms = Json::array();
  for (std::size_t t = 0; t < report.terms.size(); ++t) {
    const auto& term = report.terms[t];
    Json r;
    r["t"] = t + 1;
    r["m"] = term.m;
    r["lambda"] = term.lambda;
    r["eps"] = term.eps;
    r["condition2_ok"] = term.condition2_ok;
    r["condition3_ok"] = term.condition3_ok;
    r["worst_subset"] = IndicesJson(term.worst_subset);
    r["worst_subset_lambda"] = term.worst_subset_lambda;
    r["subsets_checked"] = term.subsets_checked;
    r["converged"] = term.converged;
    terms.push_back(std::move(r));
  }
  j["terms"] = std::move(terms);
  Json c1;
  c1["verdict"] = report.condition1_verdict;
  c1["trend_slope"] = report.trend_slope;
  c1["trend_window"] = report.trend_window;
  c1["final_distance"] = report.final_distance;
  j["condition1"] = std::move(c1);
  j["condition2"] = report.condition2_verdict;
  j["condition3"] = report.condition3_verdict;
  j["evidence"] =
      "optimizer values are lower bounds: condition (3) violations are "
      "conclusive, passes are evidence; condition (2) passes are conclusive, "
      "failures are evidence";
  return j;
}

Json PatternJson(const Pattern& p) {
  return Json::parse(SerializePattern(p));
}

Json HypergraphJson(const Hypergraph& g) {
  return Json::parse(SerializeHypergraph(g));
}

}  // namespace patternlab::tools
