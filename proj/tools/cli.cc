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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json_reports.h"
#include "manifest.h"
#include "patternlab/blowup.h"
#include "patternlab/catalog.h"
#include "patternlab/errors.h"
#include "patternlab/grid_oracle.h"
#include "patternlab/lagrangian.h"
#include "patternlab/pattern_io.h"
#include "patternlab/pattern_union.h"
#include "patternlab/reduced_objective.h"
#include "patternlab/sequence_check.h"
#include "verify_suites.h"

namespace patternlab::tools {
namespace {

// Slack for the grid-oracle sandwich: grid value <= optimizer value + this.
constexpr double kSandwichSlack = 1e-9;

struct Options {
  OptimizerConfig cfg;
  bool pretty = false;
  bool timing = false;
};

void AddOptimizerFlags(CLI::App* sub, Options& o) {
  sub->add_option("--restarts", o.cfg.restarts, "random restarts")
      ->check(CLI::PositiveNumber);
  sub->add_option("--iters", o.cfg.max_iterations, "iterations per start")
      ->check(CLI::PositiveNumber);
  sub->add_option("--tol", o.cfg.tolerance, "stationarity tolerance");
  sub->add_option("--seed", o.cfg.seed, "random seed (PATTERNLAB_SEED overrides)");
  sub->add_option("--support-threshold", o.cfg.support_threshold);
  sub->add_option("--jobs", o.cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
}

void AddOutputFlags(CLI::App* sub, Options& o) {
  sub->add_flag("--pretty", o.pretty, "indent the JSON output");
  sub->add_flag("--timing", o.timing, "record wall-clock time in the manifest");
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::int64_t ParseInt(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw InputError(what + ": expected an integer, got \"" + text + "\"");
  }
  return v;
}

// "all" or a comma-separated list of 1-based indices.
std::vector<Index> ParseIndexSet(const std::string& text, std::size_t m) {
  std::vector<Index> out;
  if (text == "all") {
    for (Index i = 0; i < m; ++i) out.push_back(i);
    return out;
  }
  for (const std::string& item : SplitCommas(text)) {
    const std::int64_t v = ParseInt(item, "index list");
    if (v < 1 || static_cast<std::size_t>(v) > m) {
      throw InputError("index " + item + " outside [1, " + std::to_string(m) + "]");
    }
    out.push_back(static_cast<Index>(v - 1));
  }
  if (out.empty()) throw InputError("empty index list");
  return out;
}

std::vector<std::size_t> ParseSizes(const std::string& text) {
  std::vector<std::size_t> out;
  for (const std::string& item : SplitCommas(text)) {
    const std::int64_t v = ParseInt(item, "sizes");
    if (v < 0) throw InputError("part sizes must be >= 0");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

// A decimal or a fraction "p/q".
double ParseReal(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const double num = std::stod(text.substr(0, slash));
      const double den = std::stod(text.substr(slash + 1));
      if (den == 0.0) throw InputError("zero denominator in " + text);
      return num / den;
    }
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw InputError("not a number: " + text);
    return v;
  } catch (const std::invalid_argument&) {
    throw InputError("not a number: " + text);
  } catch (const std::out_of_range&) {
    throw InputError("number out of range: " + text);
  }
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << contents << '\n';
}

std::vector<double> ReadEpsFile(RunManifest& manifest, const std::string& path) {
  const std::string text = manifest.AddInput(path);
  std::vector<double> eps;
  try {
    const Json doc = Json::parse(text);
    if (!doc.is_array()) throw InputError("eps file must hold a JSON array");
    for (const Json& v : doc) {
      if (!v.is_number()) throw InputError("eps entries must be numbers");
      eps.push_back(v.get<double>());
    }
  } catch (const Json::parse_error&) {
    // Fall back to whitespace-separated numbers.
    std::stringstream in(text);
    std::string token;
    while (in >> token) eps.push_back(ParseReal(token));
  }
  return eps;
}

Json OptimizerWithGrid(const Pattern& p, const Options& o,
                       std::optional<std::uint32_t> grid_denominator,
                       bool& ok) {
  OptimizerReport report = Maximize(p, o.cfg);
  Json result;
  if (grid_denominator) {
    const GridOracleResult grid = GridOracle(p, *grid_denominator);
    const double grid_value = boost::rational_cast<double>(grid.value);
    report.oracle_gap = report.value - grid_value;
    result["grid_oracle"] = ToJson(grid);
    ok = ok && grid_value <= report.value + kSandwichSlack;
  }
  Json out;
  out["m"] = p.m();
  out["r"] = p.r();
  out["edge_count"] = p.edge_count();
  out["report"] = ToJson(report);
  if (result.contains("grid_oracle")) out["grid_oracle"] = result["grid_oracle"];
  return out;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Lagrangians, unions and blowups of hypergraph patterns"};
  app.name(args.empty() ? kToolName : args[0]);
  app.require_subcommand(1);
  Options o;

  // lambda
  std::string lambda_file;
  bool lambda_graph = false;
  std::optional<std::uint32_t> grid_denominator;
  auto* lambda_cmd = app.add_subcommand("lambda", "Lagrangian of a pattern or r-graph");
  lambda_cmd->add_option("file", lambda_file, "pattern file")->required();
  lambda_cmd->add_flag("--graph", lambda_graph, "input is a hypergraph file");
  lambda_cmd->add_option("--grid-denominator", grid_denominator,
                         "also run the exact grid oracle with this denominator");
  AddOptimizerFlags(lambda_cmd, o);
  AddOutputFlags(lambda_cmd, o);

  // union
  std::string union_file1, union_file2, union_out;
  std::optional<std::int64_t> union_on;
  std::optional<std::string> union_on_set;
  auto* union_cmd = app.add_subcommand("union", "P1 (+)_i P2 or P1 (+)_T P2");
  union_cmd->add_option("outer", union_file1, "P1 pattern file")->required();
  union_cmd->add_option("inner", union_file2, "P2 pattern file")->required();
  auto* on_opt = union_cmd->add_option("--on", union_on, "glue index i (1-based)");
  auto* on_set_opt =
      union_cmd->add_option("--on-set", union_on_set, "glue set T: \"1,3\" or \"all\"");
  on_opt->excludes(on_set_opt);
  union_cmd->add_option("--out", union_out,
                        "write the union here and labels to <out>.labels.json");
  AddOutputFlags(union_cmd, o);

  // mapf
  std::string mapf_file, mapf_lambda;
  std::optional<std::int64_t> mapf_glue;
  std::optional<std::string> mapf_glue_set;
  auto* mapf_cmd = app.add_subcommand("mapf", "f(lambda) = max phi over the simplex");
  mapf_cmd->add_option("--pattern", mapf_file, "P1 pattern file")->required();
  auto* glue_opt = mapf_cmd->add_option("--glue", mapf_glue, "glue index (1-based)");
  auto* glue_set_opt = mapf_cmd->add_option("--glue-set", mapf_glue_set,
                                            "glue set: \"1,3\" or \"all\"");
  glue_opt->excludes(glue_set_opt);
  mapf_cmd->add_option("--lambda", mapf_lambda, "inner Lagrangian, decimal or p/q")
      ->required();
  AddOptimizerFlags(mapf_cmd, o);
  AddOutputFlags(mapf_cmd, o);

  // blowup
  std::string blowup_file, blowup_sizes, blowup_out;
  auto* blowup_cmd = app.add_subcommand("blowup", "materialize a P-construction");
  blowup_cmd->add_option("--pattern", blowup_file)->required();
  blowup_cmd->add_option("--sizes", blowup_sizes, "part sizes, e.g. 2,2")->required();
  blowup_cmd->add_option("--out", blowup_out, "write the hypergraph here");
  AddOutputFlags(blowup_cmd, o);

  // density
  std::string density_file;
  auto* density_cmd = app.add_subcommand("density", "edge density of an r-graph");
  density_cmd->add_option("--graph", density_file)->required();
  AddOutputFlags(density_cmd, o);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->require_subcommand(1);
  int decomposition_trials = 200;
  int union_samples = 2;
  int construction_trials = 20;
  std::string minimality_file;
  auto* v_decomp = verify_cmd->add_subcommand("decomposition");
  v_decomp->add_option("--trials", decomposition_trials)->check(CLI::PositiveNumber);
  auto* v_union = verify_cmd->add_subcommand("union-lambda");
  v_union->add_option("--trials", union_samples, "samples per (m1, m2, glue)")
      ->check(CLI::PositiveNumber);
  auto* v_min = verify_cmd->add_subcommand("minimality");
  v_min->add_option("--pattern", minimality_file);
  auto* v_cons = verify_cmd->add_subcommand("construction");
  v_cons->add_option("--trials", construction_trials)->check(CLI::PositiveNumber);
  auto* v_all = verify_cmd->add_subcommand("all");
  for (CLI::App* sub : {v_decomp, v_union, v_min, v_cons, v_all}) {
    AddOptimizerFlags(sub, o);
    AddOutputFlags(sub, o);
  }

  // check-sequence
  std::string seq_dir, seq_eps_file, seq_lambda0;
  std::size_t seq_k = 0;
  auto* seq_cmd =
      app.add_subcommand("check-sequence", "check (k, lambda0)-sequence conditions");
  seq_cmd->add_option("--dir", seq_dir, "directory of pattern files, ordered by name")
      ->required();
  seq_cmd->add_option("--k", seq_k)->required()->check(CLI::PositiveNumber);
  seq_cmd->add_option("--lambda0", seq_lambda0, "decimal or p/q")->required();
  seq_cmd->add_option("--eps-file", seq_eps_file, "JSON array of eps(t)")->required();
  AddOptimizerFlags(seq_cmd, o);
  AddOutputFlags(seq_cmd, o);

  // catalog
  std::int64_t catalog_r = 3;
  int catalog_family = 3;
  auto* catalog_cmd = app.add_subcommand("catalog", "known jump/non-jump constants");
  catalog_cmd->add_option("--r", catalog_r)->required();
  catalog_cmd->add_option("--family-size", catalog_family);
  AddOutputFlags(catalog_cmd, o);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const auto started = std::chrono::steady_clock::now();
  RunManifest manifest;
  manifest.command.assign(args.begin() + 1, args.end());
  std::string command_name;
  Json result;
  bool ok = true;
  try {
    if (const char* env = std::getenv("PATTERNLAB_SEED")) {
      const std::int64_t seed = ParseInt(env, "PATTERNLAB_SEED");
      if (seed < 0) throw InputError("PATTERNLAB_SEED must be >= 0");
      o.cfg.seed = static_cast<std::uint64_t>(seed);
    }
    o.cfg.Validate();
    manifest.seed = o.cfg.seed;

    if (*lambda_cmd) {
      command_name = "lambda";
      manifest.config = ToJson(o.cfg);
      const std::string text = manifest.AddInput(lambda_file);
      const Pattern p = lambda_graph ? PatternOfHypergraph(DeserializeHypergraph(text))
                                     : DeserializePattern(text);
      result = OptimizerWithGrid(p, o, grid_denominator, ok);
    } else if (*union_cmd) {
      command_name = "union";
      const Pattern p1 = DeserializePattern(manifest.AddInput(union_file1));
      const Pattern p2 = DeserializePattern(manifest.AddInput(union_file2));
      std::vector<Index> glue;
      if (union_on) {
        glue = ParseIndexSet(std::to_string(*union_on), p1.m());
      } else if (union_on_set) {
        glue = ParseIndexSet(*union_on_set, p1.m());
      } else {
        throw InputError("union needs --on or --on-set");
      }
      const UnionResult u = UnionOnSet(p1, p2, glue);
      result["m"] = u.pattern.m();
      result["edge_count"] = u.pattern.edge_count();
      result["pattern"] = PatternJson(u.pattern);
      result["labeling"] = ToJson(u.labeling);
      if (!union_out.empty()) {
        WriteFile(union_out, SerializePattern(u.pattern));
        WriteFile(union_out + ".labels.json", ToJson(u.labeling).dump());
        result["written"] = {union_out, union_out + ".labels.json"};
      }
    } else if (*mapf_cmd) {
      command_name = "mapf";
      manifest.config = ToJson(o.cfg);
      const Pattern p = DeserializePattern(manifest.AddInput(mapf_file));
      std::vector<Index> glue;
      if (mapf_glue) {
        glue = ParseIndexSet(std::to_string(*mapf_glue), p.m());
      } else if (mapf_glue_set) {
        glue = ParseIndexSet(*mapf_glue_set, p.m());
      } else {
        glue = {static_cast<Index>(p.m() - 1)};
      }
      const double lambda2 = ParseReal(mapf_lambda);
      result["glue"] = IndicesJson(glue);
      result["lambda"] = lambda2;
      result["report"] = ToJson(MapF(p, glue, lambda2, o.cfg));
    } else if (*blowup_cmd) {
      command_name = "blowup";
      const Pattern p = DeserializePattern(manifest.AddInput(blowup_file));
      const auto sizes = ParseSizes(blowup_sizes);
      const Blowup b = MakeBlowup(p, sizes);
      const std::uint64_t closed_form = BlowupEdgeCount(p, sizes);
      result["sizes"] = sizes;
      result["vertices"] = b.graph.n();
      result["edges"] = b.graph.edge_count();
      result["closed_form_edges"] = closed_form;
      result["density"] =
          b.graph.n() >= b.graph.r() ? Json(Density(b.graph)) : Json(nullptr);
      if (blowup_out.empty()) {
        result["graph"] = HypergraphJson(b.graph);
      } else {
        WriteFile(blowup_out, SerializeHypergraph(b.graph));
        result["written"] = blowup_out;
      }
      ok = ok && closed_form == b.graph.edge_count();
    } else if (*density_cmd) {
      command_name = "density";
      const Hypergraph g = DeserializeHypergraph(manifest.AddInput(density_file));
      result["n"] = g.n();
      result["r"] = g.r();
      result["edges"] = g.edge_count();
      result["density"] = Density(g);
    } else if (*verify_cmd) {
      manifest.config = ToJson(o.cfg);
      std::vector<SuiteResult> suites;
      if (*v_decomp) {
        command_name = "verify decomposition";
        suites.push_back(RunDecompositionSuite(decomposition_trials, o.cfg.seed));
      } else if (*v_union) {
        command_name = "verify union-lambda";
        suites.push_back(RunUnionLambdaSuite(union_samples, o.cfg));
      } else if (*v_min) {
        command_name = "verify minimality";
        std::optional<Pattern> p;
        if (!minimality_file.empty()) {
          p = DeserializePattern(manifest.AddInput(minimality_file));
        }
        suites.push_back(RunMinimalitySuite(o.cfg, p));
      } else if (*v_cons) {
        command_name = "verify construction";
        suites.push_back(RunConstructionSuite(construction_trials, o.cfg));
      } else {
        command_name = "verify all";
        suites.push_back(RunDecompositionSuite(200, o.cfg.seed));
        suites.push_back(RunUnionLambdaSuite(2, o.cfg));
        suites.push_back(RunMinimalitySuite(o.cfg));
        suites.push_back(RunConstructionSuite(20, o.cfg));
      }
      Json list = Json::array();
      for (const SuiteResult& s : suites) {
        ok = ok && s.passed;
        list.push_back(Json{{"suite", s.name}, {"passed", s.passed}, {"details", s.details}});
      }
      result["suites"] = std::move(list);
    } else if (*seq_cmd) {
      command_name = "check-sequence";
      manifest.config = ToJson(o.cfg);
      std::vector<std::filesystem::path> files;
      if (!std::filesystem::is_directory(seq_dir)) {
        throw InputError("not a directory: " + seq_dir);
      }
      for (const auto& entry : std::filesystem::directory_iterator(seq_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
          files.push_back(entry.path());
        }
      }
      std::sort(files.begin(), files.end(),
                [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
      std::vector<Pattern> patterns;
      for (const auto& f : files) {
        patterns.push_back(DeserializePattern(manifest.AddInput(f.string())));
      }
      const std::vector<double> eps = ReadEpsFile(manifest, seq_eps_file);
      const double lambda0 = ParseReal(seq_lambda0);
      const SequenceCheckReport report =
          SequenceCheck(patterns, seq_k, lambda0, eps, o.cfg);
      ok = report.condition2_verdict == "pass" &&
           report.condition3_verdict != "violated";
      result = ToJson(report);
      Json names = Json::array();
      for (const auto& f : files) names.push_back(f.filename().string());
      result["files"] = std::move(names);
    } else if (*catalog_cmd) {
      command_name = "catalog";
      Json entries = Json::array();
      for (const CatalogEntry& e : NonJumpCatalog(catalog_r, catalog_family)) {
        entries.push_back(ToJson(e));
      }
      result["r"] = catalog_r;
      result["entries"] = std::move(entries);
      result["excluded"] = Json::array(
          {"Frankl-Peng-Rodl-Talbot r=3 family 1 - l/3 + (3s+2)/l^2: the closed "
           "form falls outside [0, 1) on its admissible range, so it is not listed"});
    }
  } catch (const CapacityError& e) {
    err << Json{{"error", e.what()}, {"exit_code", kExitResource}}.dump() << '\n';
    return kExitResource;
  } catch (const InputError& e) {
    err << Json{{"error", e.what()}, {"exit_code", kExitInput}}.dump() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << Json{{"error", e.what()}, {"exit_code", kExitInput}}.dump() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << Json{{"error", e.what()}, {"exit_code", kExitInternal}}.dump() << '\n';
    return kExitInternal;
  }

  if (o.timing) {
    manifest.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  }
  Json doc;
  doc["command"] = command_name;
  doc["ok"] = ok;
  doc["result"] = std::move(result);
  doc["manifest"] = manifest.ToJson();
  out << (o.pretty ? doc.dump(2) : doc.dump()) << '\n';
  return ok ? kExitOk : kExitVerification;
}

}  // namespace patternlab::tools
