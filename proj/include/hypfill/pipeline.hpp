// Copyright 2026 The Hypfill Authors.
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "hypfill/boundary.hpp"
#include "hypfill/generators.hpp"

namespace hypfill {

inline constexpr const char* kReportSchemaVersion = "1";

// Full parameterization of one pipeline run. Every subsampling decision flows
// from `seed` through the splitmix64 generator, so a config determines every
// output byte.
struct RunConfig {
  std::string kind = "circle";  // cantor|circle|sierpinski|file
  std::string input_path;       // when kind == "file": .csv matrix or .json
  int level = 8;                // cantor/sierpinski level
  int n = 256;                  // circle point count
  std::optional<double> normalize;  // diameter target for file inputs

  double alpha = 2.0;
  double tau = 9.0;
  int depth = 8;
  std::string rho = "constant:0.5";  // constant:<c> | measure | custom:<file>
  double oracle_p = 0;               // measure exponent; 0 = known dimension or 1
  int rep_level = -1;                // -1: depth

  int sample_points = 32;
  int triple_count = 2000;
  int cell_cap = 2000;
  int delta_cap = 96;
  std::string ball_metric = "dz";  // dz | rho
  std::uint64_t seed = 1729;
  int threads = 1;

  std::string out_dir = ".";
};

RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& c);

// Executes load/gen -> nets -> filling -> weights -> verifier -> boundary and
// writes graph.json, weights.json, report.json and tables/*.csv under
// out_dir. Returns 0 on success (condition violations are report content,
// not errors), 2 on validation/I-O failure with a stage-named diagnostic on
// `err`.
int run_pipeline(const RunConfig& config, std::ostream& err);

// Builds the report JSON without touching the filesystem.
nlohmann::json run_report(const RunConfig& config);

// Per-field relative deltas; throws SchemaMismatch when schema_version
// differs. Returns "no differences" for identical reports.
std::string diff_reports(const nlohmann::json& a, const nlohmann::json& b);

}  // namespace hypfill
