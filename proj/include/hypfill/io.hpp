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

#include <optional>
#include <string>

#include <json.hpp>

#include "hypfill/boundary.hpp"
#include "hypfill/generators.hpp"

namespace hypfill {

// -- spaces -----------------------------------------------------------------

// Header-free row-major CSV distance matrix.
FiniteMetricSpace space_from_csv(const std::string& path, const std::string& label,
                                 std::optional<double> normalize_to = std::nullopt);

// {points: [[x,y,...]], metric: "euclidean"|"linf"|"arc"}; "arc" reads the
// first coordinate as an angle on the unit circle. Point clouds are
// normalized to the given diameter (default 0.9).
FiniteMetricSpace space_from_point_cloud(const nlohmann::json& j, const std::string& label,
                                         double normalize_to = 0.9);

// {n, diam, label, dist} (+ masses / known_dimension / resolution when the
// space came from a generator).
nlohmann::json space_to_json(const FiniteMetricSpace& space,
                             const std::vector<double>* masses = nullptr,
                             std::optional<double> known_dimension = std::nullopt);
FiniteMetricSpace space_from_json(const nlohmann::json& j);
std::optional<std::vector<double>> masses_from_json(const nlohmann::json& j);

// Dispatch on file suffix: .csv -> matrix, .json -> space JSON or point cloud.
FiniteMetricSpace load_space(const std::string& path, std::optional<double> normalize_to);

// -- graphs and weights -----------------------------------------------------

// {params:{alpha,tau,depth}, levels:[[ids]], edges:[[p1,l1,p2,l2,kind]],
//  tree:[[p,l,parent_p]]} with kind "h"|"v".
nlohmann::json graph_to_json(const FillingGraph& g);
FillingGraph graph_from_json(const FiniteMetricSpace& space, const nlohmann::json& j);

// export_graph: format "json" or "dot".
std::string export_graph(const FillingGraph& g, const std::string& format);

// {kind, rho:[[p,l,value]], eta_minus, eta_plus, saturated_levels}.
nlohmann::json weights_to_json(const FillingGraph& g, const WeightAssignment& w);
WeightAssignment weights_from_json(const FillingGraph& g, const nlohmann::json& j);

// -- matrices ---------------------------------------------------------------

// CSV of the distance matrix; sidecar {rep_level, tail_bound, eta_plus}.
std::string matrix_to_csv(const DistanceMatrix& m);
nlohmann::json matrix_sidecar(const DistanceMatrix& m);

// -- files ------------------------------------------------------------------

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hypfill
