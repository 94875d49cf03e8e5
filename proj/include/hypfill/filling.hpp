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

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "hypfill/metric_space.hpp"
#include "hypfill/nets.hpp"

namespace hypfill {

struct Vertex {
  int point = 0;
  int level = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

enum class EdgeKind { horizontal, vertical };

struct GraphEdge {
  int a = 0, b = 0;  // vertex ids, a < b
  EdgeKind kind = EdgeKind::horizontal;
};

// Parameter regimes for the filling construction. Flags are recomputed from
// the stored values, never cached.
struct ParamRegime {
  double alpha = 2;
  double tau = 9;
  bool basic() const { return alpha >= 2.0 && tau >= 2.0 * alpha * alpha + 1.0; }
  bool part2(double c_u) const;
  // The integer j0 with alpha^{-j0} < tau-1 <= alpha^{1-j0}.
  int j0() const;
};

// The truncated hyperbolic filling over nested nets: one vertex per (point,
// level) with point in A_level, horizontal edges between same-level vertices
// at distance < 2*tau*alpha^{-n}, vertical edges between adjacent-level
// vertices at distance < alpha^{-n} + alpha^{-(n+1)}, and a spanning tree of
// vertical edges with d(child, parent) < alpha^{-(level-1)}.
//
// Vertex ids are level-major in net admission order; the root (x0, 0) is id 0.
// The structure is immutable after build; queries are pure.
class FillingGraph {
 public:
  static FillingGraph build(const FiniteMetricSpace& space, double alpha, double tau, int depth);

  // Reassemble from serialized parts without recomputation; `check` re-runs
  // the edge rules separately. tree_parent_point[level][i] pairs with
  // levels[level][i] and is ignored for level 0.
  static FillingGraph from_parts(const FiniteMetricSpace& space, double alpha, double tau,
                                 const std::vector<std::vector<int>>& levels,
                                 const std::vector<std::tuple<Vertex, Vertex, EdgeKind>>& edges,
                                 const std::vector<std::vector<int>>& tree_parent_point);

  const FiniteMetricSpace& space() const { return space_; }
  const NetHierarchy& nets() const { return nets_; }
  double alpha() const { return regime_.alpha; }
  double tau() const { return regime_.tau; }
  int depth() const { return nets_.depth; }
  const ParamRegime& regime() const { return regime_; }
  bool regime_warning() const { return !regime_.basic(); }

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  Vertex vertex_at(int id) const { return verts_[id]; }
  int level_of(int id) const { return verts_[id].level; }
  int point_of(int id) const { return verts_[id].point; }
  // -1 when (point, level) is not a vertex.
  int id_of(Vertex v) const;
  int root_id() const { return 0; }

  std::span<const int> neighbors(int id) const;
  bool adjacent(int a, int b) const;
  const std::vector<GraphEdge>& edges() const { return edges_; }
  // Vertex ids of a level are contiguous: [first, second).
  std::pair<int, int> level_range(int level) const {
    return {level_offset_[level], level_offset_[level + 1]};
  }
  int tree_parent_id(int id) const { return parent_[id]; }
  int max_degree() const;

  // D_n(v): level-n endpoints of vertically descending paths from v.
  // Requires level(v) < n <= depth.
  std::vector<int> descendants(int id, int n) const;

  // Root-to-v path along tree parents; consecutive entries are vertical edges.
  std::vector<int> tree_branch(int id) const;

  // The vertex on b1 at the largest level where the two branches coincide or
  // are neighbors (the latest common ancestor-or-neighbor v_xy).
  int meet_vertex(std::span<const int> b1, std::span<const int> b2) const;

  // Per level, the max over points z of |{v in A_n : d(z, point(v)) <
  // tau*alpha^{-n}}| (bounded-overlap profile).
  std::vector<int> overlap_profile() const;

 private:
  FiniteMetricSpace space_;
  NetHierarchy nets_;
  ParamRegime regime_;
  std::vector<Vertex> verts_;
  std::vector<int> level_offset_;          // size depth+2
  std::vector<std::vector<int>> pt_index_; // per level: point id -> vertex id or -1
  std::vector<int> adj_flat_;
  std::vector<int> adj_offset_;
  std::vector<GraphEdge> edges_;
  std::vector<int> parent_;
};

// DOT rendering with one rank per level; horizontal edges dashed.
std::string graph_to_dot(const FillingGraph& g);

// Exhaustive re-scan of the edge rules over the stored nets; equality with
// g.edges() is the well-formedness check used by `check` and the tests.
std::vector<GraphEdge> recompute_edges(const FillingGraph& g);

// Count of vertex triples violating the two-parents property: whenever
// (z,n) ~ (x1,n-1) and (z,n) ~ (x2,n-1), then (x1,n-1) ~ (x2,n-1). Zero for
// any tau >= 1 + 1/alpha.
int clause8_violations(const FillingGraph& g);

}  // namespace hypfill
