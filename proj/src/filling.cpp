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

#include "hypfill/filling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypfill/errors.hpp"

namespace hypfill {

bool ParamRegime::part2(double c_u) const {
  if (!(c_u > 2.0)) return false;
  const double cu3 = c_u * c_u * c_u;
  const double tau_min = std::max(alpha * alpha + 1.0, 2.0 * cu3 / (c_u * c_u - 4.0));
  return alpha > cu3 && tau >= tau_min;
}

int ParamRegime::j0() const {
  if (!(tau > 1.0)) throw Error("j0 undefined for tau <= 1");
  const int guess = static_cast<int>(std::floor(1.0 - std::log(tau - 1.0) / std::log(alpha)));
  for (int j = guess - 2; j <= guess + 2; ++j)
    if (std::pow(alpha, -j) < tau - 1.0 && tau - 1.0 <= std::pow(alpha, 1 - j)) return j;
  throw Error("j0 bracketing failed");
}

FillingGraph FillingGraph::build(const FiniteMetricSpace& space, double alpha, double tau,
                                 int depth) {
  FillingGraph g;
  g.space_ = space;
  g.regime_ = ParamRegime{alpha, tau};
  if (!(tau > 1.0)) throw Error("build_filling: tau must be > 1");
  g.nets_ = build_nested_nets(space, alpha, depth);
  const auto& levels = g.nets_.levels;
  const int D = g.nets_.depth;

  g.level_offset_.assign(D + 2, 0);
  for (int lev = 0; lev <= D; ++lev) {
    if (levels[lev].empty()) throw Error("build_filling: empty net level");
    g.level_offset_[lev + 1] = g.level_offset_[lev] + static_cast<int>(levels[lev].size());
    for (int p : levels[lev]) g.verts_.push_back({p, lev});
  }
  g.pt_index_.assign(D + 1, std::vector<int>(space.size(), -1));
  for (int id = 0; id < static_cast<int>(g.verts_.size()); ++id)
    g.pt_index_[g.verts_[id].level][g.verts_[id].point] = id;

  // Edges by exhaustive pairwise scan per level pair.
  std::vector<std::vector<int>> adj(g.verts_.size());
  auto add_edge = [&](int a, int b, EdgeKind kind) {
    if (a > b) std::swap(a, b);
    adj[a].push_back(b);
    adj[b].push_back(a);
    g.edges_.push_back({a, b, kind});
  };
  for (int lev = 0; lev <= D; ++lev) {
    const auto& mem = levels[lev];
    const double r_h = 2.0 * tau * std::pow(alpha, -lev);
    for (size_t i = 0; i < mem.size(); ++i)
      for (size_t j = i + 1; j < mem.size(); ++j)
        if (space.dist(mem[i], mem[j]) < r_h)
          add_edge(g.pt_index_[lev][mem[i]], g.pt_index_[lev][mem[j]], EdgeKind::horizontal);
    if (lev < D) {
      const double r_v = std::pow(alpha, -lev) + std::pow(alpha, -(lev + 1));
      for (int p : mem)
        for (int q : levels[lev + 1])
          if (space.dist(p, q) < r_v)
            add_edge(g.pt_index_[lev][p], g.pt_index_[lev + 1][q], EdgeKind::vertical);
    }
  }
  g.adj_offset_.assign(g.verts_.size() + 1, 0);
  for (size_t v = 0; v < adj.size(); ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    g.adj_offset_[v + 1] = g.adj_offset_[v] + static_cast<int>(adj[v].size());
  }
  g.adj_flat_.reserve(g.adj_offset_.back());
  for (auto& a : adj) g.adj_flat_.insert(g.adj_flat_.end(), a.begin(), a.end());

  // Spanning tree: nearest valid parent, ties by smallest point id. Net
  // maximality guarantees one exists.
  g.parent_.assign(g.verts_.size(), -1);
  for (int id = 0; id < static_cast<int>(g.verts_.size()); ++id) {
    const auto [p, lev] = g.verts_[id];
    if (lev == 0) continue;
    const double r_p = std::pow(alpha, -(lev - 1));
    int best = -1;
    double best_d = 0;
    for (int q : levels[lev - 1]) {
      const double d = space.dist(p, q);
      if (d < r_p && (best < 0 || d < best_d || (d == best_d && q < g.verts_[best].point))) {
        best = g.pt_index_[lev - 1][q];
        best_d = d;
      }
    }
    if (best < 0) throw Error("build_filling: vertex has no tree parent (net covering broken)");
    g.parent_[id] = best;
  }
  return g;
}

FillingGraph FillingGraph::from_parts(
    const FiniteMetricSpace& space, double alpha, double tau,
    const std::vector<std::vector<int>>& levels,
    const std::vector<std::tuple<Vertex, Vertex, EdgeKind>>& edges,
    const std::vector<std::vector<int>>& tree_parent_point) {
  FillingGraph g;
  g.space_ = space;
  g.regime_ = ParamRegime{alpha, tau};
  g.nets_.alpha = alpha;
  g.nets_.depth = static_cast<int>(levels.size()) - 1;
  g.nets_.requested_depth = g.nets_.depth;
  g.nets_.levels = levels;
  const int D = g.nets_.depth;
  if (D < 0) throw ParseError("from_parts: no levels");

  g.level_offset_.assign(D + 2, 0);
  for (int lev = 0; lev <= D; ++lev) {
    if (levels[lev].empty()) throw ParseError("from_parts: empty net level");
    g.level_offset_[lev + 1] = g.level_offset_[lev] + static_cast<int>(levels[lev].size());
    for (int p : levels[lev]) g.verts_.push_back({p, lev});
  }
  g.pt_index_.assign(D + 1, std::vector<int>(space.size(), -1));
  for (int id = 0; id < static_cast<int>(g.verts_.size()); ++id)
    g.pt_index_[g.verts_[id].level][g.verts_[id].point] = id;

  std::vector<std::vector<int>> adj(g.verts_.size());
  for (const auto& [va, vb, kind] : edges) {
    int a = g.id_of(va), b = g.id_of(vb);
    if (a < 0 || b < 0) throw ParseError("from_parts: edge references unknown vertex");
    if (a > b) std::swap(a, b);
    adj[a].push_back(b);
    adj[b].push_back(a);
    g.edges_.push_back({a, b, kind});
  }
  g.adj_offset_.assign(g.verts_.size() + 1, 0);
  for (size_t v = 0; v < adj.size(); ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    g.adj_offset_[v + 1] = g.adj_offset_[v] + static_cast<int>(adj[v].size());
  }
  for (auto& a : adj) g.adj_flat_.insert(g.adj_flat_.end(), a.begin(), a.end());

  g.parent_.assign(g.verts_.size(), -1);
  if (static_cast<int>(tree_parent_point.size()) != D + 1)
    throw ParseError("from_parts: tree table must match levels");
  for (int lev = 1; lev <= D; ++lev) {
    if (tree_parent_point[lev].size() != levels[lev].size())
      throw ParseError("from_parts: tree row size mismatch");
    for (size_t i = 0; i < levels[lev].size(); ++i) {
      const int id = g.pt_index_[lev][levels[lev][i]];
      const int par = g.id_of({tree_parent_point[lev][i], lev - 1});
      if (par < 0) throw ParseError("from_parts: tree parent is not a vertex");
      g.parent_[id] = par;
    }
  }
  return g;
}

int FillingGraph::id_of(Vertex v) const {
  if (v.level < 0 || v.level >= static_cast<int>(pt_index_.size())) return -1;
  if (v.point < 0 || v.point >= space_.size()) return -1;
  return pt_index_[v.level][v.point];
}

std::span<const int> FillingGraph::neighbors(int id) const {
  return {adj_flat_.data() + adj_offset_[id],
          static_cast<size_t>(adj_offset_[id + 1] - adj_offset_[id])};
}

bool FillingGraph::adjacent(int a, int b) const {
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

int FillingGraph::max_degree() const {
  int best = 0;
  for (size_t v = 0; v + 1 < adj_offset_.size(); ++v)
    best = std::max(best, adj_offset_[v + 1] - adj_offset_[v]);
  return best;
}

std::vector<int> FillingGraph::descendants(int id, int n) const {
  const int lev = verts_[id].level;
  if (n > depth()) throw DepthExceeded("descendants: target level beyond truncation depth");
  if (n <= lev) throw Error("descendants: target level must exceed vertex level");
  std::vector<int> cur{id};
  std::vector<char> seen(verts_.size(), 0);
  for (int k = lev; k < n; ++k) {
    std::vector<int> next;
    for (int u : cur)
      for (int w : neighbors(u))
        if (verts_[w].level == k + 1 && !seen[w]) {
          seen[w] = 1;
          next.push_back(w);
        }
    std::sort(next.begin(), next.end());
    cur = std::move(next);
  }
  return cur;
}

std::vector<int> FillingGraph::tree_branch(int id) const {
  std::vector<int> path{id};
  while (parent_[path.back()] >= 0) path.push_back(parent_[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

int FillingGraph::meet_vertex(std::span<const int> b1, std::span<const int> b2) const {
  if (b1.empty() || b2.empty() || b1[0] != root_id() || b2[0] != root_id())
    throw Error("meet_vertex: branches must start at the root");
  const int top = static_cast<int>(std::min(b1.size(), b2.size())) - 1;
  for (int l = top; l >= 0; --l)
    if (b1[l] == b2[l] || adjacent(b1[l], b2[l])) return b1[l];
  return b1[0];
}

std::vector<int> FillingGraph::overlap_profile() const {
  std::vector<int> prof(depth() + 1, 0);
  for (int lev = 0; lev <= depth(); ++lev) {
    const double r = tau() * std::pow(alpha(), -lev);
    for (int z = 0; z < space_.size(); ++z) {
      int count = 0;
      for (int p : nets_.levels[lev])
        if (space_.dist(z, p) < r) ++count;
      prof[lev] = std::max(prof[lev], count);
    }
  }
  return prof;
}

std::vector<GraphEdge> recompute_edges(const FillingGraph& g) {
  const auto& levels = g.nets().levels;
  const auto& space = g.space();
  std::vector<GraphEdge> edges;
  for (int lev = 0; lev <= g.depth(); ++lev) {
    const auto& mem = levels[lev];
    const double r_h = 2.0 * g.tau() * std::pow(g.alpha(), -lev);
    for (size_t i = 0; i < mem.size(); ++i)
      for (size_t j = i + 1; j < mem.size(); ++j)
        if (space.dist(mem[i], mem[j]) < r_h) {
          int a = g.id_of({mem[i], lev}), b = g.id_of({mem[j], lev});
          if (a > b) std::swap(a, b);
          edges.push_back({a, b, EdgeKind::horizontal});
        }
    if (lev < g.depth()) {
      const double r_v = std::pow(g.alpha(), -lev) + std::pow(g.alpha(), -(lev + 1));
      for (int p : mem)
        for (int q : levels[lev + 1])
          if (space.dist(p, q) < r_v) {
            int a = g.id_of({p, lev}), b = g.id_of({q, lev + 1});
            if (a > b) std::swap(a, b);
            edges.push_back({a, b, EdgeKind::vertical});
          }
    }
  }
  return edges;
}

int clause8_violations(const FillingGraph& g) {
  int violations = 0;
  for (int id = 0; id < g.vertex_count(); ++id) {
    const int lev = g.level_of(id);
    if (lev == 0) continue;
    std::vector<int> ups;
    for (int nb : g.neighbors(id))
      if (g.level_of(nb) == lev - 1) ups.push_back(nb);
    for (size_t i = 0; i < ups.size(); ++i)
      for (size_t j = i + 1; j < ups.size(); ++j)
        if (!g.adjacent(ups[i], ups[j])) ++violations;
  }
  return violations;
}

std::string graph_to_dot(const FillingGraph& g) {
  std::ostringstream os;
  os << "graph filling {\n  rankdir=TB;\n  node [shape=circle, fontsize=9];\n";
  for (int lev = 0; lev <= g.depth(); ++lev) {
    os << "  { rank=same;";
    for (int p : g.nets().levels[lev]) os << " \"" << p << "," << lev << "\";";
    os << " }\n";
  }
  for (const auto& e : g.edges()) {
    const auto a = g.vertex_at(e.a);
    const auto b = g.vertex_at(e.b);
    os << "  \"" << a.point << "," << a.level << "\" -- \"" << b.point << "," << b.level << "\"";
    if (e.kind == EdgeKind::horizontal) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hypfill
