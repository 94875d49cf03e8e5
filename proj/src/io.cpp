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

#include "hypfill/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "hypfill/errors.hpp"

namespace hypfill {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

FiniteMetricSpace space_from_csv(const std::string& path, const std::string& label,
                                 std::optional<double> normalize_to) {
  std::istringstream in(read_text_file(path));
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ParseError("bad CSV cell '" + cell + "' in " + path);
      }
    }
    rows.push_back(std::move(row));
  }
  return FiniteMetricSpace::from_matrix(rows, label, normalize_to);
}

FiniteMetricSpace space_from_point_cloud(const json& j, const std::string& label,
                                         double normalize_to) {
  if (!j.contains("points") || !j["points"].is_array())
    throw ParseError("point cloud needs a 'points' array");
  const std::string metric = j.value("metric", "euclidean");
  std::vector<std::vector<double>> pts = j["points"].get<std::vector<std::vector<double>>>();
  const int n = static_cast<int>(pts.size());
  if (n < 2) throw ParseError("point cloud needs at least 2 points");
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      double d = 0;
      if (metric == "euclidean") {
        for (size_t c = 0; c < pts[i].size(); ++c) {
          const double t = pts[i][c] - pts[k][c];
          d += t * t;
        }
        d = std::sqrt(d);
      } else if (metric == "linf") {
        for (size_t c = 0; c < pts[i].size(); ++c)
          d = std::max(d, std::abs(pts[i][c] - pts[k][c]));
      } else if (metric == "arc") {
        const double two_pi = 2.0 * 3.14159265358979323846;
        double a = std::fmod(std::abs(pts[i][0] - pts[k][0]), two_pi);
        d = std::min(a, two_pi - a);
      } else {
        throw UnknownFormat("unknown point-cloud metric '" + metric + "'");
      }
      m[i][k] = m[k][i] = d;
    }
  return FiniteMetricSpace::from_matrix(m, label, normalize_to);
}

json space_to_json(const FiniteMetricSpace& space, const std::vector<double>* masses,
                   std::optional<double> known_dimension) {
  json j;
  j["n"] = space.size();
  j["diam"] = space.diameter();
  j["label"] = space.label();
  j["resolution"] = space.resolution();
  json rows = json::array();
  for (int i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < space.size(); ++k) row.push_back(space.dist(i, k));
    rows.push_back(std::move(row));
  }
  j["dist"] = std::move(rows);
  if (masses) j["masses"] = *masses;
  if (known_dimension) j["known_dimension"] = *known_dimension;
  return j;
}

FiniteMetricSpace space_from_json(const json& j) {
  if (!j.contains("dist")) throw ParseError("space JSON lacks 'dist'");
  auto m = j["dist"].get<std::vector<std::vector<double>>>();
  return FiniteMetricSpace::from_matrix(m, j.value("label", "space"));
}

std::optional<std::vector<double>> masses_from_json(const json& j) {
  if (!j.contains("masses")) return std::nullopt;
  return j["masses"].get<std::vector<double>>();
}

FiniteMetricSpace load_space(const std::string& path, std::optional<double> normalize_to) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return space_from_csv(path, path, normalize_to);
  const json j = json::parse(read_text_file(path));
  if (j.contains("points"))
    return space_from_point_cloud(j, path, normalize_to.value_or(0.9));
  return space_from_json(j);
}

json graph_to_json(const FillingGraph& g) {
  json j;
  j["params"] = {{"alpha", g.alpha()}, {"tau", g.tau()}, {"depth", g.depth()}};
  j["levels"] = g.nets().levels;
  json edges = json::array();
  for (const auto& e : g.edges()) {
    const Vertex a = g.vertex_at(e.a), b = g.vertex_at(e.b);
    edges.push_back(json::array(
        {a.point, a.level, b.point, b.level, e.kind == EdgeKind::horizontal ? "h" : "v"}));
  }
  j["edges"] = std::move(edges);
  json tree = json::array();
  for (int id = 0; id < g.vertex_count(); ++id) {
    const int par = g.tree_parent_id(id);
    if (par < 0) continue;
    const Vertex v = g.vertex_at(id);
    tree.push_back(json::array({v.point, v.level, g.vertex_at(par).point}));
  }
  j["tree"] = std::move(tree);
  return j;
}

FillingGraph graph_from_json(const FiniteMetricSpace& space, const json& j) {
  if (!j.contains("params") || !j.contains("levels") || !j.contains("edges") ||
      !j.contains("tree"))
    throw ParseError("graph JSON lacks params/levels/edges/tree");
  const double alpha = j["params"]["alpha"].get<double>();
  const double tau = j["params"]["tau"].get<double>();
  const auto levels = j["levels"].get<std::vector<std::vector<int>>>();

  std::vector<std::tuple<Vertex, Vertex, EdgeKind>> edges;
  for (const auto& e : j["edges"]) {
    const std::string kind = e[4].get<std::string>();
    if (kind != "h" && kind != "v") throw ParseError("graph JSON: edge kind must be h|v");
    edges.emplace_back(Vertex{e[0].get<int>(), e[1].get<int>()},
                       Vertex{e[2].get<int>(), e[3].get<int>()},
                       kind == "h" ? EdgeKind::horizontal : EdgeKind::vertical);
  }
  std::vector<std::vector<int>> tree(levels.size());
  for (size_t lev = 0; lev < levels.size(); ++lev)
    tree[lev].assign(levels[lev].size(), -1);
  for (const auto& t : j["tree"]) {
    const int p = t[0].get<int>(), lev = t[1].get<int>(), par = t[2].get<int>();
    if (lev <= 0 || lev >= static_cast<int>(levels.size()))
      throw ParseError("graph JSON: tree level out of range");
    const auto& mem = levels[lev];
    const auto it = std::find(mem.begin(), mem.end(), p);
    if (it == mem.end()) throw ParseError("graph JSON: tree vertex not in its level");
    tree[lev][static_cast<size_t>(it - mem.begin())] = par;
  }
  return FillingGraph::from_parts(space, alpha, tau, levels, edges, tree);
}

std::string export_graph(const FillingGraph& g, const std::string& format) {
  if (format == "json") return graph_to_json(g).dump(2) + "\n";
  if (format == "dot") return graph_to_dot(g);
  throw UnknownFormat("export_graph: unknown format '" + format + "' (want json|dot)");
}

json weights_to_json(const FillingGraph& g, const WeightAssignment& w) {
  json j;
  j["kind"] = w.kind == WeightKind::constant ? "constant"
              : w.kind == WeightKind::measure ? "measure"
                                              : "custom";
  json rho = json::array();
  for (int id = 0; id < g.vertex_count(); ++id) {
    const Vertex v = g.vertex_at(id);
    rho.push_back(json::array({v.point, v.level, w.rho[id]}));
  }
  j["rho"] = std::move(rho);
  j["eta_minus"] = w.eta_minus;
  j["eta_plus"] = w.eta_plus;
  j["saturated_levels"] = w.saturated_levels;
  return j;
}

WeightAssignment weights_from_json(const FillingGraph& g, const json& j) {
  if (!j.contains("rho")) throw ParseError("weights JSON lacks 'rho'");
  std::vector<double> rho(g.vertex_count(), std::numeric_limits<double>::quiet_NaN());
  for (const auto& r : j["rho"]) {
    const int id = g.id_of({r[0].get<int>(), r[1].get<int>()});
    if (id < 0) throw ParseError("weights JSON references unknown vertex");
    rho[id] = r[2].get<double>();
  }
  auto w = custom_rho(g, rho);
  const std::string kind = j.value("kind", "custom");
  w.kind = kind == "constant" ? WeightKind::constant
           : kind == "measure" ? WeightKind::measure
                               : WeightKind::custom;
  if (j.contains("saturated_levels")) {
    w.saturated_levels = j["saturated_levels"].get<std::vector<int>>();
    if (j.contains("eta_minus")) w.eta_minus = j["eta_minus"].get<double>();
    if (j.contains("eta_plus")) w.eta_plus = j["eta_plus"].get<double>();
  }
  return w;
}

std::string matrix_to_csv(const DistanceMatrix& m) {
  std::ostringstream os;
  os.precision(17);
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      if (j) os << ',';
      os << m.at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

json matrix_sidecar(const DistanceMatrix& m) {
  return json{{"rep_level", m.rep_level},
              {"tail_bound", m.tail_bound},
              {"eta_plus", m.eta_plus},
              {"points", m.points}};
}

}  // namespace hypfill
