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

#include "hypfill/rho_metric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <queue>
#include <thread>

#include "hypfill/errors.hpp"

namespace hypfill {

std::vector<double> dijkstra_from(const FillingGraph& g, const WeightAssignment& w, int src,
                                  std::vector<int>* parent) {
  const int n = g.vertex_count();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  if (parent) parent->assign(n, -1);
  dist[src] = 0.0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.push({0.0, src});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (int v : g.neighbors(u)) {
      const double nd = d + 0.5 * (w.pi[u] + w.pi[v]);
      if (nd < dist[v]) {
        dist[v] = nd;
        if (parent) (*parent)[v] = u;
        heap.push({nd, v});
      }
    }
  }
  return dist;
}

RhoDistanceResult drho(const FillingGraph& g, const WeightAssignment& w, int u, int v) {
  RhoDistanceResult res;
  if (u == v) return res;
  std::vector<int> parent;
  const auto dist = dijkstra_from(g, w, u, &parent);
  res.value = dist[v];
  for (int cur = v; cur != -1; cur = parent[cur]) res.path.push_back(cur);
  std::reverse(res.path.begin(), res.path.end());
  return res;
}

int representative(const FillingGraph& g, int point, int rep_level) {
  if (rep_level < 0 || rep_level > g.depth())
    throw DepthExceeded("representative: rep_level beyond truncation depth");
  int best_pt = -1;
  double best_d = 0;
  for (int q : g.nets().levels[rep_level]) {
    const double d = g.space().dist(point, q);
    if (best_pt < 0 || d < best_d || (d == best_d && q < best_pt)) {
      best_pt = q;
      best_d = d;
    }
  }
  return g.id_of({best_pt, rep_level});
}

double max_pi_at_level(const FillingGraph& g, const WeightAssignment& w, int level) {
  const auto [lo, hi] = g.level_range(level);
  double best = 0;
  for (int id = lo; id < hi; ++id) best = std::max(best, w.pi[id]);
  return best;
}

double boundary_tail_bound(const FillingGraph& g, const WeightAssignment& w, int rep_level) {
  if (!(w.eta_plus < 1.0))
    throw EtaPlusNotBelowOne("tail bound undefined: eta_plus >= 1");
  return 2.0 * max_pi_at_level(g, w, rep_level) / (1.0 - w.eta_plus);
}

RhoDistanceResult drho_boundary(const FillingGraph& g, const WeightAssignment& w, int x, int y,
                                int rep_level) {
  const double tail = boundary_tail_bound(g, w, rep_level);
  auto res = drho(g, w, representative(g, x, rep_level), representative(g, y, rep_level));
  res.tail_bound = tail;
  return res;
}

DistanceMatrix drho_matrix(const FillingGraph& g, const WeightAssignment& w,
                           std::span<const int> points, int rep_level, int num_threads) {
  DistanceMatrix m;
  m.rep_level = rep_level;
  m.tail_bound = boundary_tail_bound(g, w, rep_level);
  m.eta_plus = w.eta_plus;
  m.points.assign(points.begin(), points.end());
  m.reps.resize(points.size());
  for (size_t i = 0; i < points.size(); ++i) m.reps[i] = representative(g, points[i], rep_level);

  std::vector<int> sources = m.reps;
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

  std::vector<std::vector<double>> rows(sources.size());
  const int workers = std::max(1, std::min<int>(num_threads, static_cast<int>(sources.size())));
  if (workers == 1) {
    for (size_t s = 0; s < sources.size(); ++s) rows[s] = dijkstra_from(g, w, sources[s]);
  } else {
    std::atomic<size_t> next{0};
    auto work = [&] {
      for (size_t s = next.fetch_add(1); s < sources.size(); s = next.fetch_add(1))
        rows[s] = dijkstra_from(g, w, sources[s]);
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  auto row_of = [&](int rep) -> const std::vector<double>& {
    const auto it = std::lower_bound(sources.begin(), sources.end(), rep);
    return rows[static_cast<size_t>(it - sources.begin())];
  };
  // Both triangles are filled from the smaller rep id so the matrix is
  // symmetric bit-for-bit.
  const int k = m.n();
  m.values.assign(static_cast<size_t>(k) * k, 0.0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const int a = std::min(m.reps[i], m.reps[j]);
      const int b = std::max(m.reps[i], m.reps[j]);
      const double v = a == b ? 0.0 : row_of(a)[b];
      m.values[static_cast<size_t>(i) * k + j] = v;
      m.values[static_cast<size_t>(j) * k + i] = v;
    }
  return m;
}

}  // namespace hypfill
