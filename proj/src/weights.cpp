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

#include "hypfill/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypfill/errors.hpp"

namespace hypfill {

namespace {

// eta bounds over non-root vertices, skipping saturated levels when possible.
void observe_eta(const FillingGraph& g, WeightAssignment& w) {
  std::vector<char> skip_level(g.depth() + 1, 0);
  for (int lev : w.saturated_levels) skip_level[lev] = 1;
  double lo = 0, hi = 0;
  bool seen = false;
  for (int id = 1; id < g.vertex_count(); ++id) {
    if (skip_level[g.level_of(id)]) continue;
    const double r = w.rho[id];
    if (!seen) {
      lo = hi = r;
      seen = true;
    } else {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  if (!seen) {
    // Every level saturated; fall back to all non-root vertices.
    for (int id = 1; id < g.vertex_count(); ++id) {
      const double r = w.rho[id];
      if (id == 1) lo = hi = r;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  w.eta_minus = lo;
  w.eta_plus = hi;
}

void build_pi(const FillingGraph& g, WeightAssignment& w) {
  w.pi.assign(g.vertex_count(), 0.0);
  // Vertex ids are level-major, so parents precede children.
  for (int id = 0; id < g.vertex_count(); ++id) {
    const int par = g.tree_parent_id(id);
    w.pi[id] = par < 0 ? w.rho[id] : w.rho[id] * w.pi[par];
  }
}

}  // namespace

WeightAssignment constant_rho(const FillingGraph& g, double c) {
  if (!(c > 0.0) || !(c < 1.0)) throw Error("constant_rho: c must lie in (0,1)");
  WeightAssignment w;
  w.kind = WeightKind::constant;
  w.rho.assign(g.vertex_count(), c);
  build_pi(g, w);
  w.eta_minus = w.eta_plus = c;
  return w;
}

MeasureOracle counting_oracle(const FiniteMetricSpace& space, double p) {
  return discrete_oracle(space, std::vector<double>(space.size(), 1.0), p);
}

MeasureOracle discrete_oracle(const FiniteMetricSpace& space, std::vector<double> masses,
                              double p) {
  if (static_cast<int>(masses.size()) != space.size())
    throw Error("discrete_oracle: one mass per point required");
  double total = 0;
  for (double m : masses) {
    if (m < 0) throw Error("discrete_oracle: masses must be nonnegative");
    total += m;
  }
  if (!(total > 0)) throw ZeroMass("discrete_oracle: total mass is zero");
  MeasureOracle o;
  o.total = total;
  o.p = p;
  o.mass = [&space, ms = std::move(masses)](int x, double r) {
    double s = 0;
    for (int i = 0; i < space.size(); ++i)
      if (space.dist(x, i) < r) s += ms[i];
    return s;
  };
  return o;
}

WeightAssignment measure_rho(const FillingGraph& g, const MeasureOracle& oracle) {
  if (!(oracle.total > 0)) throw ZeroMass("measure_rho: oracle total must be positive");
  if (!(oracle.p > 0)) throw Error("measure_rho: p must be positive");
  const double inv_p = 1.0 / oracle.p;
  // Normalize to mu(Z) = 1 so rho(w0) = 1 and (H1) estimation can ignore the
  // otherwise unconstrained root value.
  auto mass = [&](int x, double r) { return oracle.mass(x, r) / oracle.total; };

  WeightAssignment w;
  w.kind = WeightKind::measure;
  w.rho.assign(g.vertex_count(), 0.0);

  std::vector<char> sat(g.depth() + 1, 0);
  for (int id = 0; id < g.vertex_count(); ++id) {
    const Vertex v = g.vertex_at(id);
    const double r_v = g.tau() * std::pow(g.alpha(), -v.level);
    const double m_v = mass(v.point, r_v);
    if (m_v == 1.0) sat[v.level] = 1;
    if (v.level == 0) {
      w.rho[id] = 1.0;  // mu(Z)^{1/p} after normalization
      continue;
    }
    const int par = g.tree_parent_id(id);
    const double m_par = mass(g.point_of(par), g.tau() * std::pow(g.alpha(), -(v.level - 1)));
    if (!(m_v > 0) || !(m_par > 0)) {
      std::ostringstream os;
      os << "measure_rho: zero ball mass at vertex (" << v.point << "," << v.level << ")";
      throw ZeroMass(os.str());
    }
    w.rho[id] = std::pow(m_v / m_par, inv_p);
  }
  build_pi(g, w);
  for (int lev = 0; lev <= g.depth(); ++lev)
    if (sat[lev]) w.saturated_levels.push_back(lev);
  observe_eta(g, w);

  // Telescoping identity: pi((x,n)) = mu(B(x, tau a^-n))^{1/p}.
  for (int id = 0; id < g.vertex_count(); ++id) {
    const Vertex v = g.vertex_at(id);
    const double direct =
        std::pow(mass(v.point, g.tau() * std::pow(g.alpha(), -v.level)), inv_p);
    if (std::abs(w.pi[id] - direct) > 1e-9 * std::max(1.0, std::abs(direct)))
      throw Error("measure_rho: telescoping identity failed");
  }
  return w;
}

WeightAssignment custom_rho(const FillingGraph& g, const std::vector<double>& values) {
  if (static_cast<int>(values.size()) != g.vertex_count()) {
    std::ostringstream os;
    os << "custom_rho: expected " << g.vertex_count() << " weights, got " << values.size();
    throw MissingVertex(os.str());
  }
  for (int id = 0; id < g.vertex_count(); ++id) {
    if (std::isnan(values[id])) {
      const Vertex v = g.vertex_at(id);
      std::ostringstream os;
      os << "custom_rho: no weight for vertex (" << v.point << "," << v.level << ")";
      throw MissingVertex(os.str());
    }
    if (!(values[id] > 0)) {
      const Vertex v = g.vertex_at(id);
      std::ostringstream os;
      os << "custom_rho: non-positive weight at (" << v.point << "," << v.level << ")";
      throw NonPositiveWeight(os.str());
    }
  }
  WeightAssignment w;
  w.kind = WeightKind::custom;
  w.rho = values;
  build_pi(g, w);
  observe_eta(g, w);
  return w;
}

std::vector<double> omega_from_pi(const WeightAssignment& w) { return w.pi; }

WeightAssignment rho_from_omega(const FillingGraph& g, const std::vector<double>& omega) {
  if (static_cast<int>(omega.size()) != g.vertex_count())
    throw MissingVertex("rho_from_omega: one omega per vertex required");
  for (double o : omega)
    if (!(o > 0)) throw NonPositiveWeight("rho_from_omega: omega must be positive");
  std::vector<double> rho(omega.size());
  for (int id = 0; id < g.vertex_count(); ++id) {
    const int par = g.tree_parent_id(id);
    rho[id] = par < 0 ? omega[id] : omega[id] / omega[par];
  }
  return custom_rho(g, rho);
}

double edge_integral(const FillingGraph& g, const WeightAssignment& w, int u, int v) {
  if (u == v || !g.adjacent(u, v)) {
    std::ostringstream os;
    os << "edge_integral: vertices " << u << " and " << v << " are not neighbors";
    throw NotAnEdge(os.str());
  }
  return 0.5 * (w.pi[u] + w.pi[v]);
}

}  // namespace hypfill
