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

#include "hypfill/pipeline.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hypfill/errors.hpp"
#include "hypfill/io.hpp"

namespace hypfill {

using nlohmann::json;

namespace {

std::string error_name(const Error& e) {
  if (dynamic_cast<const MetricViolation*>(&e)) return "MetricViolation";
  if (dynamic_cast<const DiameterOutOfRange*>(&e)) return "DiameterOutOfRange";
  if (dynamic_cast<const DegenerateSpace*>(&e)) return "DegenerateSpace";
  if (dynamic_cast<const SizeLimit*>(&e)) return "SizeLimit";
  if (dynamic_cast<const DepthExceeded*>(&e)) return "DepthExceeded";
  if (dynamic_cast<const UnknownFormat*>(&e)) return "UnknownFormat";
  if (dynamic_cast<const MissingVertex*>(&e)) return "MissingVertex";
  if (dynamic_cast<const NonPositiveWeight*>(&e)) return "NonPositiveWeight";
  if (dynamic_cast<const ZeroMass*>(&e)) return "ZeroMass";
  if (dynamic_cast<const NotAnEdge*>(&e)) return "NotAnEdge";
  if (dynamic_cast<const EtaPlusNotBelowOne*>(&e)) return "EtaPlusNotBelowOne";
  if (dynamic_cast<const SchemaMismatch*>(&e)) return "SchemaMismatch";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  return "Error";
}

struct StageFailure {
  std::string diagnostic;
};

[[noreturn]] void fail_stage(const std::string& stage, const Error& e) {
  std::ostringstream os;
  if (const auto* mv = dynamic_cast<const MetricViolation*>(&e)) {
    os << stage << ": MetricViolation (" << mv->i << "," << mv->k << "," << mv->j << "): "
       << e.what();
  } else {
    os << stage << ": " << error_name(e) << ": " << e.what();
  }
  throw StageFailure{os.str()};
}

struct PipelineData {
  FiniteMetricSpace space;
  std::vector<double> masses;
  std::optional<double> known_dimension;
  FillingGraph graph;
  WeightAssignment weights;
  ConditionReport conditions;
  BoundarySample bs;
  BiHolderReport biholder;
  MeetReport meet;
  QsReport qs;
  BoundaryMeasure mu;
  AhlforsReport ahlfors;
  DiamReport diam;
  ScaleIndexReport scale;
  json report;
};

json report_json(const RunConfig& c, const PipelineData& d) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["config"] = config_to_json(c);
  j["space"] = {{"n", d.space.size()},
                {"diam", d.space.diameter()},
                {"label", d.space.label()},
                {"resolution", d.space.resolution()}};
  const auto& g = d.graph;
  json level_sizes = json::array();
  for (const auto& lev : g.nets().levels) level_sizes.push_back(lev.size());
  int n_h = 0, n_v = 0;
  for (const auto& e : g.edges()) (e.kind == EdgeKind::horizontal ? n_h : n_v)++;
  j["nets"] = {{"level_sizes", level_sizes},
               {"depth", g.depth()},
               {"requested_depth", g.nets().requested_depth},
               {"capped", g.nets().capped},
               {"resolution_exceeded", g.nets().resolution_exceeded}};
  j["graph"] = {{"vertices", g.vertex_count()},
                {"horizontal_edges", n_h},
                {"vertical_edges", n_v},
                {"max_degree", g.max_degree()},
                {"overlap_profile", g.overlap_profile()},
                {"clause8_violations", clause8_violations(g)},
                {"regime_basic", g.regime().basic()},
                {"j0", g.regime().j0()}};
  const auto& cr = d.conditions;
  j["h1"] = {{"eta_minus", cr.h1.eta_minus},
             {"eta_plus", cr.h1.eta_plus},
             {"holds", cr.h1.holds},
             {"saturated_levels", cr.h1.saturated_levels}};
  j["h2"] = {{"K0", cr.k0}};
  j["h3"] = {{"K1", cr.h3.k1},
             {"witness", {cr.h3.witness[0], cr.h3.witness[1]}},
             {"pairs", cr.h3.pairs_used}};
  json grid = json::array();
  for (auto [p, k2] : cr.k2_grid) grid.push_back(json::array({p, k2}));
  j["h4"] = {{"grid", grid}, {"p", cr.analysis_p}, {"K2", cr.k2_at_p}};
  j["p_star"] = {{"median", cr.p_star.median},
                 {"min", cr.p_star.min},
                 {"max", cr.p_star.max},
                 {"cells", cr.p_star.cells_used},
                 {"no_root", cr.p_star.no_root}};
  j["delta"] = cr.delta;
  j["n_gap"] = cr.n_gap;
  j["boundary"] = {
      {"rep_level", d.bs.rep_level},
      {"tail_bound", d.bs.dmatrix.tail_bound},
      {"sample_size", d.bs.points.size()},
      {"biholder",
       {{"tau_minus", d.biholder.tau_minus},
        {"tau_plus", d.biholder.tau_plus},
        {"c", d.biholder.c_fit},
        {"C", d.biholder.C_fit},
        {"slope", d.biholder.slope},
        {"pairs", d.biholder.pairs_used},
        {"skipped", d.biholder.skipped}}},
      {"meet",
       {{"lower", d.meet.lower},
        {"upper", d.meet.upper},
        {"upper_bound", d.meet.upper_bound},
        {"upper_ok", d.meet.upper_ok},
        {"k1_consistency", d.meet.k1_consistency},
        {"pairs", d.meet.pairs_used},
        {"skipped", d.meet.skipped}}},
      {"qs",
       {{"C", d.qs.C_fit},
        {"theta", d.qs.theta},
        {"C_power", d.qs.C_power},
        {"triples", d.qs.triples_used},
        {"degenerate", d.qs.degenerate}}},
      {"mu", {{"level", d.mu.level}, {"p", d.mu.p}, {"total", d.mu.total}}},
      {"ahlfors",
       {{"metric", c.ball_metric},
        {"C_reg", d.ahlfors.c_reg},
        {"trend_slope", d.ahlfors.trend_slope},
        {"monotone_trend", d.ahlfors.monotone_trend},
        {"excluded_radii", d.ahlfors.excluded_radii},
        {"span", d.ahlfors.span}}},
      {"diam_comparison",
       {{"lower", d.diam.lower},
        {"upper", d.diam.upper},
        {"cells", d.diam.cells_used},
        {"skipped", d.diam.skipped}}},
      {"scale_index",
       {{"checked", d.scale.checked},
        {"violations", d.scale.violations},
        {"exempt", d.scale.exempt}}}};
  return j;
}

PipelineData execute(const RunConfig& c) {
  PipelineData d;

  try {
    if (c.kind == "cantor" || c.kind == "circle" || c.kind == "sierpinski") {
      GeneratedSpace gen = c.kind == "cantor"    ? make_cantor(c.level)
                           : c.kind == "circle" ? make_circle(c.n)
                                                : make_sierpinski(c.level);
      d.space = std::move(gen.space);
      d.masses = std::move(gen.natural_measure);
      d.known_dimension = gen.known_dimension;
    } else if (c.kind == "file") {
      d.space = load_space(c.input_path, c.normalize);
      if (c.input_path.size() >= 5 &&
          c.input_path.substr(c.input_path.size() - 5) == ".json") {
        const json sj = json::parse(read_text_file(c.input_path));
        if (auto m = masses_from_json(sj)) d.masses = *m;
        if (sj.contains("known_dimension"))
          d.known_dimension = sj["known_dimension"].get<double>();
      }
      if (d.masses.empty())
        d.masses.assign(d.space.size(), 1.0 / d.space.size());
    } else {
      throw Error("unknown input kind '" + c.kind + "'");
    }
  } catch (const Error& e) {
    fail_stage("metric_space", e);
  }

  try {
    d.graph = FillingGraph::build(d.space, c.alpha, c.tau, c.depth);
  } catch (const Error& e) {
    fail_stage("filling", e);
  }

  double analysis_p = 0;
  try {
    if (c.rho.rfind("constant:", 0) == 0) {
      d.weights = constant_rho(d.graph, std::stod(c.rho.substr(9)));
    } else if (c.rho == "measure") {
      const double p = c.oracle_p > 0 ? c.oracle_p : d.known_dimension.value_or(1.0);
      d.weights = measure_rho(d.graph, discrete_oracle(d.space, d.masses, p));
      analysis_p = p;
    } else if (c.rho.rfind("custom:", 0) == 0) {
      const json wj = json::parse(read_text_file(c.rho.substr(7)));
      d.weights = weights_from_json(d.graph, wj);
    } else {
      throw Error("unknown rho spec '" + c.rho + "' (constant:<c>|measure|custom:<file>)");
    }
  } catch (const Error& e) {
    fail_stage("weights", e);
  }

  const int rep_level = c.rep_level < 0 ? d.graph.depth() : c.rep_level;
  try {
    VerifierOptions vo;
    vo.rep_level = rep_level;
    vo.sample_points = c.sample_points;
    vo.cell_cap = c.cell_cap;
    vo.delta_cap = c.delta_cap;
    vo.seed = c.seed;
    vo.analysis_p = analysis_p;
    vo.num_threads = c.threads;
    d.conditions = verify_conditions(d.graph, d.weights, vo);
  } catch (const Error& e) {
    fail_stage("verifier", e);
  }

  try {
    if (!d.conditions.h1.holds)
      throw EtaPlusNotBelowOne("boundary checks require eta_plus < 1");
    const auto pts = stride_sample(d.space.size(), c.sample_points);
    d.bs = build_boundary_sample(d.graph, d.weights, pts, rep_level, c.threads);
    d.biholder = check_biholder(d.bs, d.graph, d.weights.eta_minus, d.weights.eta_plus);
    d.meet = check_meet_comparability(d.bs, d.graph, d.weights);
    d.qs = qs_envelope(d.bs, d.graph, d.weights.eta_minus, d.weights.eta_plus, c.triple_count,
                       c.seed);
    d.mu = build_mu_n(d.graph, d.weights, d.graph.depth(), d.conditions.analysis_p);

    const BallMetric metric = c.ball_metric == "rho" ? BallMetric::rho : BallMetric::dz;
    if (metric == BallMetric::dz) {
      const auto radii =
          dyadic_radii(d.space.diameter() / 2, d.space.resolution(), 10);
      d.ahlfors = check_ahlfors(d.bs, d.graph, d.mu, d.bs.points, radii, metric);
    } else {
      // rho-mode balls need pairwise representative distances for every
      // mu vertex, so the sample is the whole level.
      BoundarySample bs_mu = build_boundary_sample(d.graph, d.weights, d.mu.point_ids,
                                                   rep_level, c.threads);
      double r_max = 0, min_pos = 0;
      for (int i = 0; i < bs_mu.dmatrix.n(); ++i)
        for (int jx = i + 1; jx < bs_mu.dmatrix.n(); ++jx) {
          const double v = bs_mu.dmatrix.at(i, jx);
          r_max = std::max(r_max, v);
          if (v > 0 && (min_pos == 0 || v < min_pos)) min_pos = v;
        }
      const double floor_r = std::max(min_pos, 2 * bs_mu.dmatrix.tail_bound);
      const auto radii = dyadic_radii(r_max, floor_r, 10);
      const auto centers = stride_sample(static_cast<int>(d.mu.point_ids.size()),
                                         c.sample_points);
      std::vector<int> center_pts;
      for (int ci : centers) center_pts.push_back(d.mu.point_ids[ci]);
      d.ahlfors = check_ahlfors(bs_mu, d.graph, d.mu, center_pts, radii, metric);
    }

    // Diameter comparison over seeded vertices of intermediate levels.
    std::vector<int> diam_cells;
    {
      std::vector<int> candidates;
      for (int id = 0; id < d.graph.vertex_count(); ++id) {
        const int lev = d.graph.level_of(id);
        if (lev >= 1 && lev < d.graph.depth()) candidates.push_back(id);
      }
      Rng rng(c.seed);
      if (static_cast<int>(candidates.size()) > 64) {
        for (int k : rng.sample_indices(static_cast<int>(candidates.size()), 64))
          diam_cells.push_back(candidates[k]);
      } else {
        diam_cells = candidates;
      }
    }
    d.diam = check_diam_comparison(d.graph, d.weights, d.bs, diam_cells);
    d.scale = check_scale_index(d.bs, d.graph);
  } catch (const Error& e) {
    fail_stage("boundary", e);
  }

  d.report = report_json(c, d);
  return d;
}

}  // namespace

json config_to_json(const RunConfig& c) {
  json j;
  j["kind"] = c.kind;
  if (c.kind == "file") j["input"] = c.input_path;
  if (c.kind == "cantor" || c.kind == "sierpinski") j["level"] = c.level;
  if (c.kind == "circle") j["n"] = c.n;
  if (c.normalize) j["normalize"] = *c.normalize;
  j["alpha"] = c.alpha;
  j["tau"] = c.tau;
  j["depth"] = c.depth;
  j["rho"] = c.rho;
  if (c.oracle_p > 0) j["oracle_p"] = c.oracle_p;
  j["rep_level"] = c.rep_level;
  j["sample_points"] = c.sample_points;
  j["triple_count"] = c.triple_count;
  j["cell_cap"] = c.cell_cap;
  j["delta_cap"] = c.delta_cap;
  j["ball_metric"] = c.ball_metric;
  j["seed"] = c.seed;
  return j;
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  c.kind = j.value("kind", c.kind);
  c.input_path = j.value("input", c.input_path);
  c.level = j.value("level", c.level);
  c.n = j.value("n", c.n);
  if (j.contains("normalize")) c.normalize = j["normalize"].get<double>();
  c.alpha = j.value("alpha", c.alpha);
  c.tau = j.value("tau", c.tau);
  c.depth = j.value("depth", c.depth);
  c.rho = j.value("rho", c.rho);
  c.oracle_p = j.value("oracle_p", c.oracle_p);
  c.rep_level = j.value("rep_level", c.rep_level);
  c.sample_points = j.value("sample_points", c.sample_points);
  c.triple_count = j.value("triple_count", c.triple_count);
  c.cell_cap = j.value("cell_cap", c.cell_cap);
  c.delta_cap = j.value("delta_cap", c.delta_cap);
  c.ball_metric = j.value("ball_metric", c.ball_metric);
  c.seed = j.value("seed", c.seed);
  return c;
}

json run_report(const RunConfig& config) {
  try {
    return execute(config).report;
  } catch (const StageFailure& f) {
    throw Error(f.diagnostic);
  }
}

int run_pipeline(const RunConfig& config, std::ostream& err) {
  namespace fs = std::filesystem;
  try {
    PipelineData d = execute(config);
    fs::create_directories(fs::path(config.out_dir) / "tables");
    const auto out = [&](const std::string& name) {
      return (fs::path(config.out_dir) / name).string();
    };
    write_text_file(out("graph.json"), graph_to_json(d.graph).dump(2) + "\n");
    write_text_file(out("weights.json"), weights_to_json(d.graph, d.weights).dump(2) + "\n");
    write_text_file(out("report.json"), d.report.dump(2) + "\n");
    write_text_file(out("tables/dmatrix.csv"), matrix_to_csv(d.bs.dmatrix));
    write_text_file(out("tables/dmatrix.json"), matrix_sidecar(d.bs.dmatrix).dump(2) + "\n");
    std::ostringstream ahl;
    ahl.precision(17);
    ahl << "center,radius,ratio\n";
    for (const auto& row : d.ahlfors.table)
      ahl << row.center << ',' << row.radius << ',' << row.ratio << '\n';
    write_text_file(out("tables/ahlfors.csv"), ahl.str());
    return 0;
  } catch (const StageFailure& f) {
    err << f.diagnostic << "\n";
    return 2;
  } catch (const Error& e) {
    err << "io: " << error_name(e) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal: " << e.what() << "\n";
    return 2;
  }
}

namespace {

void diff_walk(const json& a, const json& b, const std::string& path,
               std::vector<std::string>& out) {
  if (a == b) return;
  if (a.is_object() && b.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it) {
      const std::string sub = path.empty() ? it.key() : path + "." + it.key();
      if (!b.contains(it.key()))
        out.push_back(sub + ": removed");
      else
        diff_walk(it.value(), b[it.key()], sub, out);
    }
    for (auto it = b.begin(); it != b.end(); ++it)
      if (!a.contains(it.key()))
        out.push_back((path.empty() ? it.key() : path + "." + it.key()) + ": added");
    return;
  }
  if (a.is_array() && b.is_array() && a.size() == b.size()) {
    for (size_t i = 0; i < a.size(); ++i)
      diff_walk(a[i], b[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  if (a.is_number() && b.is_number()) {
    const double x = a.get<double>(), y = b.get<double>();
    const double denom = std::max({1.0, std::abs(x), std::abs(y)});
    std::ostringstream os;
    os << path << ": " << x << " -> " << y << " (rel " << std::abs(x - y) / denom << ")";
    out.push_back(os.str());
    return;
  }
  out.push_back(path + ": " + a.dump() + " -> " + b.dump());
}

}  // namespace

std::string diff_reports(const json& a, const json& b) {
  const std::string va = a.value("schema_version", "");
  const std::string vb = b.value("schema_version", "");
  if (va != vb)
    throw SchemaMismatch("schema_version mismatch: '" + va + "' vs '" + vb + "'");
  std::vector<std::string> lines;
  diff_walk(a, b, "", lines);
  if (lines.empty()) return "no differences";
  std::ostringstream os;
  for (size_t i = 0; i < lines.size() && i < 200; ++i) os << lines[i] << "\n";
  if (lines.size() > 200) os << "... (" << lines.size() - 200 << " more)\n";
  return os.str();
}

}  // namespace hypfill
