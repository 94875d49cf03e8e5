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

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypfill/io.hpp"
#include "hypfill/pipeline.hpp"

using nlohmann::json;
using namespace hypfill;

namespace {

int env_threads() {
  if (const char* v = std::getenv("HYPFILL_THREADS")) {
    const int t = std::atoi(v);
    if (t >= 1) return t;
  }
  return 1;
}

struct GraphBundle {
  FiniteMetricSpace space;
  FillingGraph graph;
  WeightAssignment weights;
};

GraphBundle load_bundle(const std::string& space_path, const std::string& graph_path,
                        const std::string& weights_path) {
  GraphBundle b;
  b.space = load_space(space_path, std::nullopt);
  b.graph = graph_from_json(b.space, json::parse(read_text_file(graph_path)));
  if (!weights_path.empty())
    b.weights = weights_from_json(b.graph, json::parse(read_text_file(weights_path)));
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic fillings of finite metric spaces: construction, "
               "weights, uniformized metric, and condition verification"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a canonical test space");
  std::string gen_kind = "circle", gen_out = "space.json";
  int gen_level = 8, gen_n = 256;
  gen->add_option("--kind", gen_kind, "cantor|circle|sierpinski")->required();
  gen->add_option("--level", gen_level, "cantor/sierpinski level");
  gen->add_option("--n", gen_n, "circle point count");
  gen->add_option("--out", gen_out, "output space JSON");

  // ---- run ----
  auto* run = app.add_subcommand("run", "full pipeline: space -> report bundle");
  RunConfig rc;
  std::string run_input;
  double run_normalize = -1;
  run->add_option("--kind", rc.kind, "cantor|circle|sierpinski (or use --input)");
  run->add_option("--input", run_input, "distance-matrix CSV or space/point-cloud JSON");
  run->add_option("--level", rc.level, "generator level");
  run->add_option("--n", rc.n, "circle point count");
  run->add_option("--normalize", run_normalize, "diameter target for file inputs");
  run->add_option("--alpha", rc.alpha, "net scale parameter (>= 2)");
  run->add_option("--tau", rc.tau, "horizontal ball parameter");
  run->add_option("--depth", rc.depth, "truncation depth");
  run->add_option("--rho", rc.rho, "constant:<c> | measure | custom:<file>");
  run->add_option("--p", rc.oracle_p, "measure exponent (default: known dimension)");
  run->add_option("--rep-level", rc.rep_level, "boundary representative level (-1: depth)");
  run->add_option("--sample-points", rc.sample_points, "boundary sample size");
  run->add_option("--triples", rc.triple_count, "quasisymmetry triple count");
  run->add_option("--cell-cap", rc.cell_cap, "(H4)/p* cell cap");
  run->add_option("--delta-cap", rc.delta_cap, "four-point sample cap");
  run->add_option("--ball-metric", rc.ball_metric, "ahlfors ball metric: dz|rho");
  run->add_option("--seed", rc.seed, "subsampling seed");
  run->add_option("--out-dir", rc.out_dir, "output directory");

  // ---- check ----
  auto* check = app.add_subcommand("check", "re-verify an existing graph + weights");
  std::string ck_space, ck_graph, ck_weights;
  check->add_option("--space", ck_space)->required();
  check->add_option("--graph", ck_graph)->required();
  check->add_option("--weights", ck_weights)->required();

  // ---- boundary ----
  auto* bnd = app.add_subcommand("boundary", "pairwise boundary distance matrix");
  std::string bd_space, bd_graph, bd_weights, bd_out = "dmatrix";
  int bd_rep = -1, bd_sample = 64;
  bnd->add_option("--space", bd_space)->required();
  bnd->add_option("--graph", bd_graph)->required();
  bnd->add_option("--weights", bd_weights)->required();
  bnd->add_option("--rep-level", bd_rep, "representative level (-1: depth)");
  bnd->add_option("--sample-points", bd_sample, "point sample size");
  bnd->add_option("--out", bd_out, "output basename (.csv and .json)");

  // ---- export ----
  auto* exp = app.add_subcommand("export", "emit a graph as json or dot");
  std::string ex_space, ex_graph, ex_format = "dot", ex_out;
  exp->add_option("--space", ex_space)->required();
  exp->add_option("--graph", ex_graph)->required();
  exp->add_option("--format", ex_format, "json|dot");
  exp->add_option("--out", ex_out, "output file (stdout when omitted)");

  // ---- diff ----
  auto* diff = app.add_subcommand("diff", "field-by-field report comparison");
  std::string df_a, df_b;
  diff->add_option("a", df_a)->required();
  diff->add_option("b", df_b)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      GeneratedSpace gs = gen_kind == "cantor"    ? make_cantor(gen_level)
                          : gen_kind == "circle" ? make_circle(gen_n)
                          : gen_kind == "sierpinski"
                              ? make_sierpinski(gen_level)
                              : throw Error("unknown generator kind '" + gen_kind + "'");
      write_text_file(gen_out,
                      space_to_json(gs.space, &gs.natural_measure, gs.known_dimension).dump(2) +
                          "\n");
      std::cout << "wrote " << gen_out << " (" << gs.space.size() << " points)\n";
      return 0;
    }
    if (run->parsed()) {
      if (!run_input.empty()) {
        rc.kind = "file";
        rc.input_path = run_input;
      }
      if (run_normalize > 0) rc.normalize = run_normalize;
      rc.threads = env_threads();
      const int code = run_pipeline(rc, std::cerr);
      if (code == 0) std::cout << "report bundle written to " << rc.out_dir << "\n";
      return code;
    }
    if (check->parsed()) {
      auto b = load_bundle(ck_space, ck_graph, ck_weights);
      auto rescanned = recompute_edges(b.graph);
      auto stored = b.graph.edges();
      auto key = [](const GraphEdge& e) { return std::tuple(e.a, e.b, e.kind); };
      auto cmp = [&key](const GraphEdge& x, const GraphEdge& y) { return key(x) < key(y); };
      std::sort(rescanned.begin(), rescanned.end(), cmp);
      std::sort(stored.begin(), stored.end(), cmp);
      const bool edges_ok =
          rescanned.size() == stored.size() &&
          std::equal(rescanned.begin(), rescanned.end(), stored.begin(),
                     [&key](const GraphEdge& x, const GraphEdge& y) { return key(x) == key(y); });
      VerifierOptions vo;
      vo.num_threads = env_threads();
      const auto rep = verify_conditions(b.graph, b.weights, vo);
      json out = {{"edge_rescan_ok", edges_ok},
                  {"clause8_violations", clause8_violations(b.graph)},
                  {"h1",
                   {{"eta_minus", rep.h1.eta_minus},
                    {"eta_plus", rep.h1.eta_plus},
                    {"holds", rep.h1.holds}}},
                  {"K0", rep.k0},
                  {"K1", rep.h3.k1},
                  {"K2", rep.k2_at_p},
                  {"p", rep.analysis_p},
                  {"p_star", {{"median", rep.p_star.median}}},
                  {"delta", rep.delta},
                  {"n_gap", rep.n_gap}};
      std::cout << out.dump(2) << "\n";
      return edges_ok ? 0 : 2;
    }
    if (bnd->parsed()) {
      auto b = load_bundle(bd_space, bd_graph, bd_weights);
      const int rep_level = bd_rep < 0 ? b.graph.depth() : bd_rep;
      const auto pts = stride_sample(b.space.size(), bd_sample);
      const auto m = drho_matrix(b.graph, b.weights, pts, rep_level, env_threads());
      write_text_file(bd_out + ".csv", matrix_to_csv(m));
      write_text_file(bd_out + ".json", matrix_sidecar(m).dump(2) + "\n");
      std::cout << "wrote " << bd_out << ".csv and " << bd_out << ".json\n";
      return 0;
    }
    if (exp->parsed()) {
      auto space = load_space(ex_space, std::nullopt);
      auto g = graph_from_json(space, json::parse(read_text_file(ex_graph)));
      const std::string text = export_graph(g, ex_format);
      if (ex_out.empty())
        std::cout << text;
      else
        write_text_file(ex_out, text);
      return 0;
    }
    if (diff->parsed()) {
      const auto a = json::parse(read_text_file(df_a));
      const auto b = json::parse(read_text_file(df_b));
      std::cout << diff_reports(a, b) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
