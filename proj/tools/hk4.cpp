// Command-line front end: generators, tiler/oracle/reachability/lattice runs,
// quantization reports, the end-to-end pipeline, threshold scans, and
// certificate replay. Exit codes: 0 success, 1 domain failure (no factor,
// certificate not found, validation failed), 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "hk4/coloring.hpp"
#include "hk4/geometry.hpp"
#include "hk4/graph.hpp"
#include "hk4/json_io.hpp"
#include "hk4/lattice.hpp"
#include "hk4/oracle.hpp"
#include "hk4/pipeline.hpp"
#include "hk4/reachability.hpp"
#include "hk4/tiler.hpp"

namespace {

using namespace hk4;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text << "\n";
}

Rat parse_fraction(const std::string& s, const char* what) {
  try {
    return Rat::parse(s);
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(what) + ": expected a fraction a/b, got '" + s + "'");
  }
}

std::vector<Vertex> parse_vertex_list(const std::string& s) {
  std::vector<Vertex> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heavy-K4 tilings of edge-weighted complete graphs"};
  app.require_subcommand(1);

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a graph file");
  gen->require_subcommand(1);
  std::string gen_out, gen_t = "1/2", gen_mu = "0", gen_dist = "uniform",
              gen_format = "text";
  int gen_n = 8, gen_r = 4;
  long long gen_d = 1000000;
  uint64_t gen_seed = 0;

  auto add_gen_common = [&](CLI::App* sub) {
    sub->add_option("--n", gen_n, "vertex count")->required();
    sub->add_option("--D", gen_d, "weight denominator");
    sub->add_option("--t", gen_t, "heaviness threshold as a/b");
    sub->add_option("-o,--out", gen_out, "output path")->required();
    sub->add_option("--format", gen_format, "text|json");
  };
  auto* gen_ext = gen->add_subcommand("extremal", "tightness construction");
  add_gen_common(gen_ext);
  gen_ext->add_option("--r", gen_r, "clique size r (r | n)");
  auto* gen_rand = gen->add_subcommand("random", "uniform random weights");
  add_gen_common(gen_rand);
  gen_rand->add_option("--dist", gen_dist, "distribution (uniform)");
  gen_rand->add_option("--seed", gen_seed, "rng seed")->required();
  auto* gen_mind =
      gen->add_subcommand("random-mindeg", "random with min-degree repair");
  add_gen_common(gen_mind);
  gen_mind->add_option("--mu", gen_mu, "degree-condition slack as a/b")
      ->required();
  gen_mind->add_option("--seed", gen_seed, "rng seed")->required();

  // ---- degree ---------------------------------------------------------------
  auto* degree = app.add_subcommand("degree", "weighted degrees and minimum");
  std::string deg_graph, deg_out;
  degree->add_option("-g,--graph", deg_graph, "graph file")->required();
  degree->add_option("-o,--out", deg_out, "output path");

  // ---- tile -----------------------------------------------------------------
  auto* tile = app.add_subcommand("tile", "almost-cover local search");
  std::string tile_graph, tile_out, tile_mu = "1/10";
  tile->add_option("-g,--graph", tile_graph, "graph file")->required();
  tile->add_option("--mu", tile_mu, "mu for bound reporting, as a/b");
  tile->add_option("-o,--out", tile_out, "output path");

  // ---- oracle ---------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "exact small-n ground truth");
  oracle->require_subcommand(1);
  std::string ora_graph, ora_out, ora_w;
  int ora_u = 0, ora_v = 1, ora_s = 1, ora_cap = 18;
  auto* ora_factor = oracle->add_subcommand("factor", "heavy K4-factor exists?");
  auto* ora_max = oracle->add_subcommand("maxtile", "maximum heavy tiling size");
  auto* ora_conn = oracle->add_subcommand("connector", "connector exists?");
  for (auto* sub : {ora_factor, ora_max, ora_conn}) {
    sub->add_option("-g,--graph", ora_graph, "graph file")->required();
    sub->add_option("-o,--out", ora_out, "output path");
    sub->add_option("--cap", ora_cap, "oracle size cap (hard limit 20)");
  }
  ora_conn->add_option("--u", ora_u, "first endpoint")->required();
  ora_conn->add_option("--v", ora_v, "second endpoint")->required();
  ora_conn->add_option("--s", ora_s, "connector scale (1 or 2)");
  ora_conn->add_option("--w", ora_w, "forbidden vertices v1,v2,...");

  // ---- reach ----------------------------------------------------------------
  auto* reach = app.add_subcommand("reach", "reachability certificates");
  reach->require_subcommand(1);
  std::string reach_graph, reach_out, reach_w, reach_gamma = "15/100",
              reach_beta = "1/100";
  int reach_u = 0, reach_v = 1, reach_m = 0, reach_s = 1;
  int reach_v1 = 0, reach_v2 = 1, reach_v3 = 2;
  int reach_pairs = 64;
  uint64_t reach_seed = 0;
  bool reach_driver = false;
  auto* reach_cert = reach->add_subcommand("certify", "disjoint-connector certificate");
  reach_cert->add_option("-g,--graph", reach_graph, "graph file")->required();
  reach_cert->add_option("--u", reach_u)->required();
  reach_cert->add_option("--v", reach_v)->required();
  reach_cert->add_option("--m", reach_m, "forbidden-set budget");
  reach_cert->add_option("--s", reach_s, "connector scale");
  reach_cert->add_option("-o,--out", reach_out);
  auto* reach_tft = reach->add_subcommand("two-from-three", "constructive pair");
  reach_tft->add_option("-g,--graph", reach_graph, "graph file")->required();
  reach_tft->add_option("--v1", reach_v1)->required();
  reach_tft->add_option("--v2", reach_v2)->required();
  reach_tft->add_option("--v3", reach_v3)->required();
  reach_tft->add_option("--w", reach_w, "forbidden vertices v1,v2,...");
  reach_tft->add_option("-o,--out", reach_out);
  auto* reach_part = reach->add_subcommand("partition", "reachability partition");
  reach_part->add_option("-g,--graph", reach_graph, "graph file")->required();
  reach_part->add_option("--gamma", reach_gamma, "gamma as a/b");
  reach_part->add_option("--beta", reach_beta, "beta as a/b (driver)");
  reach_part->add_option("--m", reach_m, "forbidden-set budget");
  reach_part->add_option("--s", reach_s, "connector scale");
  reach_part->add_option("--sample-pairs", reach_pairs, "witness probe budget");
  reach_part->add_option("--seed", reach_seed, "rng seed")->required();
  reach_part->add_flag("--full-driver", reach_driver,
                       "run the full driver (B detection + merge path)");
  reach_part->add_option("-o,--out", reach_out);

  // ---- absorb ---------------------------------------------------------------
  auto* absorb = app.add_subcommand("absorb", "absorbers and absorbing sets");
  absorb->require_subcommand(1);
  std::string abs_graph, abs_out, abs_target, abs_forbidden, abs_gamma = "15/100",
              abs_xi = "1/100";
  int abs_s = 1, abs_m = 0, abs_checks = 0;
  uint64_t abs_seed = 0;
  auto* abs_build = absorb->add_subcommand("build", "absorber for one 4-set");
  abs_build->add_option("-g,--graph", abs_graph, "graph file")->required();
  abs_build->add_option("--target", abs_target, "4-set v1,v2,v3,v4")->required();
  abs_build->add_option("--s", abs_s, "connector scale");
  abs_build->add_option("--m", abs_m, "forbidden-set budget");
  abs_build->add_option("--forbidden", abs_forbidden, "avoid vertices v1,v2,...");
  abs_build->add_option("-o,--out", abs_out);
  auto* abs_set = absorb->add_subcommand("build-set", "aggregate absorbing set");
  abs_set->add_option("-g,--graph", abs_graph, "graph file")->required();
  abs_set->add_option("--gamma", abs_gamma, "size budget gamma as a/b");
  abs_set->add_option("--xi", abs_xi, "leftover fraction xi as a/b");
  abs_set->add_option("--s", abs_s, "connector scale");
  abs_set->add_option("--m", abs_m, "forbidden-set budget");
  abs_set->add_option("--spot-checks", abs_checks, "random leftovers to verify");
  abs_set->add_option("--seed", abs_seed, "rng seed")->required();
  abs_set->add_option("-o,--out", abs_out);

  // ---- lattice --------------------------------------------------------------
  auto* lattice = app.add_subcommand("lattice", "index vectors and merges");
  lattice->require_subcommand(1);
  std::string lat_graph, lat_out, lat_parts, lat_beta = "1/100", lat_index;
  int lat_x = -1, lat_y = -1, lat_s = 1, lat_m = 0;
  auto* lat_robust = lattice->add_subcommand("robust", "robust-vector certificate");
  lat_robust->add_option("-g,--graph", lat_graph, "graph file")->required();
  lat_robust->add_option("-p,--partition", lat_parts, "partition file")->required();
  lat_robust->add_option("--index", lat_index, "index vector i1,i2,...")->required();
  lat_robust->add_option("--beta", lat_beta, "beta as a/b");
  lat_robust->add_option("-o,--out", lat_out);
  auto* lat_tr = lattice->add_subcommand("transferral", "find a transferral");
  lat_tr->add_option("-g,--graph", lat_graph, "graph file")->required();
  lat_tr->add_option("-p,--partition", lat_parts, "partition file")->required();
  lat_tr->add_option("--beta", lat_beta, "beta as a/b");
  lat_tr->add_option("-o,--out", lat_out);
  auto* lat_merge = lattice->add_subcommand("merge", "merge two parts");
  lat_merge->add_option("-g,--graph", lat_graph, "graph file")->required();
  lat_merge->add_option("-p,--partition", lat_parts, "partition file")->required();
  lat_merge->add_option("--x", lat_x, "vertex in V_i")->required();
  lat_merge->add_option("--y", lat_y, "vertex in V_j")->required();
  lat_merge->add_option("--beta", lat_beta, "beta as a/b");
  lat_merge->add_option("--s", lat_s, "connector scale");
  lat_merge->add_option("--m", lat_m, "forbidden-set budget");
  lat_merge->add_option("-o,--out", lat_out);

  // ---- reduce ---------------------------------------------------------------
  auto* reduce = app.add_subcommand("reduce", "quantization and reduced weights");
  reduce->require_subcommand(1);
  std::string red_graph, red_out, red_parts, red_c = "0", red_mu = "0",
              red_d, red_eps = "0";
  int red_p = 4;
  auto* red_q = reduce->add_subcommand("quantize", "color classes c(w,p)");
  red_q->add_option("-g,--graph", red_graph, "graph file")->required();
  red_q->add_option("--p", red_p, "number of colors (p | D)")->required();
  red_q->add_option("-o,--out", red_out);
  auto* red_w = reduce->add_subcommand("weights", "reduced weights w_R");
  red_w->add_option("-g,--graph", red_graph, "graph file")->required();
  red_w->add_option("--p", red_p, "number of colors (p | D)")->required();
  red_w->add_option("--partition", red_parts, "partition file")->required();
  red_w->add_option("-o,--out", red_out);
  auto* red_deg = reduce->add_subcommand("degree-report", "reduced min degree");
  red_deg->add_option("-g,--graph", red_graph, "graph file")->required();
  red_deg->add_option("--p", red_p, "number of colors (p | D)")->required();
  red_deg->add_option("--partition", red_parts, "partition file")->required();
  red_deg->add_option("--c", red_c, "degree constant c as a/b")->required();
  red_deg->add_option("--mu", red_mu, "mu as a/b")->required();
  red_deg->add_option("--d", red_d, "density vector d1,d2,... as fractions")
      ->required();
  red_deg->add_option("--eps", red_eps, "epsilon as a/b")->required();
  red_deg->add_option("-o,--out", red_out);

  // ---- pipeline ---------------------------------------------------------------
  auto* pipe = app.add_subcommand("pipeline", "absorb + almost-cover + finish");
  std::string pipe_graph, pipe_out, pipe_mu = "1/10", pipe_gamma = "15/100",
              pipe_xi = "1/100", pipe_beta = "1/100";
  uint64_t pipe_seed = 0;
  pipe->add_option("-g,--graph", pipe_graph, "graph file")->required();
  pipe->add_option("--mu", pipe_mu, "mu as a/b");
  pipe->add_option("--gamma", pipe_gamma, "gamma as a/b");
  pipe->add_option("--xi", pipe_xi, "xi as a/b");
  pipe->add_option("--beta", pipe_beta, "beta as a/b");
  pipe->add_option("--seed", pipe_seed, "rng seed")->required();
  pipe->add_option("-o,--out", pipe_out);

  // ---- scan -----------------------------------------------------------------
  auto* scan = app.add_subcommand("scan", "threshold scan, CSV output");
  std::string scan_out, scan_t = "1/2", scan_mu_grid, scan_seeds,
              scan_family = "random-mindeg", scan_mode = "auto";
  int scan_n = 8, scan_jobs = 1;
  long long scan_d = 1000000;
  scan->add_option("--n", scan_n, "vertex count")->required();
  scan->add_option("--t", scan_t, "threshold as a/b");
  scan->add_option("--mu-grid", scan_mu_grid, "comma-separated fractions")
      ->required();
  scan->add_option("--seeds", scan_seeds, "comma-separated seeds")->required();
  scan->add_option("--family", scan_family, "random-mindeg|extremal|allones");
  scan->add_option("--mode", scan_mode, "auto|exact|pipeline");
  scan->add_option("--D", scan_d, "weight denominator");
  scan->add_option("--jobs", scan_jobs, "worker pool size");
  scan->add_option("-o,--out", scan_out, "CSV path");

  // ---- validate ---------------------------------------------------------------
  auto* validate = app.add_subcommand("validate", "replay a JSON artifact");
  std::string val_graph, val_input;
  validate->add_option("-g,--graph", val_graph, "graph file")->required();
  validate->add_option("-i,--input", val_input, "artifact JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    // gen
    if (gen_ext->parsed() || gen_rand->parsed() || gen_mind->parsed()) {
      Rat t = parse_fraction(gen_t, "--t");
      if (!(Rat(0, 1) < t && t < Rat(1, 1)))
        throw CLI::ValidationError("--t must lie strictly between 0 and 1");
      WeightedCompleteGraph g = [&]() {
        if (gen_ext->parsed()) return make_extremal(gen_n, gen_r, t, gen_d);
        if (gen_rand->parsed())
          return make_random(gen_n, gen_d, t, gen_dist, gen_seed);
        return make_random_with_min_degree(gen_n, gen_d, t,
                                           parse_fraction(gen_mu, "--mu"),
                                           gen_seed);
      }();
      save_graph(g, gen_out, gen_format == "json");
      return 0;
    }

    if (degree->parsed()) {
      auto g = load_graph(deg_graph);
      emit(degree_json(g, min_weighted_degree(g)), deg_out);
      return 0;
    }

    if (tile->parsed()) {
      auto g = load_graph(tile_graph);
      TilingReport rep = almost_cover(g, parse_fraction(tile_mu, "--mu"));
      emit(tiling_json(g, rep), tile_out);
      return 0;
    }

    if (ora_factor->parsed() || ora_max->parsed() || ora_conn->parsed()) {
      auto g = load_graph(ora_graph);
      OracleResult r;
      if (ora_factor->parsed()) r = exact_factor_exists(g, ora_cap);
      else if (ora_max->parsed()) r = exact_max_tiling(g, ora_cap);
      else
        r = exact_connector_exists(g, ora_u, ora_v, parse_vertex_list(ora_w),
                                   ora_s, ora_cap);
      emit(oracle_json(g, r), ora_out);
      if (r.kind == "factor" && !r.answer_bool)
        throw DomainFailure("no heavy K4-factor exists");
      if (r.kind == "connector" && !r.answer_bool)
        throw DomainFailure("no connector exists");
      return 0;
    }

    if (reach_cert->parsed()) {
      auto g = load_graph(reach_graph);
      ReachParams params{reach_m, reach_s};
      auto cs = certify_reachable(g, reach_u, reach_v, params);
      if (!cs) throw DomainFailure("no certificate found (inconclusive)");
      emit(connector_list_json(g, *cs, reach_m), reach_out);
      return 0;
    }
    if (reach_tft->parsed()) {
      auto g = load_graph(reach_graph);
      auto r = two_from_three(g, reach_v1, reach_v2, reach_v3,
                              parse_vertex_list(reach_w));
      if (!r.ok()) throw DomainFailure("CONSTRUCTION_FAILED: " + r.error);
      emit(two_from_three_json(g, *r), reach_out);
      return 0;
    }
    if (reach_part->parsed()) {
      auto g = load_graph(reach_graph);
      ReachParams params{reach_m, reach_s};
      PartitionOptions opts;
      opts.sample_pairs = reach_pairs;
      opts.seed = reach_seed;
      Rat gamma = parse_fraction(reach_gamma, "--gamma");
      ReachabilityPartition p =
          reach_driver
              ? main_lemma_driver(g, gamma, parse_fraction(reach_beta, "--beta"),
                                  params, opts)
              : reachability_partition(g, params, gamma, opts);
      emit(partition_json(g, p), reach_out);
      return 0;
    }

    if (abs_build->parsed()) {
      auto g = load_graph(abs_graph);
      auto tv = parse_vertex_list(abs_target);
      if (tv.size() != 4)
        throw CLI::ValidationError("--target needs exactly 4 vertices");
      ReachParams params{abs_m, abs_s};
      auto r = build_absorber(g, {tv[0], tv[1], tv[2], tv[3]}, params,
                              parse_vertex_list(abs_forbidden));
      if (!r.ok()) throw DomainFailure("absorber construction failed: " + r.error);
      emit(absorber_json(g, *r, abs_s), abs_out);
      return 0;
    }
    if (abs_set->parsed()) {
      auto g = load_graph(abs_graph);
      ReachParams params{abs_m, abs_s};
      Rat xi = parse_fraction(abs_xi, "--xi");
      auto r = build_absorbing_set(g, parse_fraction(abs_gamma, "--gamma"), xi,
                                   params, abs_seed);
      if (!r.ok()) throw DomainFailure("absorbing set failed: " + r.error);
      if (abs_checks > 0) {
        auto check = spot_verify_absorbing_set(g, *r, xi, abs_checks, abs_seed);
        std::cerr << "spot-check: " << check.successes << "/" << check.trials
                  << " leftovers absorbed\n";
        if (check.successes < check.trials)
          throw DomainFailure("spot verification failed");
      }
      emit(absorbing_set_json(g, *r, abs_s), abs_out);
      return 0;
    }

    if (lat_robust->parsed() || lat_tr->parsed() || lat_merge->parsed()) {
      auto g = load_graph(lat_graph);
      PartitionContext ctx = PartitionContext::load(lat_parts, g.size());
      Rat beta = parse_fraction(lat_beta, "--beta");
      if (lat_robust->parsed()) {
        std::vector<Vertex> raw = parse_vertex_list(lat_index);
        IndexVector iv(raw.begin(), raw.end());
        auto cert = certify_robust(g, ctx, iv, beta);
        if (!cert) throw DomainFailure("no robust certificate (inconclusive)");
        emit(robust_json(g, ctx, *cert, beta), lat_out);
        return 0;
      }
      auto tr = find_transferral(g, ctx, beta);
      if (!tr) throw DomainFailure("no transferral found");
      if (lat_tr->parsed()) {
        emit(transferral_json(g, ctx, *tr, beta), lat_out);
        return 0;
      }
      ReachParams params{lat_m, lat_s};
      auto merged = merge_parts(g, ctx, tr->i, tr->j, tr->cert_s, tr->cert_t,
                                lat_x, lat_y, params);
      if (!merged.ok()) throw DomainFailure("merge failed: " + merged.error);
      emit(connector_json(g, *merged), lat_out);
      return 0;
    }

    if (red_q->parsed()) {
      auto g = load_graph(red_graph);
      emit(quantize_json(g, quantize(g, red_p)), red_out);
      return 0;
    }
    if (red_w->parsed()) {
      auto g = load_graph(red_graph);
      auto parts = load_parts_file(red_parts, g.size());
      emit(reduced_json(g, reduced_weights(g, quantize(g, red_p), parts)),
           red_out);
      return 0;
    }
    if (red_deg->parsed()) {
      auto g = load_graph(red_graph);
      auto parts = load_parts_file(red_parts, g.size());
      std::vector<Rat> dvec;
      for (const std::string& tok : [&] {
             std::vector<std::string> toks;
             std::string cur;
             for (char ch : red_d) {
               if (ch == ',') {
                 toks.push_back(cur);
                 cur.clear();
               } else
                 cur += ch;
             }
             if (!cur.empty()) toks.push_back(cur);
             return toks;
           }())
        dvec.push_back(parse_fraction(tok, "--d"));
      auto rep = reduced_degree_report(
          g, quantize(g, red_p), parts, parse_fraction(red_c, "--c"),
          parse_fraction(red_mu, "--mu"), dvec, parse_fraction(red_eps, "--eps"));
      emit(reduced_degree_json(g, rep), red_out);
      return 0;
    }

    if (pipe->parsed()) {
      auto g = load_graph(pipe_graph);
      PipelineReport rep = run_pipeline(
          g, parse_fraction(pipe_mu, "--mu"), parse_fraction(pipe_gamma, "--gamma"),
          parse_fraction(pipe_xi, "--xi"), parse_fraction(pipe_beta, "--beta"),
          pipe_seed);
      emit(pipeline_json(g, rep), pipe_out);
      if (!rep.factor_achieved) throw DomainFailure("no factor achieved");
      return 0;
    }

    if (scan->parsed()) {
      std::vector<Rat> grid;
      for (const auto& tok : [&] {
             std::vector<std::string> toks;
             std::string cur;
             for (char ch : scan_mu_grid) {
               if (ch == ',') {
                 toks.push_back(cur);
                 cur.clear();
               } else
                 cur += ch;
             }
             if (!cur.empty()) toks.push_back(cur);
             return toks;
           }())
        grid.push_back(parse_fraction(tok, "--mu-grid"));
      std::vector<uint64_t> seeds;
      for (Vertex s : parse_vertex_list(scan_seeds)) seeds.push_back((uint64_t)s);
      auto rows = threshold_scan(scan_n, parse_fraction(scan_t, "--t"), grid,
                                 seeds, scan_family, scan_mode, scan_d,
                                 scan_jobs);
      emit(scan_csv(rows), scan_out);
      return 0;
    }

    if (validate->parsed()) {
      auto g = load_graph(val_graph);
      std::ifstream in(val_input);
      if (!in) throw std::runtime_error("cannot open " + val_input);
      std::string text((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      auto violations = validate_artifact(g, text);
      if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
        return 1;
      }
      std::cerr << "artifact validates\n";
      return 0;
    }
  } catch (const DomainFailure& e) {
    std::cerr << "domain failure: " << e.what() << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
