#include "hk4/json_io.hpp"

#include <algorithm>

#include "json.hpp"

namespace hk4 {

using nlohmann::json;

namespace {

json graph_header(const WeightedCompleteGraph& g) {
  return json{{"n", g.size()}, {"D", g.denom()}, {"t_num", g.t_num()}};
}

json k4_list(const std::vector<std::array<Vertex, 4>>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(std::vector<Vertex>(s.begin(), s.end()));
  return out;
}

json connector_body(const Connector& c) {
  return json{{"u", c.u},
              {"v", c.v},
              {"S", c.s},
              {"scale", c.scale},
              {"factor_u", k4_list(c.factor_u)},
              {"factor_v", k4_list(c.factor_v)}};
}

Connector connector_from(const json& j) {
  Connector c;
  c.u = j.at("u").get<Vertex>();
  c.v = j.at("v").get<Vertex>();
  c.s = j.at("S").get<std::vector<Vertex>>();
  c.scale = j.at("scale").get<int>();
  for (const auto& e : j.at("factor_u")) {
    auto v = e.get<std::vector<Vertex>>();
    if (v.size() != 4) throw std::runtime_error("factor entry is not a 4-set");
    c.factor_u.push_back({v[0], v[1], v[2], v[3]});
  }
  for (const auto& e : j.at("factor_v")) {
    auto v = e.get<std::vector<Vertex>>();
    if (v.size() != 4) throw std::runtime_error("factor entry is not a 4-set");
    c.factor_v.push_back({v[0], v[1], v[2], v[3]});
  }
  return c;
}

json absorber_body(const Absorber& a) {
  json conns = json::array();
  for (const auto& s : a.connectors) conns.push_back(s);
  return json{{"target", std::vector<Vertex>(a.target.begin(), a.target.end())},
              {"A", a.a},
              {"core", std::vector<Vertex>(a.core.begin(), a.core.end())},
              {"connectors", conns},
              {"factor_A", k4_list(a.factor_a)},
              {"factor_AS", k4_list(a.factor_a_plus)}};
}

Absorber absorber_from(const json& j) {
  Absorber a;
  auto tgt = j.at("target").get<std::vector<Vertex>>();
  auto core = j.at("core").get<std::vector<Vertex>>();
  if (tgt.size() != 4 || core.size() != 4)
    throw std::runtime_error("absorber target/core is not a 4-set");
  std::copy(tgt.begin(), tgt.end(), a.target.begin());
  std::copy(core.begin(), core.end(), a.core.begin());
  a.a = j.at("A").get<std::vector<Vertex>>();
  auto conns = j.at("connectors");
  for (int i = 0; i < 4; ++i)
    a.connectors[i] = conns.at(i).get<std::vector<Vertex>>();
  for (const auto& e : j.at("factor_A")) {
    auto v = e.get<std::vector<Vertex>>();
    a.factor_a.push_back({v[0], v[1], v[2], v[3]});
  }
  for (const auto& e : j.at("factor_AS")) {
    auto v = e.get<std::vector<Vertex>>();
    a.factor_a_plus.push_back({v[0], v[1], v[2], v[3]});
  }
  return a;
}

std::vector<std::array<Vertex, 4>> k4s_from(const json& j) {
  std::vector<std::array<Vertex, 4>> out;
  for (const auto& e : j) {
    auto v = e.get<std::vector<Vertex>>();
    if (v.size() != 4) throw std::runtime_error("entry is not a 4-set");
    out.push_back({v[0], v[1], v[2], v[3]});
  }
  return out;
}

}  // namespace

std::string connector_json(const WeightedCompleteGraph& g, const Connector& c) {
  json j = connector_body(c);
  j["kind"] = "connector";
  j["graph"] = graph_header(g);
  return j.dump(2);
}

std::string connector_list_json(const WeightedCompleteGraph& g,
                                const std::vector<Connector>& cs, int m) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back(connector_body(c));
  json j{{"kind", "connector-list"},
         {"graph", graph_header(g)},
         {"m", m},
         {"count", cs.size()},
         {"connectors", arr}};
  return j.dump(2);
}

std::string absorber_json(const WeightedCompleteGraph& g, const Absorber& a,
                          int s) {
  json j = absorber_body(a);
  j["kind"] = "absorber";
  j["graph"] = graph_header(g);
  j["s"] = s;
  return j.dump(2);
}

std::string absorbing_set_json(const WeightedCompleteGraph& g,
                               const AbsorbingSet& set, int s) {
  json comps = json::array();
  for (const auto& c : set.components) comps.push_back(absorber_body(c));
  json j{{"kind", "absorbing-set"},
         {"graph", graph_header(g)},
         {"s", s},
         {"A", set.a},
         {"samples_tried", set.samples_tried},
         {"failures", set.failures},
         {"components", comps}};
  return j.dump(2);
}

std::string tiling_json(const WeightedCompleteGraph& g,
                        const TilingReport& rep) {
  json tri = json::array();
  for (const auto& t : rep.state.t)
    tri.push_back(std::vector<Vertex>(t.begin(), t.end()));
  json edges = json::array();
  for (const auto& m : rep.state.m)
    edges.push_back(std::vector<Vertex>(m.begin(), m.end()));
  json log = json::array();
  for (const auto& e : rep.move_log)
    log.push_back(json{{"kind", move_kind_name(e.kind)}, {"touched", e.touched}});
  json j{{"kind", "tiling"},
         {"graph", graph_header(g)},
         {"mu", rep.mu.str()},
         {"R", k4_list(rep.state.r)},
         {"T", tri},
         {"M", edges},
         {"I", rep.state.i},
         {"rho_num", rep.state.rho_num},
         {"sizes",
          json{{"R", rep.state.r.size()},
               {"T", rep.state.t.size()},
               {"M", rep.state.m.size()},
               {"I", rep.state.i.size()}}},
         {"uncovered", rep.uncovered},
         {"degree_condition_holds", rep.degree_condition_holds},
         {"bounds",
          json{{"T_le_3", rep.t_bound_ok},
               {"M_le_ceil_1_over_mu", rep.m_bound_ok},
               {"I_le_ceil_1_over_mu", rep.i_bound_ok},
               {"uncovered_le_9_plus_3_over_mu", rep.uncovered_within_lemma},
               {"uncovered_le_9_plus_6_over_mu", rep.uncovered_within_applied}}},
         {"move_log", log}};
  return j.dump(2);
}

std::string oracle_json(const WeightedCompleteGraph& g, const OracleResult& r) {
  json j{{"kind", "oracle"},
         {"graph", graph_header(g)},
         {"query", r.kind},
         {"visited_states", r.visited_states}};
  if (r.kind == "factor") j["answer"] = r.answer_bool;
  if (r.kind == "maxtile") j["answer"] = r.answer_int;
  if (r.kind == "connector") j["answer"] = r.answer_bool;
  if (r.witness) j["witness"] = k4_list(*r.witness);
  if (r.connector_witness) j["connector_witness"] = *r.connector_witness;
  return j.dump(2);
}

std::string degree_json(const WeightedCompleteGraph& g,
                        const DegreeSummary& d) {
  json j{{"kind", "degree"},
         {"graph", graph_header(g)},
         {"degree_num", d.degree_num},
         {"min_num", d.min_num},
         {"argmin", d.argmin},
         {"min", Rat(d.min_num, g.denom()).str()}};
  return j.dump(2);
}

std::string two_from_three_json(const WeightedCompleteGraph& g,
                                const TwoFromThree& t) {
  json j = connector_body(t.connector);
  j["kind"] = "connector";
  j["graph"] = graph_header(g);
  j["pair"] = std::vector<Vertex>(t.pair.begin(), t.pair.end());
  j["v4"] = t.v4;
  j["v5"] = t.v5;
  j["v6"] = t.v6;
  return j.dump(2);
}

std::string partition_json(const WeightedCompleteGraph& g,
                           const ReachabilityPartition& p) {
  json j{{"kind", "reach-partition"},
         {"graph", graph_header(g)},
         {"verdict",
          p.verdict == ReachabilityPartition::Verdict::Closed ? "closed"
                                                              : "partitioned"},
         {"branch", p.branch},
         {"V1", p.v1},
         {"V2", p.v2},
         {"B", p.b},
         {"witness_pair",
          std::vector<Vertex>(p.witness_pair.begin(), p.witness_pair.end())},
         {"unresolved", p.unresolved},
         {"size_check_ok", p.size_check_ok},
         {"closure_scale", p.closure_scale},
         {"inner_check",
          json{{"trials", p.inner_check_trials},
               {"successes", p.inner_check_successes}}}};
  return j.dump(2);
}

std::string robust_json(const WeightedCompleteGraph& g,
                        const PartitionContext& ctx,
                        const RobustCertificate& cert, Rat beta) {
  json parts = json::array();
  for (const auto& p : ctx.parts) parts.push_back(p);
  json j{{"kind", "robust-certificate"},
         {"graph", graph_header(g)},
         {"parts", parts},
         {"beta", beta.str()},
         {"index", cert.index},
         {"members", k4_list(cert.members)}};
  return j.dump(2);
}

std::string transferral_json(const WeightedCompleteGraph& g,
                             const PartitionContext& ctx, const Transferral& t,
                             Rat beta) {
  json parts = json::array();
  for (const auto& p : ctx.parts) parts.push_back(p);
  json j{{"kind", "transferral"},
         {"graph", graph_header(g)},
         {"parts", parts},
         {"beta", beta.str()},
         {"i", t.i},
         {"j", t.j},
         {"index_s", t.cert_s.index},
         {"index_t", t.cert_t.index},
         {"members_s", k4_list(t.cert_s.members)},
         {"members_t", k4_list(t.cert_t.members)}};
  return j.dump(2);
}

std::string reduced_json(const WeightedCompleteGraph& g,
                         const ReducedWeights& rw) {
  json pairs = json::array();
  for (const auto& pd : rw.pairs)
    pairs.push_back(json{{"i", pd.i},
                         {"j", pd.j},
                         {"color_counts", pd.color_counts},
                         {"w_R", pd.w_r.str()},
                         {"w_R_upper", pd.w_r_upper.str()}});
  json parts = json::array();
  for (const auto& p : rw.parts) parts.push_back(p);
  json j{{"kind", "reduced-weights"},
         {"graph", graph_header(g)},
         {"p", rw.p},
         {"parts", parts},
         {"pairs", pairs}};
  return j.dump(2);
}

std::string quantize_json(const WeightedCompleteGraph& g,
                          const ColorClassView& view) {
  std::vector<long long> counts(view.p, 0);
  for (uint16_t c : view.colors) ++counts[c - 1];
  json j{{"kind", "quantize"},
         {"graph", graph_header(g)},
         {"p", view.p},
         {"colors", view.colors},
         {"class_counts", counts}};
  return j.dump(2);
}

std::string reduced_degree_json(const WeightedCompleteGraph& g,
                                const ReducedDegreeReport& rep) {
  json j{{"kind", "reduced-degree"},
         {"graph", graph_header(g)},
         {"min_reduced_degree", rep.min_reduced_degree.str()},
         {"argmin_part", rep.argmin_part},
         {"lemma_bound", rep.lemma_bound.str()},
         {"meets_bound", rep.meets_bound},
         {"hypothesis_verified", rep.hypothesis_verified}};
  return j.dump(2);
}

std::string pipeline_json(const WeightedCompleteGraph& g,
                          const PipelineReport& rep) {
  json phases = json::array();
  for (const auto& ph : rep.phases)
    phases.push_back(json{{"name", ph.name},
                          {"ok", ph.ok},
                          {"detail", ph.detail},
                          {"wall_ms", ph.wall_ms}});
  json j{{"kind", "pipeline"},
         {"graph", graph_header(g)},
         {"params",
          json{{"mu", rep.mu.str()},
               {"gamma", rep.gamma.str()},
               {"xi", rep.xi.str()},
               {"beta", rep.beta.str()},
               {"seed", rep.seed}}},
         {"factor_achieved", rep.factor_achieved},
         {"absorbing_size", rep.absorbing_size},
         {"tiling_size", rep.tiling_size},
         {"leftover_size", rep.leftover_size},
         {"driver_branch", rep.driver_branch},
         {"phases", phases}};
  if (rep.factor_achieved) j["factor"] = k4_list(rep.factor);
  return j.dump(2);
}

std::vector<std::string> validate_artifact(const WeightedCompleteGraph& g,
                                           const std::string& json_text) {
  std::vector<std::string> out;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    out.push_back(std::string("bad JSON: ") + e.what());
    return out;
  }
  if (!j.contains("kind")) {
    out.push_back("artifact has no 'kind' field");
    return out;
  }
  if (j.contains("graph")) {
    const auto& gh = j["graph"];
    if (gh.at("n").get<int>() != g.size() ||
        gh.at("D").get<long long>() != g.denom() ||
        gh.at("t_num").get<long long>() != g.t_num())
      out.push_back("artifact graph header does not match the supplied graph");
  }
  std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "connector") {
      auto c = connector_from(j);
      auto bad = validate_connector(g, c);
      out.insert(out.end(), bad.begin(), bad.end());
    } else if (kind == "connector-list") {
      std::vector<Connector> cs;
      for (const auto& e : j.at("connectors")) cs.push_back(connector_from(e));
      std::vector<char> seen(g.size(), 0);
      for (const auto& c : cs) {
        auto bad = validate_connector(g, c);
        out.insert(out.end(), bad.begin(), bad.end());
        for (Vertex v : c.s) {
          if (seen[v]) out.push_back("connectors share vertex " + std::to_string(v));
          seen[v] = 1;
        }
      }
      if (j.contains("m") &&
          (long long)cs.size() < j["m"].get<long long>() + 1)
        out.push_back("fewer than m+1 connectors");
    } else if (kind == "absorber") {
      auto a = absorber_from(j);
      int s = j.value("s", 1);
      auto bad = validate_absorber(g, a, s);
      out.insert(out.end(), bad.begin(), bad.end());
    } else if (kind == "absorbing-set") {
      int s = j.value("s", 1);
      std::vector<char> seen(g.size(), 0);
      for (const auto& e : j.at("components")) {
        auto a = absorber_from(e);
        auto bad = validate_absorber(g, a, s);
        out.insert(out.end(), bad.begin(), bad.end());
        for (Vertex v : a.a) {
          if (seen[v])
            out.push_back("components share vertex " + std::to_string(v));
          seen[v] = 1;
        }
      }
    } else if (kind == "tiling") {
      TilingState st;
      st.r = k4s_from(j.at("R"));
      for (const auto& e : j.at("T")) {
        auto v = e.get<std::vector<Vertex>>();
        st.t.push_back({v[0], v[1], v[2]});
      }
      for (const auto& e : j.at("M")) {
        auto v = e.get<std::vector<Vertex>>();
        st.m.push_back({v[0], v[1]});
      }
      st.i = j.at("I").get<std::vector<Vertex>>();
      st.rho_num = j.at("rho_num").get<long long>();
      auto bad = validate_state(g, st);
      out.insert(out.end(), bad.begin(), bad.end());
    } else if (kind == "factor") {
      auto f = k4s_from(j.at("tiles"));
      validate_factor(g, f, &out);
    } else if (kind == "oracle") {
      if (j.contains("witness")) {
        auto f = k4s_from(j.at("witness"));
        if (j.at("query") == "factor")
          validate_factor(g, f, &out);
        else
          validate_tiling(g, f, &out);
      }
    } else if (kind == "pipeline") {
      if (j.value("factor_achieved", false)) {
        auto f = k4s_from(j.at("factor"));
        validate_factor(g, f, &out);
      }
    } else if (kind == "robust-certificate") {
      PartitionContext ctx;
      for (const auto& e : j.at("parts"))
        ctx.parts.push_back(e.get<std::vector<Vertex>>());
      RobustCertificate cert;
      cert.index = j.at("index").get<std::vector<int>>();
      cert.members = k4s_from(j.at("members"));
      auto bad = validate_robust_certificate(g, ctx, cert);
      out.insert(out.end(), bad.begin(), bad.end());
      Rat beta = Rat::parse(j.at("beta").get<std::string>());
      long long need = (beta * Rat::of(g.size())).ceil_scaled(1) + 1;
      if ((long long)cert.members.size() < need)
        out.push_back("certificate has fewer than ceil(beta*n)+1 members");
    } else {
      out.push_back("no validator for kind '" + kind + "'");
    }
  } catch (const std::exception& e) {
    out.push_back(std::string("replay failed: ") + e.what());
  }
  return out;
}

}  // namespace hk4
