#include "thin/pipeline.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "thin/error.hpp"
#include "thin/io.hpp"
#include "thin/ptas.hpp"
#include "thin/schedule.hpp"

namespace thin {

namespace {

[[noreturn]] void bad_config(const std::string &m) { throw Error("cli.bad_config", m); }

std::vector<Vertex> vertex_list(const Json &cfg, const char *key) {
  if (!cfg.contains(key))
    bad_config(std::string("builder needs '") + key + "'");
  try {
    return cfg.at(key).get<std::vector<Vertex>>();
  } catch (const nlohmann::json::exception &e) {
    bad_config(std::string("'") + key + "': " + e.what());
  }
}

Layering default_layering(const Graph &g) {
  if (g.num_vertices() == 0)
    return Layering{};
  std::vector<Vertex> roots{0};
  return bfs_layering(g, roots);
}

OverlaySystem build_with(const Host &host, const Json &cfg, int r, int k, const std::optional<Layering> &layering) {
  const std::string type = cfg.value("builder", std::string("trivial"));
  r = cfg.value("r", r);
  auto base_or = [&](SystemBuilder fallback) {
    return cfg.contains("base") ? builder_from_config(cfg.at("base"), r) : fallback;
  };
  if (type == "trivial")
    return trivial_system(host, r);
  if (type == "star") {
    Host h = host.starred();
    return sgbas_to_star(base_or(trivial_builder(r))(h, k), h);
  }
  if (type == "layering") {
    Layering l = layering ? *layering : default_layering(host.base);
    return layering_lift(host, l, r, k, base_or(trivial_builder(r)));
  }
  if (type == "shadow") {
    Layering l = layering ? *layering : coarsen_to_shadow_complete(host.base, default_layering(host.base));
    return shadow_lift(host, l, r, k, base_or(star_trivial_builder(r)));
  }
  if (type == "rooted")
    return rooted_system(host, vertex_list(cfg, "apex"), k, base_or(trivial_builder(r)));
  if (type == "apex") {
    auto apex = vertex_list(cfg, "apex");
    auto sub = remove_vertices(host.base, apex);
    Host sh = sub_host_like(host, sub.graph);
    auto sys = base_or(trivial_builder(r))(sh, k);
    if (sys.kind == OverlayKind::S)
      sys = as_kind_a(std::move(sys));
    return apex_lift(host, apex, sys);
  }
  if (type == "starsum") {
    const Host h = host.starred();
    StarSum sum;
    sum.center = vertex_list(cfg, "center");
    if (!cfg.contains("rays"))
      bad_config("starsum needs 'rays'");
    sum.rays = cfg.at("rays").get<std::vector<std::vector<Vertex>>>();
    check_star_sum(h.base, sum);
    auto base = base_or(star_trivial_builder(r));
    auto center_sub = induced_subgraph(h.base, sum.center);
    auto center = base(sub_host_like(h, center_sub.graph), 3 * k);
    std::vector<char> in_center(h.base.num_vertices(), 0);
    for (Vertex v : sum.center)
      in_center[static_cast<std::size_t>(v)] = 1;
    std::vector<OverlaySystem> rays;
    for (const auto &ray : sum.rays) {
      auto ray_sub = induced_subgraph(h.base, ray);
      std::vector<Vertex> attach;
      for (std::size_t i = 0; i < ray_sub.to_parent.size(); ++i)
        if (in_center[static_cast<std::size_t>(ray_sub.to_parent[i])])
          attach.push_back(static_cast<Vertex>(i));
      rays.push_back(rooted_system(sub_host_like(h, ray_sub.graph), attach, 9 * k, base));
    }
    bool equal = true;
    for (const auto &s : rays)
      equal = equal && s.size() == rays.front().size();
    if (!equal)
      rays = replicate_equal_size(rays, 3 * k);
    return star_sum_lift(h, sum, center, rays);
  }
  if (type == "separator") {
    ScheduleParams p;
    p.alpha = parse_rational(cfg.value("alpha", std::string("1")));
    p.delta = parse_rational(cfg.value("delta", std::string("1/2")));
    p.c = cfg.value("c", 2);
    p.r = r;
    p.k = k;
    p.t = BigInt(cfg.value("t", std::string("64")));
    p.strict = cfg.value("strict", false);
    return separator_system(host, p, cfg.value("level", 2));
  }
  bad_config("unknown builder '" + type + "'");
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("io.open", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const PipelineConfig &cfg) {
  if (!cfg.input.empty()) {
    if (cfg.input.size() > 5 && cfg.input.ends_with(".json"))
      return graph_from_json(read_json_file(cfg.input));
    return read_gr_file(cfg.input);
  }
  if (!cfg.gen.family.empty())
    return generate_graph(cfg.gen);
  throw Error("cli.usage", "an input graph (--input) or a generator (--family) is required");
}

std::optional<Layering> load_layering(const PipelineConfig &cfg) {
  if (cfg.layering_path.empty())
    return std::nullopt;
  std::istringstream in(read_file(cfg.layering_path));
  return read_layering(in);
}

std::vector<Vertex> zero_based(const std::vector<int> &ids, std::size_t n) {
  std::vector<Vertex> out;
  for (int v : ids) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw Error("cli.usage", "vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    out.push_back(v - 1);
  }
  return out;
}

SolveMethod parse_method(const std::string &m) {
  if (m == "auto")
    return SolveMethod::Auto;
  if (m == "dp")
    return SolveMethod::Dp;
  if (m == "brute")
    return SolveMethod::BruteForce;
  throw Error("cli.usage", "unknown method '" + m + "'");
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

PipelineResult finish(const PipelineConfig &cfg, std::string text, int code = 0) {
  if (!cfg.output.empty()) {
    write_text_file(cfg.output, text);
    return {code, ""};
  }
  return {code, std::move(text)};
}

} // namespace

SystemBuilder builder_from_config(const Json &cfg, int r) {
  if (!cfg.is_object())
    bad_config("builder configuration must be an object");
  return [cfg, r](const Host &host, int k) { return build_with(host, cfg, r, k, std::nullopt); };
}

OverlaySystem build_system(const Host &host, const Json &cfg, int r, int k, const std::optional<Layering> &layering) {
  if (!cfg.is_object())
    bad_config("builder configuration must be an object");
  return build_with(host, cfg, r, k, layering);
}

Json resolved_builder_config(const PipelineConfig &cfg) {
  if (!cfg.config_path.empty())
    return read_json_file(cfg.config_path);
  Json j;
  j["builder"] = cfg.builder.empty() ? "layering" : cfg.builder;
  if (!cfg.apex.empty()) {
    std::vector<int> a;
    for (int v : cfg.apex)
      a.push_back(v - 1);
    j["apex"] = a;
  }
  if (j["builder"] == "separator") {
    j["alpha"] = cfg.alpha;
    j["delta"] = cfg.delta;
    j["c"] = cfg.c;
    j["t"] = cfg.t;
    j["level"] = cfg.level;
    j["strict"] = cfg.strict;
  }
  return j;
}

Json config_to_json(const PipelineConfig &cfg) {
  Json j;
  j["command"] = cfg.command;
  j["input"] = cfg.input;
  if (!cfg.gen.family.empty())
    j["generator"] = {{"family", cfg.gen.family}, {"n", cfg.gen.n}, {"a", cfg.gen.a}, {"b", cfg.gen.b}};
  j["r"] = cfg.r;
  j["k"] = cfg.k;
  j["s"] = cfg.s;
  j["seed"] = cfg.seed;
  if (!cfg.problem.empty())
    j["problem"] = cfg.problem;
  if (!cfg.system_path.empty())
    j["system"] = cfg.system_path;
  if (!cfg.layering_path.empty())
    j["layering"] = cfg.layering_path;
  j["method"] = cfg.method;
  return j;
}

int exit_code_for(const std::string &code) {
  if (code == "ptas.certificate" || code == "solver.self_check")
    return 2;
  if (code == "solver.infeasible")
    return 3;
  return 1;
}

PipelineResult run_pipeline(const PipelineConfig &cfg_in) {
  PipelineConfig cfg = cfg_in;
  cfg.gen.seed = cfg.seed;
  if (cfg.r < 1 || cfg.k < 1 || cfg.s < 1)
    throw Error("cli.usage", "r, k and s must be positive");
  const std::string &cmd = cfg.command;

  if (cmd == "gen") {
    Graph g = generate_graph(cfg.gen);
    if (cfg.format == "json")
      return finish(cfg, dump(to_json(g)));
    if (cfg.format != "gr")
      throw Error("cli.usage", "format must be gr or json");
    std::ostringstream out;
    write_gr(out, g);
    return finish(cfg, out.str());
  }

  Graph g = load_graph(cfg);
  if (cmd == "layer") {
    auto roots = zero_based({cfg.root}, g.num_vertices());
    Layering l = bfs_layering(g, roots);
    if (cfg.shadow)
      l = coarsen_to_shadow_complete(g, l);
    std::ostringstream out;
    write_layering(out, l);
    return finish(cfg, out.str());
  }
  if (cmd == "build") {
    Json bc = resolved_builder_config(cfg);
    auto sys = build_system(Host::plain(g), bc, cfg.r, cfg.k, load_layering(cfg));
    Json j = to_json(sys);
    j["config"] = config_to_json(cfg);
    j["config"]["builder"] = bc;
    return finish(cfg, dump(j));
  }
  if (cmd == "verify") {
    Json report;
    report["config"] = config_to_json(cfg);
    bool ok = true;
    if (!cfg.overlay_path.empty()) {
      Overlay o = overlay_from_json(read_json_file(cfg.overlay_path));
      Host host = o.kind == OverlayKind::Star ? Host::with_star(g) : Host::plain(g);
      auto check = verify_overlay(o, host);
      ok = check.ok;
      report["overlay"] = to_json(check);
    } else if (!cfg.system_path.empty()) {
      OverlaySystem s = system_from_json(read_json_file(cfg.system_path));
      Host host = s.kind == OverlayKind::Star ? Host::with_star(g) : Host::plain(g);
      auto check = validate_system(s, host);
      ok = check.ok;
      report["system"] = to_json(check);
      if (ok) {
        report["size"] = s.size();
        report["max_thickness"] = to_string(system_thickness(s).max);
        report["max_width"] = max_member_width(s);
      }
    } else {
      throw Error("cli.usage", "verify needs --overlay or --system");
    }
    report["ok"] = ok;
    return finish(cfg, dump(report), ok ? 0 : 2);
  }
  if (cmd == "solve") {
    SolveRequest req;
    req.h = g;
    req.problem = parse_problem(cfg.problem.empty() ? "r_dominating" : cfg.problem);
    req.r = cfg.r;
    if (!cfg.td_path.empty()) {
      std::istringstream in(read_file(cfg.td_path));
      req.td = read_td(in);
    }
    if (cfg.set.empty())
      for (std::size_t v = 0; v < g.num_vertices(); ++v)
        req.set.push_back(static_cast<Vertex>(v));
    else
      req.set = zero_based(cfg.set, g.num_vertices());
    auto res = solve(req, parse_method(cfg.method));
    Json j = solve_to_json(req, res);
    j["config"] = config_to_json(cfg);
    return finish(cfg, dump(j));
  }
  if (cmd == "ptas") {
    std::string problem = cfg.problem.empty() ? "rdom" : cfg.problem;
    int r = cfg.r;
    if (problem == "mis")
      r = 2;
    Host host = problem == "cliquecover" ? Host::with_star(g) : Host::plain(g);
    OverlaySystem sys;
    Json bc;
    if (!cfg.system_path.empty()) {
      sys = system_from_json(read_json_file(cfg.system_path));
    } else {
      bc = resolved_builder_config(cfg);
      if (problem == "cliquecover" && cfg.config_path.empty() && cfg.builder.empty())
        bc = Json{{"builder", "layering"}, {"base", {{"builder", "star"}}}};
      sys = build_system(host, bc, problem == "cliquecover" ? 1 : r, cfg.k, load_layering(cfg));
    }
    const SolveMethod method = parse_method(cfg.method);
    PtasReport rep;
    if (problem == "mis" || problem == "dist-is")
      rep = ptas_max_distance_independent(host, sys, r, cfg.k, method);
    else if (problem == "rdom")
      rep = ptas_min_r_dominating(host, sys, r, cfg.k, method);
    else if (problem == "cliquecover")
      rep = ptas_s_clique_cover(host, sys, cfg.s, cfg.k, method);
    else
      throw Error("cli.usage", "unknown ptas problem '" + problem + "'");
    Json j = to_json(rep, cfg.timing);
    j["config"] = config_to_json(cfg);
    if (!bc.is_null())
      j["config"]["builder"] = bc;
    return finish(cfg, dump(j));
  }
  throw Error("cli.usage", "unknown command '" + cmd + "'");
}

} // namespace thin
