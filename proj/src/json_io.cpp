#include "thin/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "thin/error.hpp"

namespace thin {

namespace {

template <class T> std::vector<T> get_vector(const Json &j, const char *key) {
  if (!j.contains(key))
    throw Error("io.parse", std::string("missing field '") + key + "'");
  return j.at(key).get<std::vector<T>>();
}

/// Wraps nlohmann exceptions into io.parse.
template <class F> auto guarded(F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception &e) {
    throw Error("io.parse", e.what());
  }
}

} // namespace

std::string hash_to_hex(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t hash_from_hex(const std::string &s) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(s, &used, 16);
    if (used != s.size())
      throw Error("io.parse", "bad hash '" + s + "'");
    return v;
  } catch (const std::logic_error &) {
    throw Error("io.parse", "bad hash '" + s + "'");
  }
}

Json to_json(const Graph &g) {
  Json j;
  j["n"] = g.num_vertices();
  Json edges = Json::array();
  for (auto [u, v] : g.edges())
    edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json &j) {
  return guarded([&] {
    std::vector<Edge> edges;
    for (const auto &e : j.at("edges"))
      edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return Graph(j.at("n").get<std::size_t>(), edges);
  });
}

Json to_json(const TreeDecomposition &td) {
  Json j;
  j["bags"] = td.bags;
  j["parent"] = td.parent;
  if (td.vertex_depth_bound)
    j["depth_bound"] = *td.vertex_depth_bound;
  return j;
}

TreeDecomposition td_from_json(const Json &j) {
  return guarded([&] {
    TreeDecomposition td;
    td.bags = j.at("bags").get<std::vector<std::vector<Vertex>>>();
    td.parent = j.at("parent").get<std::vector<int>>();
    if (j.contains("depth_bound"))
      td.vertex_depth_bound = j.at("depth_bound").get<int>();
    if (td.bags.size() != td.parent.size())
      throw Error("io.parse", "bags and parent differ in length");
    return td;
  });
}

Json to_json(const Overlay &o) {
  Json j;
  j["kind"] = to_string(o.kind);
  j["r"] = o.r;
  j["host_hash"] = hash_to_hex(o.host_hash);
  j["host_n"] = o.host_n;
  j["h"] = to_json(o.h);
  j["f"] = o.f;
  j["level"] = o.level;
  j["td"] = to_json(o.td);
  return j;
}

Overlay overlay_from_json(const Json &j) {
  return guarded([&] {
    Overlay o;
    o.kind = parse_kind(j.at("kind").get<std::string>());
    o.r = j.at("r").get<int>();
    o.host_hash = hash_from_hex(j.at("host_hash").get<std::string>());
    o.host_n = j.at("host_n").get<std::size_t>();
    o.h = graph_from_json(j.at("h"));
    o.f = get_vector<Vertex>(j, "f");
    o.level = get_vector<int>(j, "level");
    o.td = td_from_json(j.at("td"));
    return o;
  });
}

Json to_json(const OverlaySystem &s) {
  Json j;
  j["kind"] = to_string(s.kind);
  j["r"] = s.r;
  j["host_hash"] = hash_to_hex(s.host_hash);
  j["host_n"] = s.host_n;
  j["declared_tw"] = s.declared_tw;
  j["declared_thickness"] = to_string(s.declared_thickness);
  j["notes"] = s.notes;
  Json members = Json::array();
  for (const auto &m : s.members)
    members.push_back(to_json(m));
  j["members"] = std::move(members);
  return j;
}

OverlaySystem system_from_json(const Json &j) {
  return guarded([&] {
    OverlaySystem s;
    s.kind = parse_kind(j.at("kind").get<std::string>());
    s.r = j.at("r").get<int>();
    s.host_hash = hash_from_hex(j.at("host_hash").get<std::string>());
    s.host_n = j.at("host_n").get<std::size_t>();
    s.declared_tw = j.at("declared_tw").get<int>();
    s.declared_thickness = parse_rational(j.at("declared_thickness").get<std::string>());
    if (j.contains("notes"))
      s.notes = j.at("notes").get<std::vector<std::string>>();
    for (const auto &m : j.at("members"))
      s.members.push_back(overlay_from_json(m));
    return s;
  });
}

Json to_json(const OverlayCheck &c) {
  Json j;
  j["ok"] = c.ok;
  if (!c.ok) {
    j["clause"] = c.clause;
    j["witness"] = c.witness;
    j["message"] = c.message;
  }
  return j;
}

Json to_json(const SystemCheck &c) {
  Json j;
  j["ok"] = c.ok;
  if (!c.ok) {
    j["member"] = c.member;
    j["message"] = c.message;
    if (!c.overlay.ok)
      j["overlay"] = to_json(c.overlay);
  }
  return j;
}

Json to_json(const PtasReport &r, bool timing) {
  Json j;
  j["problem"] = r.problem;
  j["r"] = r.r;
  j["k"] = r.k;
  j["s"] = r.s;
  j["epsilon"] = to_string(r.epsilon);
  j["guarantee"] = to_string(r.guarantee);
  j["value"] = r.value;
  j["solution"] = r.solution;
  j["feasible"] = r.feasible;
  j["chosen_overlay"] = r.chosen_overlay;
  j["per_overlay"] = r.per_overlay;
  j["system"] = {{"size", r.system_size}, {"max_thickness", to_string(r.max_thickness)}, {"tw_bound", r.tw_bound}};
  if (timing)
    j["wall_ms"] = r.wall_ms;
  return j;
}

Json solve_to_json(const SolveRequest &req, const SolveResult &res) {
  Json j;
  j["problem"] = to_string(req.problem);
  if (req.problem != Problem::NeighborhoodHitting)
    j["r"] = req.r;
  j["set"] = req.set;
  j["value"] = res.value;
  j["solution"] = res.solution;
  j["method"] = res.method;
  return j;
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("io.open", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw Error("io.parse", path + ": " + e.what());
  }
}

void write_text_file(const std::string &path, const std::string &text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out)
      throw Error("io.open", "cannot write " + tmp);
    out << text;
    if (!out)
      throw Error("io.open", "write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("io.open", "cannot rename " + tmp + " to " + path);
}

} // namespace thin
