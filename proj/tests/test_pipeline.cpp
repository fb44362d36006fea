#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "thin/builders.hpp"
#include "thin/error.hpp"
#include "thin/generators.hpp"
#include "thin/io.hpp"
#include "thin/json_io.hpp"
#include "thin/pipeline.hpp"

using namespace thin;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("thin_pipeline_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path_of(const std::string &name) { return (scratch() / name).string(); }

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Runs the CLI; returns its exit status.
int cli(const std::string &args) {
  const std::string cmd = std::string(THIN_CLI_PATH) + " " + args + " > " + path_of("stdout.txt") + " 2> " +
                          path_of("stderr.txt");
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

PipelineConfig config(std::string command) {
  PipelineConfig c;
  c.command = std::move(command);
  return c;
}

} // namespace

TEST_CASE("smoke run from generator to report", "[pipeline]") {
  auto gr = path_of("p5.gr");
  REQUIRE(cli("gen --family path --n 5 -o " + gr) == 0);
  CHECK(read_gr_file(gr) == path_graph(5));

  auto lay = path_of("p5.layers");
  REQUIRE(cli("layer -i " + gr + " --root 1 -o " + lay) == 0);
  std::ifstream lin(lay);
  CHECK(read_layering(lin).depth() == 5);

  auto sys = path_of("p5.system.json");
  REQUIRE(cli("build -i " + gr + " --builder layering --layering " + lay + " --r 1 --k 1 -o " + sys) == 0);
  auto sj = read_json_file(sys);
  CHECK(sj.contains("config"));
  CHECK(sj["config"]["seed"] == 0);

  REQUIRE(cli("verify -i " + gr + " --system " + sys) == 0);
  CHECK(read_json_file(path_of("stdout.txt"))["ok"] == true);

  REQUIRE(cli("ptas -i " + gr + " --problem rdom --system " + sys + " --r 1 --k 1") == 0);
  auto rep = read_json_file(path_of("stdout.txt"));
  CHECK(rep["guarantee"] == "2");
  CHECK(rep["feasible"] == true);
  CHECK(rep["value"] == 2);
  CHECK(rep.contains("config"));
  CHECK_FALSE(rep.contains("wall_ms"));

  REQUIRE(cli("ptas -i " + gr + " --problem rdom --timing") == 0);
  CHECK(read_json_file(path_of("stdout.txt")).contains("wall_ms"));
}

TEST_CASE("verify names the violated clause of a corrupted overlay", "[pipeline]") {
  auto host = Host::plain(path_graph(3));
  auto o = trivial_overlay(host, 2);
  o.level[1] = 0;  // vertex 0 (level 2) now lacks a level >= 1 neighbour over 1
  auto gr = path_of("p3.gr");
  write_gr_file(gr, host.base);
  auto ov = path_of("corrupt.json");
  write_text_file(ov, to_json(o).dump(2));

  CHECK(cli("verify -i " + gr + " --overlay " + ov) == 2);
  auto rep = read_json_file(path_of("stdout.txt"));
  CHECK(rep["ok"] == false);
  CHECK(rep["overlay"]["clause"] == "walk_preserving");
  CHECK(rep["overlay"]["witness"] == Json::array({0, 1}));
}

TEST_CASE("single vertex report", "[pipeline]") {
  auto c = config("ptas");
  c.gen.family = "path";
  c.gen.n = 1;
  c.problem = "mis";
  auto res = run_pipeline(c);
  CHECK(res.exit_code == 0);
  auto j = Json::parse(res.text);
  CHECK(j["value"] == 1);
  CHECK(j["solution"] == Json::array({0}));
  CHECK(j["r"] == 2);
}

TEST_CASE("exit codes", "[pipeline]") {
  CHECK(cli("gen --family nosuch --n 3") == 1);
  CHECK(cli("frobnicate") == 1);
  CHECK(cli("ptas --family path --n 4 --k 0") == 1);

  // Isolated target: infeasible.
  auto gr = path_of("two.gr");
  write_gr_file(gr, Graph(2));
  CHECK(cli("solve -i " + gr + " --problem neighborhood_hitting --set 1") == 3);
  CHECK(slurp(path_of("stderr.txt")).find("solver.infeasible") != std::string::npos);

  CHECK(exit_code_for("ptas.certificate") == 2);
  CHECK(exit_code_for("solver.self_check") == 2);
  CHECK(exit_code_for("graph.self_loop") == 1);
}

TEST_CASE("builder configurations", "[pipeline]") {
  auto g = grid_graph(3, 6);
  auto host = Host::plain(g);
  for (const auto &cfg : {Json{{"builder", "trivial"}}, Json{{"builder", "layering"}},
                          Json{{"builder", "rooted"}, {"apex", {0}}},
                          Json{{"builder", "apex"}, {"apex", {0, 1}}, {"base", {{"builder", "layering"}}}},
                          Json{{"builder", "separator"}, {"level", 1}, {"t", "64"}}}) {
    INFO(cfg.dump());
    auto s = build_system(host, cfg, 1, 1, std::nullopt);
    auto c = validate_system(s, s.kind == OverlayKind::Star ? host.starred() : host);
    CHECK(c.ok);
  }
  auto star = build_system(host, Json{{"builder", "shadow"}}, 1, 1, std::nullopt);
  CHECK(star.kind == OverlayKind::Star);
  CHECK(validate_system(star, host.starred()).ok);
  CHECK_THROWS_AS(build_system(host, Json{{"builder", "bogus"}}, 1, 1, std::nullopt), Error);

  // Removing the only vertex leaves an empty graph for the layering base.
  auto k1 = Host::plain(path_graph(1));
  auto lone = build_system(k1, Json{{"builder", "apex"}, {"apex", {0}}, {"base", {{"builder", "layering"}}}}, 1, 1,
                           std::nullopt);
  CHECK(validate_system(lone, k1).ok);
}

TEST_CASE("json round trips", "[pipeline]") {
  auto host = Host::plain(cycle_graph(14));
  std::vector<Vertex> root{0};
  auto sys = layering_lift(host, bfs_layering(host.base, root), 1, 1, trivial_builder(1));
  auto back = system_from_json(Json::parse(to_json(sys).dump()));
  CHECK(back.members == sys.members);
  CHECK(back.declared_thickness == sys.declared_thickness);
  CHECK(back.host_hash == host.hash());
  CHECK(to_json(back).dump() == to_json(sys).dump());

  CHECK(graph_from_json(to_json(host.base)) == host.base);
  CHECK(hash_from_hex(hash_to_hex(0x0123456789abcdefULL)) == 0x0123456789abcdefULL);
  CHECK(hash_to_hex(1) == "0x0000000000000001");
  CHECK_THROWS_AS(overlay_from_json(Json::parse("{\"kind\": \"A\"}")), Error);
}

TEST_CASE("gen is deterministic under a seed", "[pipeline]") {
  auto c = config("gen");
  c.gen.family = "random_tree";
  c.gen.n = 30;
  c.seed = 17;
  auto a = run_pipeline(c).text;
  CHECK(run_pipeline(c).text == a);
  c.seed = 18;
  CHECK(run_pipeline(c).text != a);
}
