#include <iostream>

#include <CLI11.hpp>

#include "thin/error.hpp"
#include "thin/pipeline.hpp"

int main(int argc, char **argv) {
  thin::PipelineConfig cfg;
  CLI::App app{"Thin systems of overlays: build, verify, solve and approximate."};
  app.require_subcommand(1);

  auto common = [&cfg](CLI::App *sub) {
    sub->add_option("-i,--input", cfg.input, "Input graph (.gr, or .json)");
    sub->add_option("-o,--output", cfg.output, "Output path (default stdout)");
    sub->add_option("--family", cfg.gen.family, "Generator family when no input is given");
    sub->add_option("--n", cfg.gen.n, "Generator size");
    sub->add_option("--a", cfg.gen.a, "Grid rows");
    sub->add_option("--b", cfg.gen.b, "Grid columns");
    sub->add_option("--seed", cfg.seed, "Seed for all randomness");
    sub->add_option("--r", cfg.r, "Radius");
    sub->add_option("--k", cfg.k, "Accuracy parameter (thickness 1+1/k)");
  };
  auto building = [&cfg](CLI::App *sub) {
    sub->add_option("--builder", cfg.builder,
                    "trivial|star|layering|shadow|apex|rooted|starsum|separator");
    sub->add_option("--config", cfg.config_path, "Builder configuration JSON");
    sub->add_option("--layering", cfg.layering_path, "Layering file for the top-level builder");
    sub->add_option("--apex", cfg.apex, "Apex vertices (1-based)");
    sub->add_option("--alpha", cfg.alpha, "Schedule alpha");
    sub->add_option("--delta", cfg.delta, "Separator exponent");
    sub->add_option("--c", cfg.c, "Schedule base c");
    sub->add_option("--t", cfg.t, "Base-case size t");
    sub->add_option("--level", cfg.level, "Schedule level");
    sub->add_flag("--strict", cfg.strict, "Enforce n_i bounds");
  };

  auto *gen = app.add_subcommand("gen", "Generate a graph");
  common(gen);
  gen->add_option("--format", cfg.format, "gr or json")->check(CLI::IsMember({"gr", "json"}));

  auto *layer = app.add_subcommand("layer", "BFS layering");
  common(layer);
  layer->add_option("--root", cfg.root, "BFS root (1-based)");
  layer->add_flag("--shadow", cfg.shadow, "Coarsen to a shadow-complete layering");

  auto *build = app.add_subcommand("build", "Build a system of overlays");
  common(build);
  building(build);

  auto *verify = app.add_subcommand("verify", "Verify an overlay or a system");
  common(verify);
  verify->add_option("--system", cfg.system_path, "System JSON");
  verify->add_option("--overlay", cfg.overlay_path, "Overlay JSON");

  auto *solve = app.add_subcommand("solve", "Exact solver");
  common(solve);
  solve->add_option("--problem", cfg.problem, "distance_independent|r_dominating|neighborhood_hitting");
  solve->add_option("--set", cfg.set, "Selectable or target vertices (1-based, default all)");
  solve->add_option("--td", cfg.td_path, "Tree decomposition (.td)");
  solve->add_option("--method", cfg.method, "auto|dp|brute");

  auto *ptas = app.add_subcommand("ptas", "Approximation scheme over a system");
  common(ptas);
  building(ptas);
  ptas->add_option("--problem", cfg.problem, "mis|dist-is|rdom|cliquecover");
  ptas->add_option("--s", cfg.s, "Clique size for cliquecover");
  ptas->add_option("--system", cfg.system_path, "Prebuilt system JSON");
  ptas->add_option("--method", cfg.method, "auto|dp|brute");
  ptas->add_flag("--timing", cfg.timing, "Include wall time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    auto res = thin::run_pipeline(cfg);
    std::cout << res.text;
    return res.exit_code;
  } catch (const thin::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return thin::exit_code_for(e.code());
  }
}
