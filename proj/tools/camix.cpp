#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "camix/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact mixing diagnostics for additive cellular automata over Z_m"};
  app.require_subcommand(1);

  camix::RunConfig cfg;
  std::string out_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: text, json, csv")
        ->default_str("text");
    sub->add_option("--out", out_path, "Write the report to this file instead of stdout");
  };
  auto add_rule = [&](CLI::App* sub) {
    sub->add_option("--rule", cfg.rule_text, "Rule, e.g. \"m=2;range=-2..2;coeffs=1,1,1,1,1\"")
        ->required();
  };
  auto add_index = [&](CLI::App* sub) {
    sub->add_option("--i", cfg.i, "Shift exponent (default 0)");
    sub->add_option("--j", cfg.j, "Iteration exponent (default 1)");
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--A", cfg.a_text, "Event A, e.g. \"@0:[1]\"")->required();
    sub->add_option("--B", cfg.b_text, "Event B")->required();
  };
  auto add_rect = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "Rectangle width (shift direction)")->required();
    sub->add_option("--n", cfg.n, "Rectangle height (iteration direction)")->required();
    sub->add_flag("--parallel", cfg.parallel, "Evaluate lattice points concurrently");
    sub->add_option("--threads", cfg.threads, "Thread count for --parallel (0 = hardware)");
  };

  CLI::App* preimage = app.add_subcommand(
      "preimage", "Blocks and measure of the (i,j) action-preimage of an event");
  add_rule(preimage);
  preimage->add_option("--event", cfg.event_text, "Event, e.g. \"@-2:[1,0,1,0,1]\"")
      ->required();
  add_index(preimage);
  preimage->add_option("--cap", cfg.cap, "Skip block listing beyond this many blocks");
  add_common(preimage);

  CLI::App* meas = app.add_subcommand("measure", "Exact measure of an event");
  add_rule(meas);
  meas->add_option("--event", cfg.event_text, "Event")->required();
  add_common(meas);

  CLI::App* corr =
      app.add_subcommand("correlate", "Exact correlation and deviation at one index");
  add_rule(corr);
  add_pair(corr);
  add_index(corr);
  add_common(corr);

  CLI::App* cesaro =
      app.add_subcommand("cesaro", "Correlation table and aggregates over [0,p)x[0,n)");
  add_rule(cesaro);
  add_pair(cesaro);
  add_rect(cesaro);
  add_common(cesaro);

  CLI::App* weak = app.add_subcommand("weakmix", "Normalized absolute-deviation sum");
  add_rule(weak);
  add_pair(weak);
  add_rect(weak);
  add_common(weak);

  CLI::App* strong =
      app.add_subcommand("strongmix", "Exact deviations along an index sequence");
  add_rule(strong);
  add_pair(strong);
  strong->add_option("--along", cfg.along_text, "Indices as \"i:j,i:j,...\"")->required();
  add_common(strong);

  CLI::App* thr = app.add_subcommand(
      "threshold", "Least shift exponent past which windows separate and deviations vanish");
  add_rule(thr);
  add_pair(thr);
  thr->add_option("--j", cfg.j, "Iteration exponent (default 1)");
  add_common(thr);

  CLI::App* search = app.add_subcommand(
      "search-nonfactor", "Exhaustive nonfactorizing-cylinder search at i = 0");
  add_rule(search);
  search->add_option("--max-len", cfg.max_len, "Largest cylinder length (default 2)");
  search->add_option("--max-j", cfg.max_j, "Largest iteration exponent (default 1)");
  search->add_option("--limit", cfg.limit, "Witness listing cap (default 50)");
  add_common(search);

  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "Cross-check the solver against brute-force enumeration");
  oracle->add_option("--budget", cfg.budget, "Largest word population to enumerate")
      ->envname("CAMIX_ORACLE_BUDGET");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "config error: cannot open \"" << out_path << "\" for writing\n";
      return 2;
    }
    return camix::run(cfg, file, std::cerr);
  }
  return camix::run(cfg, std::cout, std::cerr);
}
