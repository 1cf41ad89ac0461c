#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tb/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"twisted conjugacy, character tables and Burnside-type checks on finite groups"};
  app.require_subcommand(1);

  tb::cli::RunConfig cfg;
  if (const char* cap = std::getenv("TB_ORDER_CAP")) {
    try {
      std::size_t used = 0;
      cfg.order_cap = std::stoull(cap, &used);
      if (used != std::string(cap).size()) throw std::invalid_argument(cap);
    } catch (const std::exception&) {
      std::cerr << "error: TB_ORDER_CAP must be an unsigned integer\n";
      return 2;
    }
  }

  struct Sub {
    const char* name;
    const char* desc;
    bool group_required;
    bool endo;
    bool endo_required;
    bool functional;
  };
  const std::vector<Sub> subs = {
      {"classes", "twisted conjugacy classes and R(phi)", true, true, true, false},
      {"chartable", "character table: exact mod-p core with a complex lift", true, false, false,
       false},
      {"dual-fixed", "fixed points of the induced map on the dual, S(phi)", true, true, true,
       false},
      {"burnside", "compare R(phi) against S(phi)", true, true, true, false},
      {"glimm", "block decomposition, twisted commutators, GFP blocks, S_*", true, true, true,
       false},
      {"measure", "functional and measure diagnostics over the block spectrum", true, true, true,
       true},
      {"abelian", "R(phi) and its power sequence for a f.g. abelian presentation", true, false,
       false, false},
      {"congruence", "Moebius congruence checks over the R-sequence", true, true, false, false},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.desc);
    auto* g = sub->add_option("--group", cfg.group_path, "group input file");
    if (s.group_required) g->required();
    if (s.endo) {
      auto* e = sub->add_option("--endo", cfg.endo_path, "endomorphism input file");
      if (s.endo_required) e->required();
    }
    if (s.functional)
      sub->add_option("--functional", cfg.functional_path,
                      "functional weights file (default: seeded random)");
    sub->add_option("--tol", cfg.tol, "numeric tolerance")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for all randomized steps")->capture_default_str();
    sub->add_option("--n", cfg.n, "congruence depth / sequence length")->capture_default_str();
    sub->add_flag("--json", cfg.json, "machine-readable JSON output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return tb::cli::run(cfg, std::cout);
}
