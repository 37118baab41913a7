#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace cli = subclose::cli;

namespace {

struct RawArgs {
  std::string r;
  std::string alpha;
  std::string out;
  bool full = false;
};

void add_budget_options(CLI::App* sub, cli::RunConfig& cfg) {
  sub->add_option("--budget-families", cfg.budget_families, "Max candidate families examined");
  sub->add_option("--budget-subspaces", cfg.budget_subspaces, "Max subspaces enumerated");
}

void add_format_options(CLI::App* sub, cli::RunConfig& cfg, RawArgs& raw) {
  static const std::map<std::string, cli::Format> formats{
      {"table", cli::Format::Table}, {"json", cli::Format::Json}, {"csv", cli::Format::Csv}};
  sub->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--out", raw.out, "Write output to FILE instead of stdout");
  sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subclose families, optimal graphs and Grassmann code weight checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("subclose 1.0.0"));

  cli::RunConfig cfg;
  RawArgs raw;

  auto* kr = app.add_subcommand("kr-table", "Table of K_r(ell,m)");
  kr->add_option("--ell", cfg.ell, "Subset size")->default_val(2);
  kr->add_option("--m", cfg.m, "Ground set size")->required();
  kr->add_option("--r,--r-range", raw.r, "r or lo..hi");
  static const std::map<std::string, cli::KrMode> modes{
      {"closed", cli::KrMode::Closed}, {"oracle", cli::KrMode::Oracle}, {"both", cli::KrMode::Both}};
  kr->add_option("--mode", cfg.mode, "closed, oracle or both")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  add_budget_options(kr, cfg);
  add_format_options(kr, cfg, raw);

  auto* opt = app.add_subcommand("optimal", "(m,r)-optimal graphs with bounds");
  opt->add_option("--m", cfg.m, "Vertex count")->required();
  opt->add_option("--r,--r-range", raw.r, "Edge count or lo..hi");
  add_budget_options(opt, cfg);
  add_format_options(opt, cfg, raw);

  auto* ver = app.add_subcommand("verify", "Compare d_r with the subclose-section formula");
  ver->add_option("--ell", cfg.ell, "Subspace dimension")->default_val(2);
  ver->add_option("--m", cfg.m, "Ambient dimension")->required();
  ver->add_option("--q", cfg.q, "Field order")->default_val(2);
  ver->add_option("--alpha", raw.alpha, "Schubert index, e.g. 3,4");
  ver->add_option("--r,--r-range", raw.r, "r or lo..hi");
  add_budget_options(ver, cfg);
  add_format_options(ver, cfg, raw);

  auto* code = app.add_subcommand("code", "Export a generator matrix");
  code->add_option("--ell", cfg.ell, "Subspace dimension")->default_val(2);
  code->add_option("--m", cfg.m, "Ambient dimension")->required();
  code->add_option("--q", cfg.q, "Field order")->default_val(2);
  code->add_option("--alpha", raw.alpha, "Schubert index, e.g. 3,4");
  add_format_options(code, cfg, raw);

  auto* self = app.add_subcommand("selftest", "Identity suites");
  auto* fast_flag = self->add_flag("--fast", "Fast suites (default)");
  self->add_flag("--full", raw.full, "Full suites")->excludes(fast_flag);
  static const std::map<std::string, cli::Fault> faults{
      {"none", cli::Fault::None}, {"field", cli::Fault::Field}, {"kr-table", cli::Fault::KrTable}};
  self->add_option("--inject", cfg.inject, "Corrupt one input on purpose")
      ->transform(CLI::CheckedTransformer(faults, CLI::ignore_case));
  add_format_options(self, cfg, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.level = raw.full ? cli::Level::Full : cli::Level::Fast;
  try {
    if (!raw.r.empty()) cfg.r = cli::parse_r_range(raw.r);
    if (!raw.alpha.empty()) cfg.alpha = cli::parse_alpha(raw.alpha);
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return cli::kUsage;
  }

  if (raw.out.empty()) return cli::dispatch(cfg, std::cout, std::cerr);
  std::ofstream file(raw.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << raw.out << '\n';
    return cli::kUsage;
  }
  return cli::dispatch(cfg, file, std::cerr);
}
