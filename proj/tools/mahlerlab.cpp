#include <iostream>

#include <CLI11.hpp>

#include "mahlerlab/verify.hpp"

using namespace mahlerlab;

int main(int argc, char** argv) {
  CLI::App app{"mahlerlab: numerical and exact checks of Mahler measure identities"};
  std::string scenario, config, format;
  std::optional<int> precision, nodes;
  std::optional<long> qmax, coeff_bound;
  std::optional<std::string> cache, out;
  app.add_option("scenario", scenario, "verify13, verify16, verify18, verify25 or all")->required();
  app.add_option("--config", config, "key = value file; flags override it");
  app.add_option("--precision", precision, "working digits (at most 32)");
  app.add_option("--qmax", qmax, "q-expansion order for minimal polynomial checks");
  app.add_option("--nodes", nodes, "starting Gauss-Legendre order");
  app.add_option("--coeff-bound", coeff_bound, "Hecke eigenvalue bound, 0 for automatic");
  app.add_option("--cache", cache, "eigenvalue cache directory");
  app.add_option("--out", out, "report path, - for stdout");
  app.add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
  CLI11_PARSE(app, argc, argv);

  try {
    ScenarioConfig cfg;
    if (!config.empty()) {
      cfg = load_config_file(config, cfg);
    }
    cfg.scenario = scenario;
    if (precision) cfg.digits = *precision;
    if (qmax) cfg.qmax = *qmax;
    if (nodes) cfg.nodes = *nodes;
    if (coeff_bound) cfg.coeff_bound = *coeff_bound;
    if (cache) cfg.cache_dir = *cache;
    if (out) cfg.out = *out;
    if (!format.empty()) apply_config_key(cfg, "format", format);
    cfg.validate();
    Report r = run_scenario(cfg);
    write_report(r, cfg.out, cfg.format, clamp_digits(cfg.digits));
    size_t bad = 0;
    for (const auto& c : r.checks)
      if (c.status != CheckStatus::Pass) ++bad;
    std::cerr << r.checks.size() - bad << "/" << r.checks.size() << " checks pass\n";
    return r.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "mahlerlab: " << e.what() << "\n";
    return 2;
  }
}
