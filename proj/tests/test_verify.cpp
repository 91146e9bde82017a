#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "mahlerlab/verify.hpp"

using namespace mahlerlab;

namespace {

std::string temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("mahlerlab_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p.string();
}

// checks without meta, for comparing runs
std::string checks_only(const Report& r) {
  Report c;
  c.checks = r.checks;
  return emit_report(c, ReportFormat::Json);
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("empty report passes") {
    Report r;
    CHECK(r.passed());
    auto doc = emit_report(r, ReportFormat::Json);
    CHECK(doc.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(doc.find("\"checks\": []") != std::string::npos);
    CHECK(parse_report_json(doc).checks.empty());
  }

  TEST_CASE("json round trip") {
    Report r;
    r.meta["scenario"] = "x";
    r.close("a", "close values", Complex(Real("1.0675892732"), Real("-2.6009418876")), Complex(1.06759, -2.60094),
            1e-4, "tail 1e-40");
    r.exact("b", "exact", false, Complex(6, 0), Complex(0, 0));
    r.unresolved("c", "later", "needs b");
    CHECK_FALSE(r.passed());
    auto doc = emit_report(r, ReportFormat::Json);
    Report back = parse_report_json(doc);
    CHECK(emit_report(back, ReportFormat::Json) == doc);
    REQUIRE(back.checks.size() == 3);
    CHECK(back.checks[0].status == CheckStatus::Pass);
    CHECK(back.checks[1].status == CheckStatus::Fail);
    CHECK(back.checks[2].status == CheckStatus::Unresolved);
    CHECK(back.checks[0].detail == "tail 1e-40");
    CHECK(back.meta.at("scenario") == "x");
    auto md = emit_report(r, ReportFormat::Markdown);
    CHECK(md.find("| a | pass |") != std::string::npos);
  }

  TEST_CASE("NaN never passes") {
    Report r;
    Real nan = std::numeric_limits<Real>::quiet_NaN();
    r.close("n", "nan", Complex(nan, 0), Complex(0, 0), 1);
    CHECK_FALSE(r.passed());
  }

  TEST_CASE("config text") {
    auto c = parse_config_text("# defaults\nscenario = verify18\nprecision=25\nqmax = 120 # short\ncoeff-bound=90\n"
                               "format = markdown\ncache = /tmp/x\n");
    CHECK(c.scenario == "verify18");
    CHECK(c.digits == 25);
    CHECK(c.qmax == 120);
    CHECK(c.coeff_bound == 90);
    CHECK(c.format == ReportFormat::Markdown);
    CHECK(c.cache_dir == "/tmp/x");
    CHECK_THROWS_AS(parse_config_text("scenario = verify14\n"), Error);
    CHECK_THROWS_AS(parse_config_text("qmax = -3\n"), Error);
    CHECK_THROWS_AS(parse_config_text("qmax = 3x\n"), Error);
    CHECK_THROWS_AS(parse_config_text("colour = red\n"), Error);
    CHECK_THROWS_AS(parse_config_text("precision\n"), Error);
    CHECK_THROWS_AS(parse_config_text("format = yaml\n"), Error);
  }

  TEST_CASE("eigenvalue cache document") {
    SymbolSpace sp(13);
    auto eps = DirichletChar::make(13, {{2, CycNum::zeta(6)}});
    auto es = hecke_eigensystem(sp, eps, 60);
    auto back = eigensystem_from_json(eigensystem_to_json(es));
    CHECK(back.level == 13);
    CHECK(back.chi == eps);
    CHECK(back.primes == es.primes);
    CHECK(back.an == es.an);

    std::string dir = temp_dir("cache");
    bool hit = true;
    auto cold = cached_eigensystem(sp, eps, 60, dir, &hit);
    CHECK_FALSE(hit);
    auto warm = cached_eigensystem(sp, eps, 40, dir, &hit);
    CHECK(hit);
    CHECK(warm.bound == 40);
    CHECK(std::vector<CycNum>(cold.an.begin(), cold.an.begin() + 41) == warm.an);
    // a larger bound is recomputed
    cached_eigensystem(sp, eps, 80, dir, &hit);
    CHECK_FALSE(hit);
  }

  TEST_CASE("cold and warm cache give the same report") {
    ScenarioConfig cfg;
    cfg.scenario = "verify16";
    cfg.cache_dir = temp_dir("scenario");
    Report cold = run_scenario(cfg);
    Report warm = run_scenario(cfg);
    CHECK(cold.meta.at("scenario") == "verify16");
    CHECK(checks_only(cold) == checks_only(warm));
    CHECK(cold.passed());
  }

  TEST_CASE("a failing stage leaves a complete report") {
    ScenarioConfig cfg;
    cfg.scenario = "verify16";
    cfg.coeff_bound = 12;  // too few coefficients for the L-function
    Report r = run_scenario(cfg);
    const Check* e = r.find("lfun16.error");
    REQUIRE(e);
    CHECK(e->status == CheckStatus::Fail);
    CHECK(e->detail.find("coefficients") != std::string::npos);
    REQUIRE(r.find("identity16"));
    CHECK(r.find("identity16")->status == CheckStatus::Unresolved);
    CHECK(r.find("mahler16.m")->status == CheckStatus::Pass);
    CHECK_FALSE(r.passed());
  }

  TEST_CASE("unknown scenario is rejected") {
    ScenarioConfig cfg;
    cfg.scenario = "verify12";
    CHECK_THROWS_AS(run_scenario(cfg), Error);
  }
}
