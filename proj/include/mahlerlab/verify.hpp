#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mahlerlab/modsym.hpp"
#include "mahlerlab/numeric.hpp"

namespace mahlerlab {

enum class CheckStatus { Pass, Fail, Unresolved };
std::string to_string(CheckStatus s);
CheckStatus parse_status(const std::string& s);

struct Check {
  std::string id, description;
  Complex lhs{0, 0}, rhs{0, 0};
  Real abs_err = 0, tol = 0;
  CheckStatus status = CheckStatus::Unresolved;
  std::string detail;  // tail bounds, error messages, exact values
};

struct Report {
  std::map<std::string, std::string> meta;
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(const std::string& id) const;
  // |lhs - rhs| <= tol
  Check& close(const std::string& id, const std::string& desc, const Complex& lhs, const Complex& rhs, const Real& tol,
               const std::string& detail = "");
  // exact comparison, tol 0
  Check& exact(const std::string& id, const std::string& desc, bool ok, const Complex& lhs = Complex(0, 0),
               const Complex& rhs = Complex(0, 0), const std::string& detail = "");
  Check& unresolved(const std::string& id, const std::string& desc, const std::string& detail);
};

enum class ReportFormat { Json, Markdown };
std::string emit_report(const Report& r, ReportFormat fmt, int digits = kDefaultDigits);
Report parse_report_json(const std::string& doc);
void write_report(const Report& r, const std::string& path, ReportFormat fmt, int digits = kDefaultDigits);

struct ScenarioConfig {
  std::string scenario = "verify13";
  int digits = kDefaultDigits;
  long qmax = 300;        // q-expansion order for minimal-polynomial checks
  int nodes = 16;         // starting Gauss-Legendre order for the Mahler quadrature
  long coeff_bound = 0;   // 0: chosen from the precision
  std::string cache_dir;  // empty: no cache
  std::string out;        // empty: stdout
  ReportFormat format = ReportFormat::Json;

  void validate() const;
};

const std::vector<std::string>& scenario_names();

// key = value lines, '#' comments; keys as the CLI long options
ScenarioConfig parse_config_text(const std::string& text, ScenarioConfig base = {});
ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base = {});
void apply_config_key(ScenarioConfig& c, const std::string& key, const std::string& value);

// eigenvalue cache documents
std::string eigensystem_to_json(const Eigensystem& es);
Eigensystem eigensystem_from_json(const std::string& doc);
// loads from cache_dir if present with bound >= `bound`, otherwise computes and stores
Eigensystem cached_eigensystem(const SymbolSpace& sp, const DirichletChar& chi, long bound,
                               const std::string& cache_dir, bool* hit = nullptr);

Report run_scenario(const ScenarioConfig& cfg);
// the individual pipelines append to `r`
void run_verify13(const ScenarioConfig& cfg, Report& r);
void run_verify16(const ScenarioConfig& cfg, Report& r);
void run_verify18(const ScenarioConfig& cfg, Report& r);
void run_verify25(const ScenarioConfig& cfg, Report& r);

}  // namespace mahlerlab
