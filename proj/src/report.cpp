#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "mahlerlab/verify.hpp"

namespace mahlerlab {

using json = nlohmann::ordered_json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "unresolved";
  }
}

CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "unresolved") return CheckStatus::Unresolved;
  throw Error("unknown check status '" + s + "'");
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Pass; });
}

const Check* Report::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

Check& Report::close(const std::string& id, const std::string& desc, const Complex& lhs, const Complex& rhs,
                     const Real& tol, const std::string& detail) {
  Check c{id, desc, lhs, rhs, absz(lhs - rhs), tol, CheckStatus::Fail, detail};
  using boost::multiprecision::isnan;
  if (!isnan(c.abs_err) && c.abs_err <= tol) c.status = CheckStatus::Pass;
  checks.push_back(std::move(c));
  return checks.back();
}

Check& Report::exact(const std::string& id, const std::string& desc, bool ok, const Complex& lhs, const Complex& rhs,
                     const std::string& detail) {
  Check c{id, desc, lhs, rhs, ok ? Real(0) : Real(1), 0, ok ? CheckStatus::Pass : CheckStatus::Fail, detail};
  if (!ok && lhs != rhs) c.abs_err = absz(lhs - rhs);
  checks.push_back(std::move(c));
  return checks.back();
}

Check& Report::unresolved(const std::string& id, const std::string& desc, const std::string& detail) {
  checks.push_back(Check{id, desc, Complex(0, 0), Complex(0, 0), 0, 0, CheckStatus::Unresolved, detail});
  return checks.back();
}

namespace {

json complex_json(const Complex& z, int digits) { return json{{"re", fmt(z.real(), digits)}, {"im", fmt(z.imag(), digits)}}; }

Complex complex_from(const json& j) {
  return Complex(Real(j.at("re").get<std::string>()), Real(j.at("im").get<std::string>()));
}

std::string md_escape(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format, int digits) {
  int d = std::max(5, std::min(digits, kMaxDigits));
  if (format == ReportFormat::Json) {
    json j;
    json meta = json::object();
    for (const auto& [k, v] : r.meta) meta[k] = v;
    meta["status"] = r.passed() ? "pass" : "fail";
    j["meta"] = meta;
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
      json cj{{"id", c.id},
              {"description", c.description},
              {"lhs", complex_json(c.lhs, d)},
              {"rhs", complex_json(c.rhs, d)},
              {"abs_err", fmt(c.abs_err, 6)},
              {"tol", fmt(c.tol, 6)},
              {"status", to_string(c.status)}};
      if (!c.detail.empty()) cj["detail"] = c.detail;
      j["checks"].push_back(cj);
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# mahlerlab report\n\n";
  for (const auto& [k, v] : r.meta) os << "- " << k << ": " << v << "\n";
  os << "- status: " << (r.passed() ? "pass" : "fail") << "\n\n";
  os << "| id | status | lhs | rhs | abs err | tol | description |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& c : r.checks) {
    os << "| " << c.id << " | " << to_string(c.status) << " | " << fmt(c.lhs, d) << " | " << fmt(c.rhs, d) << " | "
       << fmt(c.abs_err, 3) << " | " << fmt(c.tol, 3) << " | " << md_escape(c.description);
    if (!c.detail.empty()) os << " (" << md_escape(c.detail) << ")";
    os << " |\n";
  }
  return os.str();
}

Report parse_report_json(const std::string& doc) {
  json j = json::parse(doc);
  Report r;
  for (const auto& [k, v] : j.at("meta").items())
    if (k != "status") r.meta[k] = v.get<std::string>();
  for (const auto& cj : j.at("checks")) {
    Check c;
    c.id = cj.at("id").get<std::string>();
    c.description = cj.at("description").get<std::string>();
    c.lhs = complex_from(cj.at("lhs"));
    c.rhs = complex_from(cj.at("rhs"));
    c.abs_err = Real(cj.at("abs_err").get<std::string>());
    c.tol = Real(cj.at("tol").get<std::string>());
    c.status = parse_status(cj.at("status").get<std::string>());
    if (cj.contains("detail")) c.detail = cj.at("detail").get<std::string>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

void write_report(const Report& r, const std::string& path, ReportFormat format, int digits) {
  std::string doc = emit_report(r, format, digits);
  if (path.empty() || path == "-") {
    std::cout << doc;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write report to " + path);
  out << doc;
  if (!out) throw Error("cannot write report to " + path);
}

// ---- configuration ----

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"verify13", "verify16", "verify18", "verify25", "all"};
  return names;
}

void ScenarioConfig::validate() const {
  const auto& n = scenario_names();
  if (std::find(n.begin(), n.end(), scenario) == n.end()) throw Error("unknown scenario '" + scenario + "'");
  if (digits <= 0 || qmax <= 0 || nodes <= 0 || coeff_bound < 0)
    throw Error("numeric parameters must be positive");
}

void apply_config_key(ScenarioConfig& c, const std::string& key, const std::string& value) {
  auto to_long = [&](const std::string& v) {
    size_t pos = 0;
    long x = 0;
    try {
      x = std::stol(v, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != v.size() || v.empty()) throw Error("config key '" + key + "' needs an integer, got '" + v + "'");
    return x;
  };
  if (key == "scenario") c.scenario = value;
  else if (key == "precision") c.digits = static_cast<int>(to_long(value));
  else if (key == "qmax") c.qmax = to_long(value);
  else if (key == "nodes") c.nodes = static_cast<int>(to_long(value));
  else if (key == "coeff-bound") c.coeff_bound = to_long(value);
  else if (key == "cache") c.cache_dir = value;
  else if (key == "out") c.out = value;
  else if (key == "format") {
    if (value == "json") c.format = ReportFormat::Json;
    else if (value == "markdown") c.format = ReportFormat::Markdown;
    else throw Error("format must be json or markdown, got '" + value + "'");
  } else {
    throw Error("unknown config key '" + key + "'");
  }
}

ScenarioConfig parse_config_text(const std::string& text, ScenarioConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw Error("config line " + std::to_string(lineno) + ": expected key = value");
    apply_config_key(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  base.validate();
  return base;
}

ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), base);
}

// ---- eigenvalue cache ----

namespace {

json cyc_json(const CycNum& x) {
  json c = json::array();
  for (const auto& q : x.coeffs()) c.push_back(q.str());
  return c;
}

CycNum cyc_from(const json& j, long order) {
  std::vector<Rational> c;
  for (const auto& q : j) c.emplace_back(q.get<std::string>());
  return CycNum(order, c);
}

std::string cache_key(long N, const DirichletChar& chi) {
  std::ostringstream os;
  os << "eigen_N" << N << "_o" << chi.order();
  for (long a = 0; a < chi.modulus(); ++a)
    if (chi.exponents()[a] >= 0 && a > 1) os << "_" << chi.exponents()[a];
  return os.str() + ".json";
}

}  // namespace

std::string eigensystem_to_json(const Eigensystem& es) {
  json j;
  j["level"] = es.level;
  j["character"] = es.chi.describe();
  j["character_order"] = es.chi.order();
  j["character_exponents"] = es.chi.exponents();
  long order = es.ap.empty() ? 1 : es.ap.front().order();
  for (const auto& a : es.ap) order = lcm_l(order, a.order());
  j["zeta_order"] = order;
  j["bound"] = es.bound;
  j["primes"] = es.primes;
  json ap = json::array();
  for (const auto& a : es.ap) ap.push_back(cyc_json(a.lift(order)));
  j["a_p"] = ap;
  return j.dump(1) + "\n";
}

Eigensystem eigensystem_from_json(const std::string& doc) {
  json j = json::parse(doc);
  Eigensystem es;
  es.level = j.at("level").get<long>();
  auto exps = j.at("character_exponents").get<std::vector<long>>();
  es.chi = DirichletChar::from_exponents(static_cast<long>(exps.size()), j.at("character_order").get<long>(), exps);
  es.bound = j.at("bound").get<long>();
  es.primes = j.at("primes").get<std::vector<long>>();
  long order = j.at("zeta_order").get<long>();
  for (const auto& a : j.at("a_p")) es.ap.push_back(cyc_from(a, order));
  if (es.ap.size() != es.primes.size()) throw Error("eigenvalue cache: a_p and primes differ in length");
  es.an = extend_coefficients(es.level, es.chi, es.primes, es.ap, es.bound);
  return es;
}

Eigensystem cached_eigensystem(const SymbolSpace& sp, const DirichletChar& chi, long bound,
                               const std::string& cache_dir, bool* hit) {
  if (hit) *hit = false;
  namespace fs = std::filesystem;
  fs::path file;
  if (!cache_dir.empty()) {
    file = fs::path(cache_dir) / cache_key(sp.level(), chi);
    std::ifstream in(file);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      try {
        Eigensystem es = eigensystem_from_json(ss.str());
        if (es.level == sp.level() && es.chi == chi && es.bound >= bound) {
          if (hit) *hit = true;
          if (es.bound > bound) {
            // the same truncation as a fresh computation
            size_t k = 0;
            while (k < es.primes.size() && es.primes[k] <= bound) ++k;
            es.primes.resize(k);
            es.ap.resize(k);
            es.bound = bound;
            es.an.resize(bound + 1);
          }
          return es;
        }
      } catch (const std::exception&) {
        // unreadable cache entries are recomputed
      }
    }
  }
  Eigensystem es = hecke_eigensystem(sp, chi, bound);
  if (!file.empty()) {
    fs::create_directories(file.parent_path());
    std::ofstream out(file);
    if (out) out << eigensystem_to_json(es);
  }
  return es;
}

}  // namespace mahlerlab
