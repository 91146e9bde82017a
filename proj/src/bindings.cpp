#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mahlerlab/lfun.hpp"
#include "mahlerlab/mahler.hpp"
#include "mahlerlab/verify.hpp"

namespace py = pybind11;
using namespace mahlerlab;

namespace {

// values cross the boundary as decimal strings so no digits are lost
std::string str(const Real& x) { return fmt(x, kMaxDigits); }

DirichletChar character(long modulus, const std::vector<long>& exps, long order) {
  std::vector<long> e(modulus, -1);
  for (long a = 0; a < modulus; ++a)
    if (gcd_l(a, modulus) == 1) e[a] = exps.at(a);
  return DirichletChar::from_exponents(modulus, order, e);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mahler measures, modular symbols and L-values";
  py::register_exception<Error>(m, "MahlerlabError", PyExc_ValueError);

  m.def(
      "mahler_measure",
      [](const std::string& poly, int digits) {
        MahlerOptions o;
        o.digits = digits;
        auto r = mahler_bivariate(LaurentPoly2::parse(poly), o);
        return py::make_tuple(str(r.value), str(r.error_estimate));
      },
      py::arg("poly"), py::arg("digits") = kDefaultDigits, "m(P) and an error estimate, as strings");

  m.def(
      "torus_zeros",
      [](const std::string& poly) {
        auto tc = torus_nonvanishing(LaurentPoly2::parse(poly));
        std::vector<py::tuple> out;
        for (const auto& p : tc.witnesses) {
          if (p.x_exact && p.y_exact)
            out.push_back(py::make_tuple(py::make_tuple(p.x_exact->k, p.x_exact->n),
                                         py::make_tuple(p.y_exact->k, p.y_exact->n)));
        }
        return py::make_tuple(tc.nonvanishing(), out);
      },
      py::arg("poly"), "(no torus zero certified, snapped zeros as ((k, n), (k, n)) for exp(2 pi i k/n))");

  m.def(
      "hecke_traces",
      [](long N, const std::vector<long>& exps, long order, long bound) {
        SymbolSpace sp(N);
        auto es = hecke_eigensystem(sp, character(N, exps, order), bound);
        long field = lcm_l(order, 2);
        for (long n = 1; n <= bound; ++n) field = lcm_l(field, es.an[n].order());
        std::vector<std::string> out;
        for (long n = 1; n <= bound; ++n) out.push_back(es.an[n].lift(field).trace().str());
        return out;
      },
      py::arg("level"), py::arg("exponents"), py::arg("order"), py::arg("bound"),
      "absolute traces of a_1..a_bound for the character a -> zeta_order^exponents[a]");

  m.def(
      "hurwitz_zeta",
      [](const std::string& s, const std::string& x, int k) { return str(hurwitz_zeta(Real(s), Real(x), k)); },
      py::arg("s"), py::arg("x"), py::arg("derivative") = 0);

  m.def(
      "dirichlet_L_deriv",
      [](long modulus, const std::vector<long>& exps, long order, const std::string& s) {
        Complex v = dirichlet_L_deriv(character(modulus, exps, order), Real(s));
        return py::make_tuple(str(v.real()), str(v.imag()));
      },
      py::arg("modulus"), py::arg("exponents"), py::arg("order"), py::arg("s") = "-1");

  m.def(
      "run_scenario",
      [](const std::string& config_text, const std::string& format) {
        ScenarioConfig cfg = parse_config_text(config_text);
        Report r;
        {
          py::gil_scoped_release release;
          r = run_scenario(cfg);
        }
        return emit_report(r, format == "markdown" ? ReportFormat::Markdown : ReportFormat::Json,
                           clamp_digits(cfg.digits));
      },
      py::arg("config") = "", py::arg("format") = "json", "report document for key = value configuration text");

  m.attr("scenarios") = scenario_names();
}
