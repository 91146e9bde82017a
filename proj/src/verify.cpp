#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "mahlerlab/bivar.hpp"
#include "mahlerlab/lfun.hpp"
#include "mahlerlab/mahler.hpp"
#include "mahlerlab/units.hpp"
#include "mahlerlab/verify.hpp"

namespace mahlerlab {

namespace {

const char* kP13 = "y^2*x*(x-1)+y*(-x^3+x^2+2*x-1)-x^2+x";
const char* kP16 = "y-x-x*y-x*y^2+x^2*y+x*y^3";
const char* kP18 = "-x^2+y^3+x*y^2-x^2*y+x^2*y^2-x^3*y^2";
const char* kP25 = "y^2*x^4+(y^3+y^2)*x^3+(3*y^3-y^2-2*y)*x^2+(y^4-4*y^2+y-1)*x-y^3";

// a stage input that an earlier stage failed to produce
struct MissingInput : Error {
  using Error::Error;
};

template <class T>
const T& need(const std::optional<T>& v, const std::string& what) {
  if (!v) throw MissingInput(what);
  return *v;
}

// Runs one stage. A rejection becomes a failed check `<name>.error`; planned checks the
// stage did not reach are marked unresolved.
void stage(Report& r, const std::string& name, const std::vector<std::string>& planned, const std::function<void()>& fn) {
  std::string why;
  try {
    fn();
    return;
  } catch (const MissingInput& e) {
    why = "needs " + std::string(e.what()) + " from an earlier stage";
  } catch (const std::exception& e) {
    r.checks.push_back(Check{name + ".error", "stage " + name + " rejected its input", Complex(0, 0), Complex(0, 0),
                             1, 0, CheckStatus::Fail, e.what()});
    why = "stage " + name + " failed: " + e.what();
  }
  for (const auto& id : planned)
    if (!r.find(id)) r.unresolved(id, "not evaluated", why);
}

Check& estimate(Report& r, const std::string& id, const std::string& desc, const Real& value, const Real& err,
                const Real& tol) {
  Check c{id, desc, Complex(value, 0), Complex(value, 0), err, tol, err <= tol ? CheckStatus::Pass : CheckStatus::Fail,
          "abs_err is the quadrature error estimate"};
  r.checks.push_back(std::move(c));
  return r.checks.back();
}

Complex zeta(long n, long k = 1) { return root_of_unity(k, n); }

std::string root_key(const RootOfUnity& z) {
  long n = z.n, k = mod_l(z.k, z.n);
  long g = gcd_l(k, n);
  if (k == 0) return "1";
  return std::to_string(k / g) + "/" + std::to_string(n / g);
}

// snapped torus zeros as "x;y" keys, exponents of exp(2 pi i k/n)
std::set<std::string> torus_census(const TorusCertificate& tc, std::string* detail) {
  std::set<std::string> out;
  std::ostringstream os;
  for (const auto& p : tc.witnesses) {
    if (!p.x_exact || !p.y_exact || !p.exact_zero) {
      os << "unsnapped point " << fmt(p.x, 8) << ", " << fmt(p.y, 8) << "; ";
      out.insert("?");
      continue;
    }
    out.insert(root_key(*p.x_exact) + ";" + root_key(*p.y_exact));
  }
  for (const auto& s : out) os << "(" << s << ") ";
  if (detail) *detail = os.str();
  return out;
}

std::string key_of(long kx, long nx, long ky, long ny) {
  return root_key(RootOfUnity{kx, nx}) + ";" + root_key(RootOfUnity{ky, ny});
}

// coefficient count for the completed L-function and for the pseudo-eigenvalue, whose
// smaller height is 1/(1.1 sqrt N)
long lfun_bound(long N, int digits, const Real& growth = 2) {
  long a = lambda_terms_needed(N, digits, growth, Real(1.2));
  long c = static_cast<long>((digits + 6) * std::log(10.0) * std::sqrt(static_cast<double>(N)) * 1.1 /
                             (2 * std::acos(-1.0))) + 2;
  return std::max(a, c);
}

std::vector<Complex> conj_all(const std::vector<Complex>& a) {
  std::vector<Complex> c(a.size());
  for (size_t n = 0; n < a.size(); ++n) c[n] = conjz(a[n]);
  return c;
}

// max |Lambda(s; t = 1) - Lambda(s; t = 1.2)| over s in {0, 1, 2}
Real fe_residual(const LDatum& f, int digits) {
  Real worst = 0;
  for (Real s : {Real(0), Real(1), Real(2)}) {
    Real d = absz(completed_lambda(f, s, 0, digits, 1).value - completed_lambda(f, s, 0, digits, Real(1.2)).value);
    worst = std::max(worst, d);
  }
  return worst;
}

MahlerOptions mahler_opts(const ScenarioConfig& cfg, int digits) {
  MahlerOptions o;
  o.digits = digits;
  o.start_nodes = cfg.nodes;
  return o;
}

}  // namespace

// ---------------------------------------------------------------- level 13

void run_verify13(const ScenarioConfig& cfg, Report& r) {
  const int D = clamp_digits(cfg.digits);
  const auto P = LaurentPoly2::parse(kP13);
  const Complex z6 = zeta(6), one(1, 0);
  const Real twopi = 2 * pi();

  std::optional<Real> mP;
  std::optional<SymbolSpace> spo;
  std::optional<Chain> g1, g2, g3, g4;
  const DirichletChar eps = DirichletChar::make(13, {{2, CycNum::zeta(6)}});
  std::optional<Eigensystem> es;
  std::optional<std::vector<Complex>> an;
  std::optional<Complex> iota3, iota4, w;
  std::optional<Level13Units> units;
  std::optional<TorusCycleSample> cycle;

  stage(r, "torus", {"torus.certificate"}, [&] {
    auto tc = torus_nonvanishing(P, D);
    std::ostringstream os;
    os << "arcs " << tc.arcs << ", min margin " << fmt(tc.min_margin, 4) << ", grid min " << fmt(tc.grid_min, 4)
       << "; " << tc.note;
    r.exact("torus.certificate", "P has no zero on the torus (resultant arcs certified)", tc.nonvanishing(),
            Complex(tc.min_margin, 0), Complex(0, 0), os.str());
  });

  stage(r, "mahler", {"mahler.m_P"}, [&] {
    auto m = mahler_bivariate(P, mahler_opts(cfg, D));
    mP = m.value;
    estimate(r, "mahler.m_P", "m(P) by quadrature of Jensen slices", m.value, m.error_estimate, pow10(-(D - 8)));
  });

  stage(r, "space", {"space.h1_rank", "space.cusps", "space.relations", "space.operators", "space.basis"}, [&] {
    spo.emplace(13);
    const auto& sp = *spo;
    r.exact("space.h1_rank", "rank of H1 of X1(13)", sp.h1_rank() == 4, Complex(Real(sp.h1_rank()), 0),
            Complex(4, 0));
    r.exact("space.cusps", "number of cusp classes", sp.num_cusps() == 12, Complex(Real(sp.num_cusps()), 0),
            Complex(12, 0));
    bool rel = true;
    for (size_t i = 0; i < sp.num_symbols(); ++i) {
      Symbol x = sp.symbol(i);
      rel = rel && (sp.xi(x.u, x.v) + sp.xi(x.v, -x.u)).is_zero() &&
            (sp.xi(x.u, x.v) + sp.xi(x.v, -x.u - x.v) + sp.xi(-x.u - x.v, x.u)).is_zero();
    }
    r.exact("space.relations", "two- and three-term Manin relations hold on every symbol", rel);
    g1 = sp.xi(1, -5) - sp.xi(2, 5) - sp.xi(1, -2);
    g2 = sp.diamond(2, *g1);
    g3 = sp.xi(1, -3) - sp.xi(1, 3);
    g4 = sp.diamond(2, *g3);
    bool ops = true;
    for (const Chain* g : {&*g1, &*g2, &*g3, &*g4}) {
      ops = ops && sp.fricke(sp.fricke(*g)) == *g && sp.star(sp.star(*g)) == *g;
      for (long p : {2L, 3L, 5L, 7L}) ops = ops && sp.hecke(p, sp.diamond(2, *g)) == sp.diamond(2, sp.hecke(p, *g));
    }
    r.exact("space.operators", "W13^2 = 1, c^2 = 1, T_p commutes with <2> for p <= 7 on gamma_1..gamma_4", ops);
    bool closed = g1->is_closed() && g2->is_closed() && g3->is_closed() && g4->is_closed();
    Matrix<CycNum> m{g1->coeffs(), g2->coeffs(), g3->coeffs(), g4->coeffs()};
    bool span = closed && rank(m) == 4;
    for (const auto& h : sp.h1_basis()) span = span && express(sp.from_rational(h), {*g1, *g2, *g3, *g4}).has_value();
    r.exact("space.basis",
            "gamma_1 = {1/5,2/5}, gamma_3 = {1/3,-1/3} and their <2>-images are closed and span H1", span,
            Complex(Real(rank(m)), 0), Complex(4, 0));
  });

  stage(r, "eigen", {"eigen.traces", "eigen.a15", "eigen.conjugate", "eigen.conjugate_character"}, [&] {
    const auto& sp = need(spo, "the level 13 space");
    long B = cfg.coeff_bound;
    if (B == 0) {
      B = std::max({period_terms_needed(need(g3, "gamma_3"), D), period_terms_needed(need(g4, "gamma_4"), D),
                    lfun_bound(169, D, 4), 200L});
      // gamma_eps^+ needs the most terms
      DirichletChar e3 = eps.pow(3);
      Chain gp = sp.zero();
      for (long a = 1; a < 13; ++a) gp += e3(a) * sp.project(sp.xi(1, a), eps);
      B = std::max(B, period_terms_needed(gp, D));
    }
    bool hit = false;
    es = cached_eigensystem(sp, eps, B, cfg.cache_dir, &hit);
    an = es->embed();
    r.meta["eigen13.bound"] = std::to_string(B);
    r.meta["eigen13.cache"] = hit ? "hit" : "miss";
    const long expect[] = {2, -3, -2, 1, 0, 6, 0, 0, -1, -3, 0, -4, -5, 0};
    bool ok = true;
    std::ostringstream os;
    for (long n = 1; n <= 14; ++n) {
      Rational t = es->an[n].lift(6).trace();
      os << t.str() << (n < 14 ? "," : "");
      ok = ok && t == expect[n - 1];
    }
    r.exact("eigen.traces", "Tr a_n(f_eps) for n = 1..14 equals 2,-3,-2,1,0,6,0,0,-1,-3,0,-4,-5,0", ok, Complex(0, 0),
            Complex(0, 0), os.str());
    Rational t15 = es->an[15].lift(6).trace();
    r.exact("eigen.a15", "a_15 = a_3 a_5 (multiplicativity); its trace is reported", es->an[15] == es->an[3] * es->an[5],
            Complex(to_real(t15), 0), Complex(to_real(t15), 0), "Tr a_15 = " + t15.str());
    bool cj = true;
    for (size_t i = 0; i < es->primes.size(); ++i)
      if (es->primes[i] != 13) cj = cj && es->ap[i] == eps(es->primes[i]) * es->ap[i].conj();
    r.exact("eigen.conjugate", "a_p = eps(p) conj(a_p) for p != 13", cj);
    auto eb = hecke_eigensystem(sp, eps.conj(), 30);
    bool cc = true;
    for (long n = 1; n <= 30; ++n) cc = cc && eb.an[n] == es->an[n].conj();
    r.exact("eigen.conjugate_character", "the conjugate character gives the conjugate eigenform (n <= 30)", cc);
  });

  stage(r, "periods", {"period.gamma3", "period.gamma4", "period.hexagonal", "period.explicit_loop"}, [&] {
    const auto& a = need(an, "the eigenform");
    iota3 = period_pairing(need(g3, "gamma_3"), a, D);
    iota4 = period_pairing(need(g4, "gamma_4"), a, D);
    r.close("period.gamma3", "<gamma_3, f_eps> = int 2 pi i f_eps dz", *iota3, Complex(1.06759, -2.60094), 1e-4);
    r.close("period.gamma4", "iota(gamma_4)", *iota4, Complex(2.78628, -0.37591), 1e-4);
    r.close("period.hexagonal", "iota(gamma_4)/iota(gamma_3) = zeta_6", *iota4 / *iota3, z6, 1e-10);
    r.close("period.explicit_loop", "<gamma_3, f_eps> through the loop z -> g z, g = [[14,-5],[-39,14]]",
            hecke_period(Mat2{14, -5, -39, 14}, a), *iota3, pow10(-(D - 8)));
  });

  std::optional<Complex> iotaP;
  stage(r, "deninger",
        {"deninger.int_omega", "deninger.int_h_omega", "deninger.alpha", "deninger.beta", "deninger.fit_residual",
         "deninger.pairing", "deninger.lattice"},
        [&] {
          cycle = track_deninger_cycle(P, Var::Y, 16, 32, D);
          RationalDifferential wdiff{LaurentPoly2::parse("(h^2-h)*H-h^3+h^2+2*h-1", "H", "h"),
                                     LaurentPoly2::parse("h^4-2*h^3+3*h^2-2*h+1", "H", "h")};
          RationalDifferential hw{LaurentPoly2::parse("h", "H", "h") * wdiff.num, wdiff.den};
          Complex i1 = integrate_along_cycle(*cycle, wdiff), i2 = integrate_along_cycle(*cycle, hw);
          r.close("deninger.int_omega", "int over gamma_P of omega", i1, Complex(0, -3.21731), 1e-4);
          r.close("deninger.int_h_omega", "int over gamma_P of h omega", i2, Complex(0, -1.23275), 1e-4);
          const auto& a = need(an, "the eigenform");
          auto ca = conj_all(a);
          auto pe = fricke_pseudo_eigenvalue(a, ca, 13, D);
          w = pe.w;
          auto ce = curve_qexpansions13(60);
          auto fit = fit_differential(ce, ca, pe.w, 55);
          r.close("deninger.alpha", "alpha in 2 pi i f_eps dz = alpha omega + beta h omega", fit.alpha,
                  Complex(0.71163, 0.70256), 1e-4);
          r.close("deninger.beta", "beta", fit.beta, Complex(0.25262, -0.96757), 1e-4);
          r.close("deninger.fit_residual", "alpha, beta from q^1, q^2 reproduce q^3..q^55", Complex(fit.residual, 0),
                  Complex(0, 0), pow10(-(D - 8)));
          iotaP = fit.alpha * i1 + fit.beta * i2;
          r.close("deninger.pairing", "<gamma_P, f_eps> = alpha int omega + beta int h omega vs <gamma_3, f_eps>",
                  *iotaP, need(iota3, "iota(gamma_3)"), 1e-6);
          Real res = 0;
          auto lc = lattice_coords(*iotaP, *iota3, need(iota4, "iota(gamma_4)"), Real(1e-6), &res);
          bool ok = lc && lc->first == 1 && lc->second == 0;
          r.exact("deninger.lattice", "lattice decision gamma_P = gamma_3 (residual < 1e-6)", ok, Complex(res, 0),
                  Complex(0, 0),
                  lc ? "coordinates (" + std::to_string(lc->first) + ", " + std::to_string(lc->second) + ")"
                     : "no lattice point within 1e-6");
        });

  stage(r, "w13", {"w13.iota", "w13.lattice", "w13.symbol"}, [&] {
    Complex v = -need(w, "w") * conjz(need(iotaP, "iota(gamma_P)"));
    r.close("w13.iota", "iota(W13 gamma_P) = -w conj(iota(gamma_P))", v, Complex(1.71869, 2.22503), 1e-4);
    Real res = 0;
    auto lc = lattice_coords(v, need(iota3, "iota(gamma_3)"), need(iota4, "iota(gamma_4)"), Real(1e-6), &res);
    bool ok = lc && lc->first == -1 && lc->second == 1;
    r.exact("w13.lattice", "lattice decision W13 gamma_P = gamma_4 - gamma_3 (residual < 1e-6)", ok, Complex(res, 0),
            Complex(0, 0),
            lc ? "coordinates (" + std::to_string(lc->first) + ", " + std::to_string(lc->second) + ")" : "none");
    const auto& sp = need(spo, "the level 13 space");
    r.exact("w13.symbol", "W13 gamma_3 = gamma_4 - gamma_3 on modular symbols",
            sp.fricke(need(g3, "gamma_3")) == need(g4, "gamma_4") - *g3);
  });

  stage(r, "units", {"units.div_x", "units.div_y", "units.x_inf", "units.y_lead", "units.minpoly"}, [&] {
    units = level13_units();
    auto dx = cusp_divisor(units->x), dy = cusp_divisor(units->y);
    const long ex[6] = {0, 1, 1, -1, 0, -1}, ey[6] = {1, -1, 1, 1, -1, -1};
    bool okx = true, oky = true;
    std::ostringstream sx, sy;
    for (long d = 1; d <= 6; ++d) {
      Cusp c = diamond_infinity(13, d);
      okx = okx && dx.at(c) == ex[d - 1];
      oky = oky && dy.at(c) == ey[d - 1];
      sx << dx.at(c).str() << (d < 6 ? "," : "");
      sy << dy.at(c).str() << (d < 6 ? "," : "");
    }
    r.exact("units.div_x", "dv(x) = (0,1,1,-1,0,-1) on <d> infinity, d = 1..6", okx && dx.at(Cusp::make(0, 1)) == 0,
            Complex(0, 0), Complex(0, 0), sx.str() + "; x = " + units->xp.describe());
    r.exact("units.div_y", "dv(y) = (1,-1,1,1,-1,-1)", oky, Complex(0, 0), Complex(0, 0),
            sy.str() + "; y = " + units->yp.describe());
    auto xs = unit_expand(units->x, 4), ys = unit_expand(units->y, 4);
    r.exact("units.x_inf", "x(infinity) = 1", xs.valuation() == 0 && xs[0] == 1, Complex(to_real(xs[0]), 0),
            Complex(1, 0));
    r.exact("units.y_lead", "y = -q + O(q^2)", ys.valuation() == 1 && ys[1] == -1, Complex(to_real(ys[1]), 0),
            Complex(-1, 0));
    BigInt res = verify_min_poly(P, units->x, units->y, cfg.qmax);
    r.exact("units.minpoly", "P(x, y) = 0 through q^" + std::to_string(cfg.qmax), res == 0, Complex(to_real(res), 0),
            Complex(0, 0));
  });

  stage(r, "symbolic",
        {"sym.cstar", "sym.gammapsi", "sym.rebolledo", "sym.gamma_f_closed", "sym.merel_constant", "sym.w13_rule",
         "sym.theta"},
        [&] {
          const auto& sp = need(spo, "the level 13 space");
          const Chain &a1 = need(g1, "gamma_1"), &a2 = need(g2, "gamma_2"), &a3 = need(g3, "gamma_3"),
                      &a4 = need(g4, "gamma_4");
          r.exact("sym.cstar", "c* gamma_1 = gamma_1 + gamma_4, c* gamma_2 = gamma_2 - gamma_3 + gamma_4, c* gamma_3 = "
                               "-gamma_3, c* gamma_4 = -gamma_4",
                  sp.star(a1) == a1 + a4 && sp.star(a2) == a2 - a3 + a4 && sp.star(a3) == -a3 && sp.star(a4) == -a4);
          DirichletChar e3 = eps.pow(3);
          auto gplus = [&](const DirichletChar& psi) {
            Chain acc = sp.zero();
            for (long a = 1; a < 13; ++a) acc += e3(a) * sp.project(sp.xi(1, a), psi);
            return acc;
          };
          bool gp_ok = true;
          for (const DirichletChar& psi : {eps, eps.conj()}) {
            Chain gp = gplus(psi);
            Chain rhs = (CycNum(2) - CycNum(4) * psi(2)) * sp.project(sp.xi(1, 2), psi) +
                        sp.project(sp.xi(1, 3), psi) + sp.project(sp.xi(1, -3), psi);
            gp_ok = gp_ok && gp.is_closed() && gp == rhs;
          }
          r.exact("sym.gammapsi",
                  "gamma_psi^+ = (2 - 4 psi(2)) xi(1,2)^psi + xi(1,3)^psi + xi(1,-3)^psi for psi = eps, epsbar", gp_ok);
          auto t = rebolledo_reduce(sp, eps);
          const auto& PS = t.periods;
          auto is = [&](long v, CycNum c0, CycNum c2, CycNum c3) {
            Symbol s{1, mod_l(v, 13)};
            return PS.value(sp, s, 0) == c0 && PS.value(sp, s, 1) == c2 && PS.value(sp, s, 2) == c3;
          };
          CycNum z = CycNum::zeta(6);
          bool reb = is(1, 0, 0, 0) && is(2, 0, 1, 0) && is(3, 0, 0, 1) && is(4, 0, 0, CycNum(1) - z) &&
                     is(5, 0, z - CycNum(1), CycNum(1) - z) && is(6, 0, z - CycNum(1), 0);
          for (long v = 1; v < 13; ++v)
            for (size_t k = 0; k < 3; ++k) reb = reb && PS.value(sp, {1, v}, k) == PS.value(sp, {1, 13 - v}, k);
          r.exact("sym.rebolledo",
                  "xi+(1,-v) = xi+(1,v); xi+(1,1) = 0, xi+(1,4) = (1-z6) xi+(1,3), xi+(1,5) = (z6-1)(xi+(1,2) - "
                  "xi+(1,3)), xi+(1,6) = (z6-1) xi+(1,2)",
                  reb);
          auto FP = formal_plus_symbols(sp, eps, {{1, 0}, {1, 2}, {1, 3}});
          std::vector<Chain> parts;
          for (size_t k = 0; k < 3; ++k)
            parts.push_back(merel_cycle(sp, [&](Symbol x) { return FP.value(sp, x, k); }));
          bool closed = std::all_of(parts.begin(), parts.end(), [](const Chain& c) { return c.is_closed(); });
          r.exact("sym.gamma_f_closed", "the Merel cycle gamma_{f_eps}^- is closed for every choice of the unknowns",
                  closed);
          // written as in the proof: gamma^-_{epsbar} = xi(1,3)^epsbar - xi(1,-3)^epsbar
          Chain gm = sp.project(sp.xi(1, 3), eps.conj()) - sp.project(sp.xi(1, -3), eps.conj());
          auto c2 = express(parts[1], {gm}), c3 = express(parts[2], {gm});
          bool mc = parts[0].is_zero() && c2 && c3 && (*c2)[0] == CycNum(12) &&
                    (*c3)[0] == CycNum(8) * z - CycNum(4);
          r.exact("sym.merel_constant",
                  "gamma_{f_eps}^- = (12 xi+(1,2) + (8 z6 - 4) xi+(1,3)) (xi(1,3) - xi(1,-3))^epsbar", mc,
                  Complex(0, 0), Complex(0, 0),
                  c2 && c3 ? "coefficients " + (*c2)[0].to_string() + ", " + (*c3)[0].to_string() : "not expressible");
          bool wr = true;
          for (const DirichletChar& psi : {eps, eps.conj()})
            wr = wr && sp.fricke(gplus(psi)) == psi(2) * gplus(psi.conj());
          r.exact("sym.w13_rule", "W13 gamma_psi^+ = psi(2) gamma_psibar^+", wr);
          Chain theta = sp.zero();
          for (long a = 1; a < 13; ++a) theta += e3(a) * sp.path(Cusp::make(a, 13), Cusp::infinity());
          r.exact("sym.theta", "W13 (theta^eps) = gamma_epsbar^+, theta = sum eps^3(a) {a/13, infinity}",
                  sp.fricke(sp.project(theta, eps)) == gplus(eps.conj()));
        });

  std::optional<Complex> Lp;  // L'(f_eps, 0)
  std::optional<Real> I3, I4;
  stage(r, "analytic",
        {"analytic.w", "analytic.w_closed", "analytic.functional_equation", "analytic.gauss_sums",
         "analytic.gauss_sums_exact", "analytic.L2_relation", "analytic.fe_route", "analytic.linearity", "analytic.manin_twist", "analytic.manin_twist.sign_corrected", "analytic.twisted_product",
         "analytic.eta_epsbar", "analytic.eta_eps", "analytic.eta_epsbar.sign_corrected",
         "analytic.eta_eps.sign_corrected"},
        [&] {
          const auto& a = need(an, "the eigenform");
          const Complex& wv = need(w, "w");
          CycNum tau = gauss_sum(eps);
          r.close("analytic.w", "pseudo-eigenvalue w, W13 f_eps = w f_epsbar", wv, Complex(-0.96425, 0.26501), 1e-4);
          Complex wc = ((CycNum(3) * CycNum::zeta(6) - CycNum(4)) * tau).embed() / Real(13);
          r.close("analytic.w_closed", "w = (3 z6 - 4) tau(eps)/13", wv, wc, 1e-10);
          LDatum F = make_ldatum(13, a, wv);
          Real fe = fe_residual(F, D);
          r.close("analytic.functional_equation", "Lambda(f_eps, s) agrees for split points 1 and 1.2 (s = 0, 1, 2)",
                  Complex(fe, 0), Complex(0, 0), 1e-12,
                  "tail bound " + fmt(lambda_tail_bound(F, F.bound(), Real(1.2)), 3));
          CycNum tt = gauss_sum(eps.pow(2)) * tau;
          Complex tnum(0, 0), t2num(0, 0);
          for (long k = 1; k < 13; ++k) {
            tnum += eps.value(k) * root_of_unity(k, 13);
            t2num += eps.pow(2).value(k) * root_of_unity(k, 13);
          }
          Complex rhs_t = (CycNum(4) * CycNum::zeta(6) - CycNum(3)).embed() * sqrt(Real(13));
          r.close("analytic.gauss_sums", "tau(eps^2) tau(eps) = (4 z6 - 3) sqrt 13 (direct sums)", t2num * tnum, rhs_t,
                  1e-15);
          // sqrt 13 = tau of the quadratic character eps^3
          r.exact("analytic.gauss_sums_exact", "tau(eps^2) tau(eps) = (4 z6 - 3) tau(eps^3) in Q(z78)",
                  tt == (CycNum(4) * CycNum::zeta(6) - CycNum(3)) * gauss_sum(eps.pow(3)));
          Lp = completed_lambda(F, 0, 0, D).value;
          Complex L2 = l_value(F, 2, D);
          Complex L2rel = Real(4) * pi() * pi() / Real(169) * (Complex(4, 0) - Real(3) * z6) * tau.embed() * conjz(*Lp);
          r.close("analytic.L2_relation", "L(f_eps, 2) = (4 pi^2/169)(4 - 3 z6) tau(eps) L'(f_epsbar, 0)", L2, L2rel,
                  1e-10);
          // Lambda(f, 0) = -w Lambda(fbar, 2), for f_eps and for f_epsbar
          LDatum Fb = make_ldatum(13, conj_all(a), conjz(wv));
          Complex Lpb = completed_lambda(Fb, 0, 0, D).value;
          Complex r1 = -wv * completed_lambda(Fb, 2, 0, D).value, r2 = -conjz(wv) * completed_lambda(F, 2, 0, D).value;
          Real dev = std::max(absz(*Lp - r1), absz(Lpb - r2));
          r.close("analytic.fe_route", "L'(f, 0) directly and through -w Lambda(fbar, 2), both eigenforms",
                  Complex(dev, 0), Complex(0, 0), 1e-10);
          r.close("analytic.linearity", "L'(f_eps + f_epsbar, 0) = L'(f_eps, 0) + L'(f_epsbar, 0)",
                  *Lp + Lpb, Complex(2 * re(*Lp), 0), 1e-10);

          // twisted L-value straight from the level 169 twist
          const auto& sp = need(spo, "the level 13 space");
          DirichletChar e3 = eps.pow(3);
          std::vector<Complex> tw(a.size());
          for (size_t n = 0; n < a.size(); ++n) tw[n] = a[n] * e3.value(static_cast<long>(n));
          auto ptw = fricke_pseudo_eigenvalue(tw, conj_all(tw), 169, D);
          LDatum T = make_ldatum(169, tw, ptw.w);
          Complex Ltw = l_value(T, 1, D);
          Chain gp = sp.zero();
          for (long k = 1; k < 13; ++k) gp += e3(k) * sp.project(sp.xi(1, k), eps);
          Complex pplus = period_pairing(gp, a, D);
          Complex manin = conjz(z6) / sqrt(Real(13)) * pplus;
          r.close("analytic.manin_twist", "L(f_eps, eps^3, 1) = (epsbar(2)/sqrt 13) <gamma_eps^+, f_eps>",
                  Ltw, manin, 1e-8, "twist computed from its level 169 functional equation");
          r.close("analytic.manin_twist.sign_corrected",
                  "L(f_eps, eps^3, 1) = -(epsbar(2)/sqrt 13) <gamma_eps^+, f_eps>", Ltw, -manin, 1e-8);

          const auto& U = need(units, "the units x, y");
          I3 = re(eta_cycle(U.x, U.y, need(g3, "gamma_3"), D));
          I4 = re(eta_cycle(U.x, U.y, need(g4, "gamma_4"), D));
          // gamma_epsbar^- = (z6 gamma_3 - gamma_4)/(z6 - z6bar), gamma_eps^- its conjugate
          Complex Ib = (z6 * *I3 - *I4) / (z6 - conjz(z6));
          Complex Ie = (conjz(z6) * *I3 - *I4) / (conjz(z6) - z6);
          Complex Cm = (one - Real(2) * z6) / pi() * pplus;
          Complex Ce = Real(169) * sqrt(Real(13)) / Real(48) * (one + z6) * gauss_sum(eps.pow(2)).embed();
          Complex rhs1 = Real(13) * pi() * pi() * sqrt(Real(13)) / Real(48) * Cm * Ib / Ce;
          r.close("analytic.twisted_product",
                  "L(f_eps,2) L(f_eps,eps^3,1) = (13 pi^2 tau(eps^3)/48) C_merel int_{gamma_epsbar^-} eta(x,y) / C_etaxy",
                  L2 * Ltw, rhs1, 1e-8, "twisted value from the level 169 twist");
          Complex r3 = Real(4) * pi() * (z6 - one) * conjz(*Lp), r4 = -Real(4) * pi() * z6 * *Lp;
          r.close("analytic.eta_epsbar", "int_{gamma_epsbar^-} eta(x,y) = 4 pi (z6 - 1) L'(f_epsbar, 0)", Ib,
                  r3, 1e-8);
          r.close("analytic.eta_eps", "int_{gamma_eps^-} eta(x,y) = -4 pi z6 L'(f_eps, 0)", Ie, r4, 1e-8);
          r.close("analytic.eta_epsbar.sign_corrected", "int_{gamma_epsbar^-} eta(x,y) = -4 pi (z6 - 1) L'(f_epsbar, 0)",
                  Ib, -r3, 1e-8);
          r.close("analytic.eta_eps.sign_corrected", "int_{gamma_eps^-} eta(x,y) = 4 pi z6 L'(f_eps, 0)", Ie, -r4,
                  1e-8);
        });

  stage(r, "final",
        {"final.identity", "final.triple_hH", "final.triple_xy", "final.triple_consistency",
         "final.triple.sign_corrected"},
        [&] {
          Real m = need(mP, "m(P)");
          Real L = 4 * re(need(Lp, "L'(f_eps, 0)"));  // 2 L'(f, 0), f = f_eps + f_epsbar
          r.close("final.identity", "m(P) = 2 L'(f, 0)", Complex(m, 0), Complex(L, 0), 1e-10);
          Real ehH = integrate_eta_pair(need(cycle, "the Deninger cycle")) / twopi;
          Real exy = (need(I4, "int_{gamma_4} eta(x,y)") - need(I3, "int_{gamma_3} eta(x,y)")) / twopi;
          r.close("final.triple_hH", "m(P) = (1/2pi) int_{gamma_P} eta(h,H)", Complex(m, 0),
                  Complex(ehH, 0), 1e-8);
          r.close("final.triple_xy", "m(P) = (1/2pi) int_{W13 gamma_P} eta(x,y), W13 gamma_P = gamma_4 - gamma_3",
                  Complex(m, 0), Complex(exy, 0), 1e-8);
          r.close("final.triple_consistency", "(1/2pi) int_{gamma_P} eta(h,H) = (1/2pi) int_{W13 gamma_P} eta(x,y)",
                  Complex(ehH, 0), Complex(exy, 0), 1e-8);
          r.close("final.triple.sign_corrected", "m(P) = -(1/2pi) int_{W13 gamma_P} eta(x,y)", Complex(m, 0),
                  Complex(-exy, 0), 1e-8);
        });
}

// ---------------------------------------------------------------- level 16

void run_verify16(const ScenarioConfig& cfg, Report& r) {
  const int D = clamp_digits(cfg.digits);
  const auto P = LaurentPoly2::parse(kP16);
  std::optional<Real> m;
  std::optional<Complex> Lf;

  stage(r, "q16", {"q16.minpoly", "q16.expansion"}, [&] {
    auto us = qproduct_expand(yang_u(16), 8), vs = qproduct_expand(yang_v(16), 8);
    r.exact("q16.expansion", "u = q + O(q^2), v = q + O(q^2)",
            us.valuation() == 1 && us[1] == 1 && vs.valuation() == 1 && vs[1] == 1);
    BigInt res = verify_min_poly(P, yang_u(16), yang_v(16), cfg.qmax);
    r.exact("q16.minpoly", "P16(u, v) = 0 through q^" + std::to_string(cfg.qmax), res == 0, Complex(to_real(res), 0));
  });
  stage(r, "torus16", {"torus16.census"}, [&] {
    std::string det;
    auto got = torus_census(torus_nonvanishing(P, D), &det);
    std::set<std::string> want{key_of(0, 1, 0, 1), key_of(0, 1, 1, 4), key_of(0, 1, 3, 4), key_of(1, 2, 1, 2)};
    r.exact("torus16.census", "torus zeros of P16 are (1,1), (1,i), (1,-i), (-1,-1)", got == want, Complex(0, 0),
            Complex(0, 0), det);
  });
  stage(r, "mahler16", {"mahler16.m"}, [&] {
    auto res = mahler_bivariate(P, mahler_opts(cfg, D));
    m = res.value;
    estimate(r, "mahler16.m", "m(P16) by quadrature", res.value, res.error_estimate, pow10(-(D - 8)));
  });
  stage(r, "lfun16", {"eigen16.gaussian_integers", "lfun16.w", "lfun16.functional_equation"}, [&] {
    SymbolSpace sp(16);
    auto chi = DirichletChar::make(16, {{5, CycNum::zeta(4)}, {15, CycNum(1)}});
    long B = cfg.coeff_bound ? cfg.coeff_bound : lfun_bound(16, D);
    auto es = cached_eigensystem(sp, chi, B, cfg.cache_dir);
    bool zi = true;
    std::ostringstream os;
    for (long n = 1; n <= B; ++n) {
      const CycNum& x = es.an[n];
      zi = zi && 4 % x.order() == 0;
      for (const auto& q : x.coeffs()) zi = zi && denominator(q) == 1;
      if (n <= 8) os << "a" << n << " = " << x.to_string() << "; ";
    }
    r.exact("eigen16.gaussian_integers", "the newform with character of order 4 has coefficients in Z[i]", zi,
            Complex(0, 0), Complex(0, 0), chi.describe() + "; " + os.str());
    auto a = es.embed();
    auto pe = fricke_pseudo_eigenvalue(a, conj_all(a), 16, D);
    r.close("lfun16.w", "pseudo-eigenvalue at two heights agree", Complex(pe.height_gap, 0), Complex(0, 0),
            pow10(-(D - 10)), "w = " + fmt(pe.w, 20));
    LDatum F = make_ldatum(16, a, pe.w);
    r.close("lfun16.functional_equation", "split-point independence of Lambda(f, s)", Complex(fe_residual(F, D), 0),
            Complex(0, 0), 1e-12);
    Lf = Real(2) * re(completed_lambda(F, 0, 0, D).value);
  });
  stage(r, "identity16", {"identity16"}, [&] {
    r.close("identity16", "m(P16) = L'(f16, 0), f16 the trace of the Z[i] newform", Complex(need(m, "m(P16)"), 0),
            need(Lf, "L'(f16, 0)"), 1e-8);
  });
}

// ---------------------------------------------------------------- level 18

void run_verify18(const ScenarioConfig& cfg, Report& r) {
  const int D = clamp_digits(cfg.digits);
  const auto P = LaurentPoly2::parse(kP18);
  const DirichletChar psi = DirichletChar::make(3, {{2, CycNum(-1)}});
  std::optional<Real> m;
  std::optional<Complex> dL;

  stage(r, "q18", {"q18.minpoly"}, [&] {
    BigInt res = verify_min_poly(P, yang_u(18), yang_v(18), cfg.qmax);
    r.exact("q18.minpoly", "P18(u, v) = 0 through q^" + std::to_string(cfg.qmax), res == 0, Complex(to_real(res), 0));
  });
  stage(r, "torus18", {"torus18.census", "torus18.cusps"}, [&] {
    std::string det;
    auto got = torus_census(torus_nonvanishing(P, D), &det);
    std::set<std::string> want{key_of(0, 1, 0, 1), key_of(0, 1, 1, 2), key_of(1, 2, 0, 1),
                               key_of(1, 2, 1, 2), key_of(2, 6, 1, 6), key_of(-2, 6, -1, 6)};
    r.exact("torus18.census", "torus zeros (1,+-1), (-1,+-1), (z6^2, z6), (z6bar^2, z6bar)", got == want,
            Complex(0, 0), Complex(0, 0), det);
    auto u = UnitMonomial::from_yang(yang_u(18)), v = UnitMonomial::from_yang(yang_v(18));
    bool ok = true;
    std::ostringstream os;
    for (long s : {1L, -1L}) {
      Complex cu = cusp_value(u, Cusp::make(s, 6), D), cv = cusp_value(v, Cusp::make(s, 6), D);
      auto su = snap_root_of_unity(cu, pow10(-(D - 8))), sv = snap_root_of_unity(cv, pow10(-(D - 8)));
      ok = ok && su && sv && root_key(*su) == root_key(RootOfUnity{2 * s, 6}) &&
           root_key(*sv) == root_key(RootOfUnity{s, 6});
      os << "(u, v)(" << s << "/6) = (" << fmt(cu, 12) << ", " << fmt(cv, 12) << ") ";
    }
    r.exact("torus18.cusps", "(u, v)(1/6) = (z6^2, z6) and (u, v)(-1/6) = (z6bar^2, z6bar)", ok, Complex(0, 0),
            Complex(0, 0), os.str());
  });
  stage(r, "mahler18", {"mahler18.m"}, [&] {
    auto res = mahler_bivariate(P, mahler_opts(cfg, D));
    m = res.value;
    estimate(r, "mahler18.m", "m(P18) by quadrature", res.value, res.error_estimate, pow10(-(D - 8)));
  });
  stage(r, "lfun18", {"lfun18.L0", "lfun18.Lm1", "lfun18.hurwitz_orders"}, [&] {
    r.close("lfun18.L0", "L(psi, 0) = 1/3", dirichlet_L(psi, 0), Complex(Real(1) / 3, 0), pow10(-(D - 4)));
    r.close("lfun18.Lm1", "L(psi, -1) = 0", dirichlet_L(psi, -1), Complex(0, 0), pow10(-(D - 4)));
    dL = dirichlet_L_deriv(psi, -1);
    Complex alt(0, 0);
    for (long a : {1L, 2L}) {
      Real x = Real(a) / 3;
      alt += psi.value(a) * (hurwitz_zeta(-1, x, 1, 40, 30) - log(Real(3)) * hurwitz_zeta(-1, x, 0, 40, 30));
    }
    alt *= Real(3);
    r.close("lfun18.hurwitz_orders", "L'(psi, -1) with Euler-Maclaurin orders (30, 25) and (40, 30)", *dL, alt,
            pow10(-(D - 4)));
  });
  stage(r, "identity18", {"identity18"}, [&] {
    r.close("identity18", "m(P18) = 2 L'(psi, -1)", Complex(need(m, "m(P18)"), 0), Real(2) * need(dL, "L'(psi,-1)"),
            1e-8);
  });
  stage(r, "zudilin18", {"zudilin18.ladder", "zudilin18.eta"}, [&] {
    const Complex& d = need(dL, "L'(psi,-1)");
    // L(F, 2) = -(2 pi^2/9) L'(W18 F, 0), W18 F = -36 E2^psi; L'(E2^psi, 0) by its own Mellin transform
    DirichletChar psi9 = DirichletChar::make(9, {{2, CycNum(-1)}});
    long B = lfun_bound(9, D, 4);
    auto e = eisenstein_e2_psi(psi9, B);
    auto pe = fricke_pseudo_eigenvalue(e, e, 9, D);
    LDatum E = make_ldatum(9, e, pe.w);
    E.growth = 4;
    Complex dE = completed_lambda(E, 0, 0, D).value;
    r.close("zudilin18.ladder", "L'(E2^psi, 0) from its Mellin transform = L(psi, 0) L'(psi, -1)", dE, d / Real(3),
            1e-8, "W9 E2^psi = " + fmt(pe.w, 8) + " E2^psi");
    Complex LF2 = -Real(2) * pi() * pi() / Real(9) * Real(-36) * dE;
    auto u = UnitMonomial::from_yang(yang_u(18)), v = UnitMonomial::from_yang(yang_v(18));
    auto I = eta_geodesic(u, v, Cusp::make(-1, 6), Cusp::make(1, 6), D);
    r.close("zudilin18.eta", "int_{-1/6}^{1/6} eta(u, v) = L(F, 2)/(4 pi)", Complex(I.value, 0), LF2 / (4 * pi()),
            1e-8, "quadrature error " + fmt(I.error, 3));
  });
}

// ---------------------------------------------------------------- level 25

void run_verify25(const ScenarioConfig& cfg, Report& r) {
  const int D = clamp_digits(cfg.digits);
  const auto P = LaurentPoly2::parse(kP25);
  const DirichletChar psi = DirichletChar::make(5, {{2, CycNum::zeta(4)}});
  const DirichletChar eps = DirichletChar::make(25, {{2, CycNum::zeta(5)}});
  std::optional<Real> m;
  std::optional<Eigensystem> es;

  stage(r, "q25", {"q25.minpoly"}, [&] {
    BigInt res = verify_min_poly(P, yang_u(25), yang_v(25), cfg.qmax);
    r.exact("q25.minpoly", "P25(u, v) = 0 through q^" + std::to_string(cfg.qmax), res == 0, Complex(to_real(res), 0));
  });
  stage(r, "torus25", {"torus25.census", "cusp25.values"}, [&] {
    std::string det;
    auto got = torus_census(torus_nonvanishing(P, D), &det);
    std::set<std::string> want;
    for (long k = 1; k <= 4; ++k) want.insert(key_of(k, 5, 2 * k + 5, 10));
    r.exact("torus25.census", "torus zeros are (zeta, -zeta), zeta a primitive 5th root of unity", got == want,
            Complex(0, 0), Complex(0, 0), det);
    auto u = UnitMonomial::from_yang(yang_u(25)), v = UnitMonomial::from_yang(yang_v(25));
    // u(a/5) = zeta5^k = -v(a/5)
    const std::pair<long, long> table[] = {{1, 2}, {-1, -2}, {2, 1}, {-2, -1}};
    bool ok = true;
    std::ostringstream os;
    for (auto [a, k] : table) {
      Complex cu = cusp_value(u, Cusp::make(a, 5), D), cv = cusp_value(v, Cusp::make(a, 5), D);
      auto su = snap_root_of_unity(cu, pow10(-(D - 8))), sv = snap_root_of_unity(cv, pow10(-(D - 8)));
      ok = ok && su && sv && su->exact() == CycNum::zeta(5, k) && sv->exact() == -CycNum::zeta(5, k);
      os << "u(" << a << "/5) = " << (su ? su->exact().to_string() : fmt(cu, 10)) << ", v = "
         << (sv ? sv->exact().to_string() : fmt(cv, 10)) << "; ";
    }
    r.exact("cusp25.values", "u(1/5) = z5^2 = -v(1/5), u(-1/5) = z5^-2, u(2/5) = z5 = -v(2/5), u(-2/5) = z5^-1", ok,
            Complex(0, 0), Complex(0, 0), os.str());
  });
  stage(r, "mahler25", {"mahler25.m"}, [&] {
    auto res = mahler_bivariate(P, mahler_opts(cfg, D));
    m = res.value;
    estimate(r, "mahler25.m", "m(P25) by quadrature", res.value, res.error_estimate, pow10(-(D - 8)));
  });
  stage(r, "eigen25", {"eigen25.traces", "w25f.integral"}, [&] {
    SymbolSpace sp(25);
    long B = cfg.coeff_bound ? cfg.coeff_bound : std::max(lfun_bound(25, D), 50L);
    es = cached_eigensystem(sp, eps, B, cfg.cache_dir);
    CycNum z = CycNum::zeta(5);
    CycNum lamp = CycNum(2) + z + CycNum(2) * pow(z, 3);  // 2 + z5 + 2 z5^-2
    const long expect[] = {1, 1, -1, -1, -3, 0, 0, 0, -2, 3, 4};
    bool ok = true;
    std::ostringstream os;
    for (long n = 1; n <= 11; ++n) {
      Rational c = (lamp * es->an[n]).lift(5).trace() / 5;
      ok = ok && c == expect[n - 1];
      os << c.str() << (n < 11 ? "," : "");
    }
    r.exact("eigen25.traces", "f = (1/5) Tr((2 + z5 + 2 z5^-2) f_1) = q + q^2 - q^3 - q^4 - 3q^5 - 2q^9 + 3q^10 + 4q^11",
            ok, Complex(0, 0), Complex(0, 0), os.str());
    CycNum lam = CycNum(2) * z + pow(z, 4) + CycNum(2) * pow(z, 3);  // 2 z5 + z5^-1 + 2 z5^-2
    auto e1 = eisenstein_e2_pair_exact(psi.conj(), psi, 50);  // sum m psibar(m) psi(n) q^{mn}
    auto e2 = eisenstein_e2_pair_exact(psi, psi.conj(), 50);
    CycNum i = CycNum::zeta(4);
    bool integral = true;
    std::ostringstream co;
    for (long n = 1; n <= 50; ++n) {
      CycNum c = CycNum((lam * es->an[n]).lift(5).trace() * -10) - CycNum(25) * (CycNum(1) + i) * e1[n] -
                 CycNum(25) * (CycNum(1) - i) * e2[n];
      bool isint = c.is_rational() && denominator(c.to_rational()) == 1;
      integral = integral && isint;
      if (n <= 10) co << (c.is_rational() ? c.to_rational().str() : c.to_string()) << " ";
    }
    r.exact("w25f.integral",
            "W25 F = -10 Tr(lambda f_1) - 25(1+i) E2^{psi,psibar} - 25(1-i) E2^{psibar,psi} has integral coefficients, "
            "n <= 50",
            integral, Complex(0, 0), Complex(0, 0), "first coefficients " + co.str());
  });
  stage(r, "identity25", {"lfun25.functional_equation", "identity25"}, [&] {
    const auto& E = need(es, "the level 25 eigenform");
    CycNum z = CycNum::zeta(5);
    CycNum lamp = CycNum(2) + z + CycNum(2) * pow(z, 3);
    Complex Lf(0, 0);
    Real fe = 0;
    std::ostringstream ws;
    for (long a = 1; a < 5; ++a) {
      std::vector<Complex> an(E.an.size());
      for (size_t n = 0; n < an.size(); ++n) an[n] = E.an[n].galois(a).embed();
      auto pe = fricke_pseudo_eigenvalue(an, conj_all(an), 25, D);
      LDatum F = make_ldatum(25, an, pe.w);
      fe = std::max(fe, fe_residual(F, D));
      ws << "w_" << a << " = " << fmt(pe.w, 12) << "; ";
      Lf += lamp.galois(a).embed() * completed_lambda(F, 0, 0, D).value;
    }
    Lf /= Real(5);
    r.close("lfun25.functional_equation", "split-point independence for the four conjugate newforms",
            Complex(fe, 0), Complex(0, 0), 1e-12, ws.str());
    Complex i(0, 1), one(1, 0);
    Complex rhs = Lf + (one + Real(2) * i) / Real(5) * dirichlet_L_deriv(psi.conj(), -1) +
                  (one - Real(2) * i) / Real(5) * dirichlet_L_deriv(psi, -1);
    r.close("identity25", "m(P25) = L'(f,0) + ((1+2i)/5) L'(psibar,-1) + ((1-2i)/5) L'(psi,-1)",
            Complex(need(m, "m(P25)"), 0), rhs, 1e-6, "L'(f, 0) = " + fmt(Lf, 20));
  });
}

Report run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  Report r;
  r.meta["scenario"] = cfg.scenario;
  r.meta["precision"] = std::to_string(cfg.digits);
  r.meta["precision_effective"] = std::to_string(clamp_digits(cfg.digits));
  r.meta["qmax"] = std::to_string(cfg.qmax);
  r.meta["nodes"] = std::to_string(cfg.nodes);
  r.meta["coeff_bound"] = cfg.coeff_bound ? std::to_string(cfg.coeff_bound) : "auto";
  r.meta["numeric_type"] = "float128";
  auto t0 = std::chrono::steady_clock::now();
  auto want = [&](const char* s) { return cfg.scenario == s || cfg.scenario == "all"; };
  if (want("verify13")) run_verify13(cfg, r);
  if (want("verify16")) run_verify16(cfg, r);
  if (want("verify18")) run_verify18(cfg, r);
  if (want("verify25")) run_verify25(cfg, r);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << secs;
  r.meta["seconds"] = os.str();
  return r;
}

}  // namespace mahlerlab
