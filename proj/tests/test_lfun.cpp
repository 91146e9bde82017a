#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>

#include "mahlerlab/lfun.hpp"
#include "mahlerlab/modsym.hpp"
#include "mahlerlab/units.hpp"

using namespace mahlerlab;

namespace {

Real dist(const Complex& a, const Complex& b) { return absz(a - b); }

// eta(z)^2 eta(11z)^2, the level 11 newform
std::vector<Complex> form11(long B) {
  std::vector<BigInt> c(B + 1, BigInt(0));
  c[1] = 1;  // q * prod
  for (long n = 1; n <= B; ++n) {
    for (long step : {n, 11 * n}) {
      if (step > B) continue;
      for (int rep = 0; rep < 2; ++rep)
        for (long i = B; i >= step; --i) c[i] -= c[i - step];
    }
  }
  std::vector<Complex> a(B + 1);
  for (long n = 0; n <= B; ++n) a[n] = Complex(to_real(c[n]), 0);
  return a;
}

DirichletChar eps13() { return DirichletChar::make(13, {{2, CycNum::zeta(6)}}); }

const SymbolSpace& space13() {
  static SymbolSpace sp(13);
  return sp;
}

}  // namespace

TEST_SUITE("lfun") {
  TEST_CASE("Hurwitz zeta against closed forms") {
    CHECK(boost::multiprecision::abs(hurwitz_zeta(-1, 1) + Real(1) / 12) < pow10(-30));
    Real z2 = hurwitz_zeta(2, 1);
    CHECK(boost::multiprecision::abs(z2 - pi() * pi() / 6) < pow10(-30));
    // Lerch: zeta'(0, x) = log Gamma(x) - log(2 pi)/2
    for (Real x : {Real(1) / 3, Real(0.7), Real(2.25)}) {
      Real lhs = hurwitz_zeta(0, x, 1);
      Real rhs = boost::math::lgamma(x) - log(2 * pi()) / 2;
      CHECK(boost::multiprecision::abs(lhs - rhs) < pow10(-29));
    }
    // zeta(s, x) - zeta(s, x + 1) = x^-s, and its s-derivative
    for (Real s : {Real(-1), Real(-0.5), Real(1.5)}) {
      Real x = Real(0.4);
      CHECK(boost::multiprecision::abs(hurwitz_zeta(s, x) - hurwitz_zeta(s, x + 1) - pow(x, -s)) < pow10(-29));
      CHECK(boost::multiprecision::abs(hurwitz_zeta(s, x, 1) - hurwitz_zeta(s, x + 1, 1) + log(x) * pow(x, -s)) <
            pow10(-29));
    }
    // two Euler-Maclaurin orders
    for (Real x : {Real(1) / 18, Real(5) / 18, Real(0.9)}) {
      CHECK(boost::multiprecision::abs(hurwitz_zeta(-1, x, 1) - hurwitz_zeta(-1, x, 1, 40, 30)) < pow10(-30));
    }
    CHECK_THROWS_AS(hurwitz_zeta(1, Real(0.5)), Error);
  }

  TEST_CASE("Dirichlet L-values") {
    auto chi4 = DirichletChar::make(4, {{3, CycNum(-1)}});
    CHECK(dist(dirichlet_L(chi4, 1), Complex(pi() / 4, 0)) < pow10(-30));
    auto chi3 = DirichletChar::make(3, {{2, CycNum(-1)}});
    // odd character: L(chi, -1) = 0, and m(1 + x + y) = L'(chi_-3, -1)
    CHECK(absz(dirichlet_L(chi3, -1)) < pow10(-30));
    Complex d3 = dirichlet_L_deriv(chi3, -1);
    CHECK(dist(d3, Complex(Real("0.32306594721945051409"), 0)) < pow10(-19));
    CHECK(dist(d3, dirichlet_L(chi3, 2) * Real(3) * sqrt(Real(3)) / (4 * pi())) < pow10(-29));
    // derivative against a central difference
    Real h = pow10(-9);
    for (auto chi : {chi4, DirichletChar::make(5, {{2, CycNum::zeta(4)}})}) {
      Complex fd = (dirichlet_L(chi, Real(-1) + h) - dirichlet_L(chi, Real(-1) - h)) / (2 * h);
      CHECK(dist(fd, dirichlet_L_deriv(chi, -1)) < pow10(-15));
      // conjugate character, conjugate value
      CHECK(dist(conjz(dirichlet_L_deriv(chi, -1)), dirichlet_L_deriv(chi.conj(), -1)) < pow10(-30));
    }
    // even characters: exact L(chi, 2)
    auto psi = eps13().pow(3);
    CycNum exact = gauss_sum(psi) * bernoulli2_sum(psi) * CycNum(Rational(1, 13));
    CHECK(dist(dirichlet_L(psi, 2), exact.embed() * pi() * pi()) < pow10(-29));
  }

  TEST_CASE("level 11 newform") {
    auto an = form11(120);
    CHECK(an[2] == Complex(-2, 0));
    CHECK(an[5] == Complex(1, 0));
    auto pe = fricke_pseudo_eigenvalue(an, an, 11);
    CHECK(dist(pe.w, Complex(-1, 0)) < pow10(-26));
    auto f = make_ldatum(11, an, pe.w);
    CHECK(dist(l_value(f, 1), Complex(Real("0.25384186085591068434"), 0)) < pow10(-19));
    // independence of the split point
    for (Real s : {Real(0), Real(0.5), Real(1.3)}) {
      Complex a = completed_lambda(f, s, 0, 30, 1).value, b = completed_lambda(f, s, 0, 30, Real(1.2)).value;
      CHECK(dist(a, b) < pow10(-27));
    }
    // symmetric about s = 1
    CHECK(absz(completed_lambda(f, 1, 1).value) < pow10(-26));
    // derivative against a central difference
    Real h = pow10(-9);
    Complex fd = (completed_lambda(f, Real(0.5) + h).value - completed_lambda(f, Real(0.5) - h).value) / (2 * h);
    CHECK(dist(fd, completed_lambda(f, Real(0.5), 1).value) < pow10(-15));
    // too few coefficients
    CHECK_THROWS_AS(completed_lambda(make_ldatum(11, form11(20), pe.w), 0), Error);
  }

  TEST_CASE("level 13 pseudo-eigenvalue") {
    auto es = hecke_eigensystem(space13(), eps13(), 120);
    auto an = es.embed();
    std::vector<Complex> cn(an.size());
    for (size_t n = 0; n < an.size(); ++n) cn[n] = conjz(an[n]);
    auto pe = fricke_pseudo_eigenvalue(an, cn, 13);
    CHECK(dist(pe.w, Complex(-0.96425, 0.26501)) < 1e-5);
    CycNum z6 = CycNum::zeta(6);
    Complex closed = ((CycNum(3) * z6 - CycNum(4)) * gauss_sum(eps13())).embed() / Real(13);
    CHECK(dist(pe.w, closed) < pow10(-25));
    CycNum t = gauss_sum(eps13().pow(2)) * gauss_sum(eps13());
    CHECK(dist(t.embed(), (CycNum(4) * z6 - CycNum(3)).embed() * sqrt(Real(13))) < pow10(-28));
    auto f = make_ldatum(13, an, pe.w);
    Complex a = completed_lambda(f, 0, 0, 30, 1).value, b = completed_lambda(f, 0, 0, 30, Real(1.2)).value;
    CHECK(dist(a, b) < pow10(-26));
    // the conjugate form gives the conjugate value
    auto g = make_ldatum(13, cn, conjz(pe.w));
    CHECK(dist(conjz(l_deriv_at_zero(f)), l_deriv_at_zero(g)) < pow10(-28));
  }

  TEST_CASE("differential fit at level 13") {
    auto es = hecke_eigensystem(space13(), eps13(), 120);
    auto an = es.embed();
    std::vector<Complex> cn(an.size());
    for (size_t n = 0; n < an.size(); ++n) cn[n] = conjz(an[n]);
    auto pe = fricke_pseudo_eigenvalue(an, cn, 13);
    auto ce = curve_qexpansions13(40);
    auto fit = fit_differential(ce, cn, pe.w, 35);
    MESSAGE("alpha = " << fmt(fit.alpha, 8) << " beta = " << fmt(fit.beta, 8) << " res " << fmt(fit.residual, 3));
    CHECK(fit.residual < pow10(-25));
  }

  TEST_CASE("L-function of sigma(n) psi(n) factors") {
    auto psi9 = DirichletChar::make(9, {{2, CycNum(-1)}});
    auto psi3 = DirichletChar::make(3, {{2, CycNum(-1)}});
    auto e = eisenstein_e2_psi(psi9, 200);
    auto pe = fricke_pseudo_eigenvalue(e, e, 9);
    CHECK(dist(pe.w, Complex(-1, 0)) < pow10(-20));
    LDatum E = make_ldatum(9, e, pe.w);
    E.growth = 4;
    Complex lhs = l_value(E, 2);
    CHECK(dist(lhs, dirichlet_L(psi3, 2) * dirichlet_L(psi3, 1)) < 1e-10);
  }

  TEST_CASE("Eisenstein coefficients") {
    auto psi = DirichletChar::make(5, {{2, CycNum::zeta(4)}});
    auto e = eisenstein_e2_pair_exact(psi.conj(), psi, 30);
    // multiplicative, a_p = psi(p) + p psibar(p)
    for (long p : {2L, 3L, 7L, 11L}) CHECK(e[p] == psi(p) + CycNum(p) * psi.conj()(p));
    CHECK(e[6] == e[2] * e[3]);
    CHECK(e[5].is_zero());
    auto chi3 = DirichletChar::make(3, {{2, CycNum(-1)}});
    auto s = eisenstein_e2_psi(chi3, 12);
    CHECK(s[4] == Complex(7, 0));
    CHECK(s[2] == Complex(-3, 0));
    CHECK(s[3] == Complex(0, 0));
  }
}
