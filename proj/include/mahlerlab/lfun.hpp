#pragma once

#include <vector>

#include "mahlerlab/cyclo.hpp"
#include "mahlerlab/numeric.hpp"

namespace mahlerlab {

// Weight-2 form f of level N with g = f | W_N, (f|W_N)(z) = f(-1/(Nz)) / (N z^2).
// Lambda(f, s) = N^{s/2} (2 pi)^{-s} Gamma(s) L(f, s) = -Lambda(g, 2 - s).
struct LDatum {
  long level = 1;
  std::vector<Complex> a;  // a[0] unused
  std::vector<Complex> b;  // coefficients of g
  // |a_n|, |b_n| <= growth * n^(1 + log n factor), used for tail bounds only
  Real growth = 2;
  long bound() const { return static_cast<long>(std::min(a.size(), b.size())) - 1; }
};

// g = w * conj(f)
LDatum make_ldatum(long N, const std::vector<Complex>& an, const Complex& w);

struct LValue {
  Complex value;
  Real tail = 0;  // bound on the omitted terms
  long terms = 0;
};

// Lambda (k = 0) or Lambda' (k = 1) at real s, Mellin integral split at y = t/sqrt(N).
// The result must not depend on t; that is the functional-equation test.
LValue completed_lambda(const LDatum& f, const Real& s, int k = 0, int digits = kDefaultDigits, const Real& t = 1);

// bound on the terms n > B of the split sum at s (0 <= s <= 2)
Real lambda_tail_bound(const LDatum& f, long B, const Real& t = 1);
// smallest B that brings that bound under 10^-digits
long lambda_terms_needed(long N, int digits, const Real& growth = 2, const Real& t = 1);

// L(f, s) = Lambda(f, s) (2 pi)^s / (N^{s/2} Gamma(s)), s > 0
Complex l_value(const LDatum& f, const Real& s, int digits = kDefaultDigits);
// L'(f, 0) = Lambda(f, 0) (trivial zero of weight 2)
Complex l_deriv_at_zero(const LDatum& f, int digits = kDefaultDigits);

// f(z) = sum a_n q^n
Complex qseries_eval(const std::vector<Complex>& an, const Complex& z, int digits = kDefaultDigits);

// w with f | W_N = w fbar, read off at y = 1/sqrt(N) and checked at a second height
struct PseudoEigenvalue {
  Complex w;
  Real height_gap = 0;  // disagreement between the two heights
};
PseudoEigenvalue fricke_pseudo_eigenvalue(const std::vector<Complex>& an, const std::vector<Complex>& conj_an,
                                          long N, int digits = kDefaultDigits);

// Hurwitz zeta zeta(s, x) (k = 0) or d/ds zeta(s, x) (k = 1) for real s != 1, x > 0,
// by Euler-Maclaurin after K direct terms with J Bernoulli corrections
Real hurwitz_zeta(const Real& s, const Real& x, int k = 0, int K = 30, int J = 25);

// L(chi, s) for real s (s = 1 through the digamma function), and L'(chi, s)
Complex dirichlet_L(const DirichletChar& chi, const Real& s);
Complex dirichlet_L_deriv(const DirichletChar& chi, const Real& s = -1);

// coefficients 0..B of E2^psi = sum sigma(n) psi(n) q^n
std::vector<Complex> eisenstein_e2_psi(const DirichletChar& psi, long B);
// E2^{chi1, chi2} = sum_{m, n} m chi1(m) chi2(n) q^{mn}; E2^{psi, psibar} in the level 25 identity is chi1 = psibar, chi2 = psi
std::vector<Complex> eisenstein_e2_pair(const DirichletChar& chi1, const DirichletChar& chi2, long B);
// same, exactly
std::vector<CycNum> eisenstein_e2_pair_exact(const DirichletChar& chi1, const DirichletChar& chi2, long B);

}  // namespace mahlerlab
