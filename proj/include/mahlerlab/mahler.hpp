#pragma once

#include <functional>
#include <vector>

#include "mahlerlab/bivar.hpp"

namespace mahlerlab {

// log|lead| + sum log max(1, |root|)
Real mahler_univariate(const CPoly& coeffs);
Real mahler_univariate(const IntPoly& coeffs);

struct MahlerResult {
  Real value = 0;
  Real error_estimate = 0;
  bool converged = false;
  int nodes = 0;                  // Gauss-Legendre order per panel at the final pass
  std::vector<Real> breakpoints;  // angles of torus zeros used as panel ends
};

struct MahlerOptions {
  int panels = 8;        // panels per interval between breakpoints
  int grading = 60;      // geometric refinement levels next to a breakpoint
  int start_nodes = 16;
  int max_nodes = 256;
  int digits = kDefaultDigits;
};

// m(P) = (1/2pi) int m(P(e^{it}, y)) dt
MahlerResult mahler_bivariate(const LaurentPoly2& P, const MahlerOptions& opt = {});

struct CycleNode {
  Real theta, weight;  // quadrature weight in theta
  Complex H, h;
};

// The root h(H) of P with |h| < 1 as H runs over the unit circle; `outer`
// is the variable playing the role of H.
struct TorusCycleSample {
  Var outer = Var::X;
  int panels = 0, order = 0;
  std::vector<CycleNode> nodes;  // increasing theta
  Real closure_defect = 0;
  Real worst_guard = 0;          // largest nearest/second-nearest ratio accepted
  Real max_inner_modulus = 0;    // max |h| over nodes
  int orientation = 1;           // theta increasing
};

TorusCycleSample track_deninger_cycle(const LaurentPoly2& P, Var outer, int panels = 16, int order = 32,
                                      int digits = kDefaultDigits);

// R(H, h) dH with R = num/den, both written in the variables (H, h)
struct RationalDifferential {
  LaurentPoly2 num, den;
};

Complex integrate_along_cycle(const TorusCycleSample& s, const RationalDifferential& w, Real pole_tol = Real(1e-12));
Complex integrate_along_cycle(const TorusCycleSample& s, const std::function<Complex(Complex, Complex)>& R);
// int eta(h, H) = int log|h| darg H - log|H| darg h over the sample
Real integrate_eta_pair(const TorusCycleSample& s);

}  // namespace mahlerlab
