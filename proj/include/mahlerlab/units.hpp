#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mahlerlab/bivar.hpp"
#include "mahlerlab/modsym.hpp"
#include "mahlerlab/qseries.hpp"

namespace mahlerlab {

// q^k prod_{g in num} prod_{n = ±g mod N} (1 - q^n) / (same over den).
// Classes may repeat; g = -g mod N is not allowed.
struct YangProduct {
  long N = 1;
  long q_power = 0;
  std::vector<long> num, den;
  std::string describe() const;
};

// exact expansion known modulo O(q^prec)
QSeries<BigInt> qproduct_expand(const YangProduct& p, long prec);
// direct value of the product at z (any height; slow near the real line)
Complex qproduct_eval(const YangProduct& p, const Complex& z, int digits = kDefaultDigits);

// (a1, a2) mod N stands for the Siegel function g_{(a1/N, a2/N)}
using SiegelIndex = std::pair<long, long>;

// constant * prod g_a^{e_a}. The constant is only tracked exactly for units built from a
// YangProduct; after an SL2(Z) transport it is known up to a root of unity.
class UnitMonomial {
 public:
  long N = 1;
  std::map<SiegelIndex, long> exps;
  Complex constant{1, 0};
  bool phase_known = true;
  std::optional<YangProduct> yang;

  static UnitMonomial from_yang(const YangProduct& p, const Complex& constant = Complex(1, 0));
  // order at infinity in q, from the Siegel data
  Rational order_at_infinity() const;
  std::string describe() const;
};

// u o g, up to a constant of modulus one
UnitMonomial sl2_transform(const UnitMonomial& u, const Mat2& g);

struct CuspDivisor {
  long N = 1;
  std::vector<Cusp> cusps;      // gamma1_cusps(N)
  std::vector<Rational> order;  // in the local parameter at each cusp
  Rational at(const Cusp& c) const;
  bool is_zero() const;
};
CuspDivisor cusp_divisor(const UnitMonomial& u);

// the cusp <d> infinity of X1(N), i.e. the class of d/N (image of infinity under [[d, *], [N, *]])
Cusp diamond_infinity(long N, long d);

// Product of Yang factors (1 <= g < N/2) with the given divisor, scaled so that its
// leading coefficient at infinity is `lead`. Cusps not listed get order 0.
UnitMonomial unit_from_divisor(long N, const std::vector<std::pair<Cusp, Rational>>& target,
                               const Complex& lead = Complex(1, 0));

// log|u(w)| and u'(w)/u(w)
struct UnitValue {
  Real log_abs;
  Complex dlog;
};
// Evaluates several units of the same level at w. w is moved into the standard
// fundamental domain first, so the cost does not depend on Im w.
std::vector<UnitValue> eval_units(const std::vector<const UnitMonomial*>& us, const Complex& w,
                                  int digits = kDefaultDigits);

// value with its phase, straight from the product (needs phase_known)
Complex unit_value(const UnitMonomial& u, const Complex& w, int digits = kDefaultDigits);

// value at a cusp where u has order 0: u(g z) averaged over a period of the local
// parameter, which cancels every nonconstant term up to a high power
Complex cusp_value(const UnitMonomial& u, const Cusp& c, int digits = kDefaultDigits);

// eta(u, v) = log|u| darg v - log|v| darg u integrated along hyperbolic geodesics
struct EtaIntegral {
  Real value = 0;
  Real error = 0;  // change under panel refinement
  long evaluations = 0;
};
EtaIntegral eta_geodesic(const UnitMonomial& u, const UnitMonomial& v, const Complex& z0, const Complex& z1,
                         int digits = kDefaultDigits);
// from cusp p to cusp q; rejects cusps where the tame symbol is not of modulus one
EtaIntegral eta_geodesic(const UnitMonomial& u, const UnitMonomial& v, const Cusp& p, const Cusp& q,
                         int digits = kDefaultDigits);
// int_z^{g z} eta(u, v) for g in Gamma1(N), at z = (-d + i)/c
EtaIntegral eta_loop(const UnitMonomial& u, const UnitMonomial& v, const Mat2& g, int digits = kDefaultDigits);
// C-linear extension to a closed chain, through the loop basis
Complex eta_cycle(const UnitMonomial& u, const UnitMonomial& v, const Chain& closed, int digits = kDefaultDigits,
                  Real* error = nullptr);

// max |coefficient| of P(u(q), v(q)) through q^order
BigInt verify_min_poly(const LaurentPoly2& P, const YangProduct& u, const YangProduct& v, long order);
// same for units built from q-products with integer constants
BigInt verify_min_poly(const LaurentPoly2& P, const UnitMonomial& u, const UnitMonomial& v, long order);
// exact expansion of such a unit
QSeries<BigInt> unit_expand(const UnitMonomial& u, long prec);

// Yang pairs (u, v) parametrizing the curves at levels 16, 18, 25
YangProduct yang_u(long N);
YangProduct yang_v(long N);

// Level 13: x, y with divisors (0,1,1,-1,0,-1), (1,-1,1,1,-1,-1) on <d> infinity,
// d = 1..6, normalized x(inf) = 1 and leading coefficient -1 for y.
struct Level13Units {
  UnitMonomial x, y;
  YangProduct xp, yp;
};
Level13Units level13_units();

// Expansions at infinity of the pullbacks under W13 of omega and h*omega, where
// omega = ((h^2 - h) H - h^3 + h^2 + 2h - 1) / (h^4 - 2h^3 + 3h^2 - 2h + 1) dH
// and h o W13 = x, H o W13 = y. Entries are coefficients of dq/q.
struct CurveExpansions {
  QSeries<BigInt> x, y;
  QSeries<BigInt> omega, h_omega;
};
CurveExpansions curve_qexpansions13(long prec);

// (alpha, beta) with 2 pi i f dz = alpha omega + beta h omega, given w and the
// coefficients of fbar where f | W13 = w fbar. Matched on q^1, q^2, checked up to q^check.
struct DifferentialFit {
  Complex alpha, beta;
  Real residual = 0;  // max mismatch on q^3..q^check
};
DifferentialFit fit_differential(const CurveExpansions& ce, const std::vector<Complex>& fbar_an, const Complex& w,
                                 long check);

}  // namespace mahlerlab
