#include "mahlerlab/lfun.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

namespace mahlerlab {

namespace {

using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

// Gamma(s, x), x > 0, 0 <= s
Real upper_gamma(const Real& s, const Real& x) {
  if (s == 0) return boost::math::expint(1, x);
  if (s == 1) return exp(-x);
  if (s == 2) return (1 + x) * exp(-x);
  return boost::math::tgamma(s, x);
}

Real two_pi() { return 2 * pi(); }

// exact B_{2j}, j = 0..J
const std::vector<Rational>& bernoulli_even(int J) {
  static std::vector<Rational> cache;
  if (static_cast<int>(cache.size()) > J) return cache;
  // B_m from sum_{k<m+1} C(m+1, k) B_k = 0
  int M = 2 * J + 2;
  std::vector<Rational> B(M + 1, Rational(0));
  B[0] = 1;
  for (int m = 1; m <= M; ++m) {
    Rational acc(0);
    BigInt c(1);  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      acc += Rational(c) * B[k];
      c = c * (m + 1 - k) / (k + 1);
    }
    B[m] = -acc / Rational(m + 1);
  }
  cache.clear();
  for (int j = 0; j <= J; ++j) cache.push_back(B[2 * j]);
  return cache;
}

}  // namespace

LDatum make_ldatum(long N, const std::vector<Complex>& an, const Complex& w) {
  LDatum d;
  d.level = N;
  d.a = an;
  d.b.resize(an.size());
  for (size_t n = 0; n < an.size(); ++n) d.b[n] = w * conjz(an[n]);
  return d;
}

Real lambda_tail_bound(const LDatum& f, long B, const Real& t) {
  // |a_n| <= growth n (1 + log n), x^{-s} Gamma(s, x) <= 2 e^{-x}/x for x >= 1, 0 <= s <= 2
  Real rN = sqrt(Real(f.level));
  Real tm = t < 1 ? t : Real(1) / t;
  Real step = two_pi() * tm / rN;
  Real n1 = B + 1;
  Real per = 2 * f.growth * (1 + log(n1)) * rN / (two_pi() * tm) * 2;
  Real q = exp(-step);
  if (step * n1 < 1) return Real(1e30);
  return 2 * per * exp(-step * n1) * (1 + n1) / ((1 - q) * (1 - q));
}

long lambda_terms_needed(long N, int digits, const Real& growth, const Real& t) {
  LDatum probe;
  probe.level = N;
  probe.growth = growth;
  Real target = pow10(-digits);
  long B = 1;
  while (lambda_tail_bound(probe, B, t) >= target) B = B < 64 ? B + 1 : B + B / 8;
  return B;
}

LValue completed_lambda(const LDatum& f, const Real& s, int k, int digits, const Real& t) {
  long B = f.bound();
  LValue out;
  out.tail = lambda_tail_bound(f, B, t);
  if (out.tail >= pow10(-digits))
    throw Error("completed L-function needs " + std::to_string(lambda_terms_needed(f.level, digits, f.growth, t)) +
                " coefficients, got " + std::to_string(B));
  Real rN = sqrt(Real(f.level));
  if (k == 0) {
    Complex acc(0, 0);
    for (long n = 1; n <= B; ++n) {
      Real x = two_pi() * n / rN;
      if (f.a[n] != Complex(0, 0)) acc += f.a[n] * pow(x, -s) * upper_gamma(s, x * t);
      if (f.b[n] != Complex(0, 0)) acc -= f.b[n] * pow(x, s - 2) * upper_gamma(2 - s, x / t);
    }
    out.value = acc;
    out.terms = B;
    return out;
  }
  if (k != 1) throw Error("derivative order must be 0 or 1");
  // Lambda'(s) = int_t^oo F(y) y^{s-1} log y dy + int_{1/t}^oo G(y) y^{1-s} log y dy,
  // F(y) = f(iy/sqrt N), G(y) = g(iy/sqrt N); the decay rate of F, G is 2 pi/sqrt N
  auto series = [&](const std::vector<Complex>& c, const Real& y) {
    Complex acc(0, 0);
    Real q = exp(-two_pi() * y / rN), qn = 1;
    for (long n = 1; n <= B; ++n) {
      qn *= q;
      if (qn < pow10(-digits - 6)) break;
      acc += c[n] * qn;
    }
    return acc;
  };
  Real ymax = (digits + 8) * std::log(10.0) * rN / two_pi() + 2;
  auto piece = [&](const std::vector<Complex>& c, const Real& y0, const Real& e) {
    Complex acc(0, 0);
    Real lo = y0;
    while (lo < ymax + y0) {
      Real hi = lo + Real(0.5);
      acc += gl_integrate([&](const Real& y) { return series(c, y) * pow(y, e) * log(y); }, lo, hi, 24);
      lo = hi;
    }
    return acc;
  };
  out.value = piece(f.a, t, s - 1) + piece(f.b, 1 / t, 1 - s);
  out.terms = B;
  return out;
}

Complex l_value(const LDatum& f, const Real& s, int digits) {
  if (s <= 0) throw Error("l_value needs s > 0");
  LValue L = completed_lambda(f, s, 0, digits);
  return L.value * pow(two_pi(), s) / (pow(sqrt(Real(f.level)), s) * boost::math::tgamma(s));
}

Complex l_deriv_at_zero(const LDatum& f, int digits) { return completed_lambda(f, Real(0), 0, digits).value; }

Complex qseries_eval(const std::vector<Complex>& an, const Complex& z, int digits) {
  Complex q = e2pii(z), qn(1, 0), acc(0, 0);
  Real stop = pow10(-digits - 4);
  for (size_t n = 1; n < an.size(); ++n) {
    qn *= q;
    acc += an[n] * qn;
    if (absz(qn) * n < stop) return acc;
  }
  if (absz(qn) * an.size() > pow10(-digits + 2)) {
    long need = static_cast<long>((digits + 4) * std::log(10.0) / (2 * std::acos(-1.0) * static_cast<double>(im(z)))) + 1;
    throw Error("q-series at height " + fmt(im(z), 4) + " needs about " + std::to_string(need) + " coefficients, got " +
                std::to_string(an.size() - 1));
  }
  return acc;
}

PseudoEigenvalue fricke_pseudo_eigenvalue(const std::vector<Complex>& an, const std::vector<Complex>& conj_an, long N,
                                          int digits) {
  auto at = [&](const Real& y) {
    Complex num = qseries_eval(an, Complex(0, 1 / (N * y)), digits);
    Complex den = qseries_eval(conj_an, Complex(0, y), digits);
    return num / (-Real(N) * y * y * den);
  };
  Real y1 = 1 / sqrt(Real(N));
  Complex w1 = at(y1), w2 = at(y1 * Real(1.1));
  PseudoEigenvalue out{w1, absz(w1 - w2)};
  if (out.height_gap > pow10(-(digits - 10)))
    throw Error("pseudo-eigenvalue differs between heights by " + fmt(out.height_gap, 5));
  return out;
}

Real hurwitz_zeta(const Real& s, const Real& x, int k, int K, int J) {
  if (s == 1) throw Error("Hurwitz zeta has a pole at s = 1");
  if (x <= 0) throw Error("Hurwitz zeta needs x > 0");
  const auto& Bn = bernoulli_even(J);
  Real acc = 0;
  for (int n = 0; n < K; ++n) {
    Real a = x + n;
    Real p = pow(a, -s);
    acc += k == 0 ? p : Real(-log(a) * p);
  }
  Real a = x + K, la = log(a);
  Real sm1 = s - 1;
  if (k == 0) {
    acc += pow(a, 1 - s) / sm1 + pow(a, -s) / 2;
  } else {
    acc += pow(a, 1 - s) * (-la / sm1 - 1 / (sm1 * sm1)) - la * pow(a, -s) / 2;
  }
  // sum_j B_2j / (2j)! (s)_{2j-1} a^{-s-2j+1}
  Real fact = 1;  // (2j)!
  for (int j = 1; j <= J; ++j) {
    fact *= Real(2 * j - 1) * (2 * j);
    Real c = to_real(Bn[j]) / fact;
    int m = 2 * j - 1;
    Real prod = 1, dprod = 0;
    for (int i = 0; i < m; ++i) {
      dprod = dprod * (s + i) + prod;
      prod *= s + i;
    }
    Real ap = pow(a, -s - m);
    acc += k == 0 ? Real(c * prod * ap) : Real(c * (dprod - prod * la) * ap);
  }
  return acc;
}

Complex dirichlet_L(const DirichletChar& chi, const Real& s) {
  long N = chi.modulus();
  Complex acc(0, 0);
  if (s == 1) {
    if (chi.is_trivial()) throw Error("L(chi, s) has a pole at s = 1 for trivial chi");
    for (long a = 1; a <= N; ++a)
      if (gcd_l(a, N) == 1) acc -= chi.value(a) * boost::math::digamma(Real(a) / N);
    return acc / Real(N);
  }
  for (long a = 1; a <= N; ++a)
    if (gcd_l(a, N) == 1) acc += chi.value(a) * hurwitz_zeta(s, Real(a) / N);
  return acc * pow(Real(N), -s);
}

Complex dirichlet_L_deriv(const DirichletChar& chi, const Real& s) {
  long N = chi.modulus();
  Complex z(0, 0), dz(0, 0);
  for (long a = 1; a <= N; ++a) {
    if (gcd_l(a, N) != 1) continue;
    z += chi.value(a) * hurwitz_zeta(s, Real(a) / N);
    dz += chi.value(a) * hurwitz_zeta(s, Real(a) / N, 1);
  }
  Real Ns = pow(Real(N), -s);
  return Ns * (dz - log(Real(N)) * z);
}

std::vector<Complex> eisenstein_e2_psi(const DirichletChar& psi, long B) {
  std::vector<Complex> a(B + 1, Complex(0, 0));
  for (long n = 1; n <= B; ++n) {
    if (gcd_l(n, psi.modulus()) != 1) continue;
    long sigma = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) sigma += d;
    a[n] = Real(sigma) * psi.value(n);
  }
  return a;
}

std::vector<CycNum> eisenstein_e2_pair_exact(const DirichletChar& chi1, const DirichletChar& chi2, long B) {
  std::vector<CycNum> a(B + 1, CycNum(0));
  for (long m = 1; m <= B; ++m)
    for (long n = 1; m * n <= B; ++n) a[m * n] += CycNum(m) * chi1(m) * chi2(n);
  return a;
}

std::vector<Complex> eisenstein_e2_pair(const DirichletChar& chi1, const DirichletChar& chi2, long B) {
  auto ex = eisenstein_e2_pair_exact(chi1, chi2, B);
  std::vector<Complex> a(B + 1);
  for (long n = 0; n <= B; ++n) a[n] = ex[n].embed();
  return a;
}

}  // namespace mahlerlab
