#include "mahlerlab/poly1.hpp"

#include <algorithm>
#include <limits>

namespace mahlerlab {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long degree(const IntPoly& p) {
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) {
    if (p[i] != 0) return i;
  }
  return -1;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

IntPoly divexact(IntPoly a, const IntPoly& b0) {
  IntPoly b = b0;
  trim(a);
  trim(b);
  if (b.empty()) throw Error("divexact: division by zero polynomial");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw Error("divexact: inexact polynomial division");
  IntPoly q(a.size() - b.size() + 1);
  for (long i = static_cast<long>(a.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
    if (a[i] == 0) continue;
    BigInt r;
    BigInt c;
    divide_qr(a[i], b.back(), c, r);
    if (r != 0) throw Error("divexact: inexact polynomial division");
    long s = i - static_cast<long>(b.size()) + 1;
    q[s] = c;
    for (size_t j = 0; j < b.size(); ++j) a[s + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw Error("divexact: inexact polynomial division");
  trim(q);
  return q;
}

RatPoly to_rat(const IntPoly& p) {
  RatPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = Rational(p[i]);
  return r;
}

IntPoly primitive_part(const RatPoly& p0) {
  RatPoly p = p0;
  trim(p);
  if (p.empty()) return {};
  BigInt den = 1;
  for (const auto& c : p) den = lcm(den, denominator(c));
  IntPoly r(p.size());
  BigInt g = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    r[i] = numerator(p[i] * Rational(den));
    g = gcd(g, r[i]);
  }
  if (p.back() < 0) g = -g;
  for (auto& c : r) c /= g;
  return r;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rational c = a.back() / b.back();
      size_t s = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) a[s + j] -= c * b[j];
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    Rational l = a.back();
    for (auto& c : a) c /= l;
  }
  return a;
}

RatPoly derivative(const RatPoly& p) {
  if (p.size() <= 1) return {};
  RatPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(static_cast<long>(i));
  return r;
}

IntPoly squarefree_part(const IntPoly& p) {
  RatPoly rp = to_rat(p);
  trim(rp);
  if (rp.size() <= 1) return primitive_part(rp);
  RatPoly g = rat_gcd(rp, derivative(rp));
  IntPoly pp = primitive_part(rp);
  IntPoly gg = primitive_part(g);
  return primitive_part(to_rat(divexact(pp, gg)));
}

Complex horner(const CPoly& p, const Complex& z) {
  Complex acc(0, 0);
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) acc = acc * z + p[i];
  return acc;
}

Complex horner(const IntPoly& p, const Complex& z) {
  Complex acc(0, 0);
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) acc = acc * z + Complex(to_real(p[i]), 0);
  return acc;
}

CPoly to_complex(const IntPoly& p) {
  CPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = Complex(to_real(p[i]), 0);
  return r;
}

namespace {

// p(z) and p'(z) together
void eval_pd(const CPoly& p, const Complex& z, Complex& v, Complex& d) {
  v = Complex(0, 0);
  d = Complex(0, 0);
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) {
    d = d * z + v;
    v = v * z + p[i];
  }
}

}  // namespace

std::vector<Complex> polynomial_roots(const CPoly& coeffs, const std::vector<Complex>& initial) {
  CPoly p = coeffs;
  while (!p.empty() && p.back() == Complex(0, 0)) p.pop_back();
  if (p.empty()) throw Error("polynomial_roots: zero polynomial");
  std::vector<Complex> roots;
  size_t lo = 0;
  while (lo < p.size() && p[lo] == Complex(0, 0)) {
    roots.emplace_back(0, 0);
    ++lo;
  }
  p.erase(p.begin(), p.begin() + lo);
  long n = static_cast<long>(p.size()) - 1;
  if (n == 0) return roots;
  if (n == 1) {
    roots.push_back(-p[0] / p[1]);
    return roots;
  }
  std::vector<Complex> z(n);
  std::vector<Complex> init;
  for (const auto& r : initial) {
    if (r != Complex(0, 0)) init.push_back(r);
  }
  if (static_cast<long>(init.size()) == n) {
    // nudge coincident starts apart
    for (long k = 0; k < n; ++k) z[k] = init[k] * Complex(1, Real(1e-12) * (k + 1));
  } else {
    Real r = pow(absz(p[0]) / absz(p[n]), Real(1) / n);
    if (!(r > 0) || !isfinite(r)) r = 1;
    for (long k = 0; k < n; ++k) z[k] = r * expi(2 * pi() * (Real(k) + Real(0.25)) / n + Real(0.4));
  }
  const Real tol = Real(1e-31);
  const Real eps = std::numeric_limits<Real>::epsilon();
  std::vector<Real> mag(p.size());
  for (size_t i = 0; i < p.size(); ++i) mag[i] = absz(p[i]);
  std::vector<char> done(n, 0);
  for (int it = 0; it < 2000; ++it) {
    Real worst = 0;
    long active = 0;
    for (long k = 0; k < n; ++k) {
      if (done[k]) continue;
      Complex v, d;
      eval_pd(p, z[k], v, d);
      // |p(z)| at the rounding level of the evaluation: z[k] cannot improve
      Real az = absz(z[k]), bound = 0;
      for (long i = n; i >= 0; --i) bound = bound * az + mag[i];
      if (absz(v) <= 16 * eps * bound) {
        done[k] = 1;
        continue;
      }
      ++active;
      Complex ratio = v / d;
      Complex s(0, 0);
      for (long j = 0; j < n; ++j) {
        if (j != k) s += Real(1) / (z[k] - z[j]);
      }
      Complex w = ratio / (Real(1) - ratio * s);
      z[k] -= w;
      worst = std::max(worst, absz(w) / std::max(Real(1), absz(z[k])));
    }
    if (active == 0 || worst < tol) break;
  }
  for (long k = 0; k < n; ++k) {
    for (int it = 0; it < 3; ++it) {
      Complex v, d;
      eval_pd(p, z[k], v, d);
      if (d == Complex(0, 0)) break;
      Complex cand = z[k] - v / d;
      Complex v2, d2;
      eval_pd(p, cand, v2, d2);
      if (absz(v2) < absz(v)) z[k] = cand;
      else break;
    }
    roots.push_back(z[k]);
  }
  return roots;
}

}  // namespace mahlerlab
