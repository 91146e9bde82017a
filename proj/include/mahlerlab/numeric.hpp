#pragma once

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace mahlerlab {

using Real = boost::multiprecision::float128;
using Complex = boost::multiprecision::complex128;
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// binary128 carries a little under 34 significant digits
inline constexpr int kMaxDigits = 32;
inline constexpr int kDefaultDigits = 30;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const Real& pi();
Real to_real(const Rational& q);
Real to_real(const BigInt& n);
Real pow10(int e);
Real eps_for(int digits);  // 10^-digits
int clamp_digits(int digits);

// e^{2 pi i k / n}; exact real/imag parts for the easy denominators
Complex root_of_unity(long k, long n);
Complex expi(const Real& theta);
Complex e2pii(const Complex& z);  // exp(2 pi i z)

inline Real re(const Complex& z) { return z.real(); }
inline Real im(const Complex& z) { return z.imag(); }
inline Real absz(const Complex& z) { return boost::multiprecision::abs(z); }
inline Real norm2(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }
inline Complex conjz(const Complex& z) { return Complex(z.real(), -z.imag()); }

// Gauss-Legendre rule on [-1, 1], cached per order
struct GaussRule {
  std::vector<Real> x;
  std::vector<Real> w;
};
const GaussRule& gauss_legendre(int n);

// integrate f over [a, b] with an n-point rule
template <class F>
auto gl_integrate(F&& f, const Real& a, const Real& b, int n) -> decltype(f(a)) {
  const GaussRule& r = gauss_legendre(n);
  Real h = (b - a) / 2, m = (a + b) / 2;
  decltype(f(a)) acc = f(m) * Real(0);
  for (int i = 0; i < n; ++i) acc += f(m + h * r.x[i]) * r.w[i];
  return acc * h;
}

std::string fmt(const Real& x, int digits = 20);
std::string fmt(const Complex& z, int digits = 20);

}  // namespace mahlerlab
