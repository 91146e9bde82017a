#include "mahlerlab/numeric.hpp"

#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>

namespace mahlerlab {

const Real& pi() {
  static const Real p = boost::multiprecision::float128(M_PIq);
  return p;
}

Real to_real(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);
  return to_real(n) / to_real(d);
}

Real to_real(const BigInt& n) {
  if (boost::multiprecision::abs(n) < (BigInt(1) << 100)) {
    BigInt hi = n >> 50;
    BigInt lo = n - (hi << 50);
    return Real(hi.convert_to<long long>()) * Real(1ULL << 50) + Real(lo.convert_to<long long>());
  }
  return Real(n.str());
}

Real pow10(int e) {
  Real r = 1, b = e < 0 ? Real(1) / 10 : Real(10);
  for (int k = e < 0 ? -e : e; k > 0; --k) r *= b;
  return r;
}

Real eps_for(int digits) { return pow10(-digits); }

int clamp_digits(int digits) {
  if (digits < 10) return 10;
  return digits > kMaxDigits ? kMaxDigits : digits;
}

Complex root_of_unity(long k, long n) {
  if (n <= 0) throw Error("root_of_unity: order must be positive");
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return Complex(1, 0);
  if (2 * k == n) return Complex(-1, 0);
  if (4 * k == n) return Complex(0, 1);
  if (4 * k == 3 * n) return Complex(0, -1);
  // reduce to the half-turn nearest zero for accuracy
  long kk = 2 * k > n ? k - n : k;
  Real t = 2 * pi() * Real(kk) / Real(n);
  return Complex(cos(t), sin(t));
}

Complex expi(const Real& theta) { return Complex(cos(theta), sin(theta)); }

Complex e2pii(const Complex& z) {
  Real r = exp(-2 * pi() * z.imag());
  Real t = 2 * pi() * (z.real() - floor(z.real()));
  return Complex(r * cos(t), r * sin(t));
}

namespace {

GaussRule build_rule(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  const Real tol = Real(1e-33);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Real x = cos(pi() * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
    Real dp = 0;
    for (int it = 0; it < 100; ++it) {
      Real p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      Real pn = n == 0 ? Real(1) : (n == 1 ? x : p1);
      Real pnm1 = n == 1 ? Real(1) : p0;
      dp = n * (x * pn - pnm1) / (x * x - 1);
      Real dx = pn / dp;
      x -= dx;
      if (abs(dx) < tol) {
        // one more step for the last bit
        if (it > 2) break;
      }
    }
    Real p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    Real pnm1 = n == 1 ? Real(1) : p0;
    dp = n * (x * p1 - pnm1) / (x * x - 1);
    Real w = 2 / ((1 - x * x) * dp * dp);
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.x[n / 2] = 0;
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw Error("gauss_legendre: order must be positive");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

std::string fmt(const Real& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string fmt(const Complex& z, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << z.real() << (z.imag() < 0 ? " - " : " + ")
     << abs(z.imag()) << "i";
  return os.str();
}

}  // namespace mahlerlab
