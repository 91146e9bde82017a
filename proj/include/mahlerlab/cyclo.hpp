#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mahlerlab/numeric.hpp"

namespace mahlerlab {

long gcd_l(long a, long b);
long lcm_l(long a, long b);
long mod_l(long a, long n);  // representative in [0, n)
long euler_phi(long n);
std::optional<long> inverse_mod(long a, long n);

// integer coefficients of the n-th cyclotomic polynomial, ascending
const std::vector<BigInt>& cyclotomic_poly(long n);

// Element of Q(zeta_n) in the power basis 1, z, ..., z^{phi(n)-1}.
class CycNum {
 public:
  CycNum();
  CycNum(long v);  // NOLINT: rationals convert implicitly on purpose
  CycNum(const Rational& v, long order = 1);
  CycNum(long order, std::vector<Rational> coeffs);

  static CycNum zeta(long n, long k = 1);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  CycNum lift(long new_order) const;
  CycNum galois(long k) const;  // zeta -> zeta^k, gcd(k, n) = 1
  CycNum conj() const { return galois(-1); }
  CycNum inverse() const;
  Rational trace() const;  // down to Q
  Rational norm() const;

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;
  Complex embed() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }
  CycNum operator-() const;
  CycNum& scale(const Rational& r);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  std::string to_string() const;

 private:
  long order_ = 1;
  std::vector<Rational> c_;
};

CycNum pow(CycNum x, long e);

// {k, n} with x = zeta_n^k and gcd(k, n) = 1, if x is a root of unity
std::optional<std::pair<long, long>> as_root_of_unity(const CycNum& x);

class DirichletChar {
 public:
  // assignments: (residue, root of unity); throws Error naming the conflict
  static DirichletChar make(long modulus, const std::vector<std::pair<long, CycNum>>& assignments);
  static DirichletChar trivial(long modulus);

  long modulus() const { return modulus_; }
  long order() const { return order_; }  // also the field order of the values
  bool is_even() const;
  bool is_trivial() const { return order_ == 1; }
  long conductor() const;
  bool is_primitive() const { return conductor() == modulus_; }

  // exponent e with chi(a) = zeta_order^e; nullopt on non-units
  std::optional<long> exponent(long a) const;
  CycNum operator()(long a) const;
  Complex value(long a) const;

  DirichletChar conj() const { return pow(-1); }
  DirichletChar pow(long k) const;
  friend DirichletChar operator*(const DirichletChar& a, const DirichletChar& b);
  friend bool operator==(const DirichletChar& a, const DirichletChar& b);

  std::string describe() const;
  const std::vector<long>& exponents() const { return exps_; }
  static DirichletChar from_exponents(long modulus, long order, std::vector<long> exps);

 private:
  long modulus_ = 1;
  long order_ = 1;
  std::vector<long> exps_;  // -1 on non-units, else exponent mod order_
};

std::vector<DirichletChar> all_characters(long modulus);

CycNum gauss_sum(const DirichletChar& chi);

Rational bernoulli2(const Rational& x);
// sum over a mod N of conj(chi)(a) B2(a/N)
CycNum bernoulli2_sum(const DirichletChar& chi);
// L(chi, 2) / pi^2 = tau(chi)/N * bernoulli2_sum(chi), exact
CycNum l2_over_pi2(const DirichletChar& chi);

}  // namespace mahlerlab
