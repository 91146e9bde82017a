#include "mahlerlab/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mahlerlab {

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return a / gcd_l(a, b) * b; }
long mod_l(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

std::optional<long> inverse_mod(long a, long n) {
  long g = n, x = 0, x1 = 1, r = mod_l(a, n);
  if (n == 1) return 0;
  while (r != 0) {
    long q = g / r;
    long t = g - q * r;
    g = r;
    r = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) return std::nullopt;
  return mod_l(x, n);
}

namespace {

using Poly = std::vector<BigInt>;

Poly poly_divexact(Poly a, const Poly& b) {
  Poly q(a.size() - b.size() + 1);
  for (long i = static_cast<long>(a.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
    BigInt c = a[i] / b.back();
    q[i - b.size() + 1] = c;
    for (size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= c * b[j];
  }
  return q;
}

// reduce a polynomial with rational coefficients modulo Phi_n in place
void reduce_mod_phi(std::vector<Rational>& a, long n) {
  const Poly& phi = cyclotomic_poly(n);
  long d = static_cast<long>(phi.size()) - 1;
  for (long i = static_cast<long>(a.size()) - 1; i >= d; --i) {
    if (a[i] == 0) continue;
    Rational c = a[i];
    for (long j = 0; j <= d; ++j) {
      if (phi[j] != 0) a[i - d + j] -= c * Rational(phi[j]);
    }
  }
  a.resize(d);
}

}  // namespace

const std::vector<BigInt>& cyclotomic_poly(long n) {
  static std::mutex mu;
  static std::map<long, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_divexact(p, cyclotomic_poly(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

CycNum::CycNum() : order_(1), c_(1) {}
CycNum::CycNum(long v) : order_(1), c_{Rational(v)} {}
CycNum::CycNum(const Rational& v, long order) : order_(order), c_(euler_phi(order)) {
  c_[0] = v;
}
CycNum::CycNum(long order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 1) throw Error("CycNum: order must be positive");
  reduce_mod_phi(c_, order_);
  c_.resize(euler_phi(order_));
}

CycNum CycNum::zeta(long n, long k) {
  std::vector<Rational> v(n);
  v[mod_l(k, n)] = 1;
  return CycNum(n, std::move(v));
}

CycNum CycNum::lift(long new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) throw Error("CycNum::lift: target order is not a multiple");
  long s = new_order / order_;
  std::vector<Rational> v(new_order);
  for (size_t j = 0; j < c_.size(); ++j) v[j * s] = c_[j];
  return CycNum(new_order, std::move(v));
}

CycNum CycNum::galois(long k) const {
  if (gcd_l(mod_l(k, order_), order_) != 1 && order_ > 1) throw Error("CycNum::galois: exponent not a unit");
  std::vector<Rational> v(order_);
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] != 0) v[mod_l(static_cast<long>(j) * k, order_)] += c_[j];
  }
  return CycNum(order_, std::move(v));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error("CycNum: division by zero");
  CycNum prod(Rational(1), order_);
  for (long k = 2; k < order_; ++k) {
    if (gcd_l(k, order_) == 1) prod *= galois(k);
  }
  CycNum nm = prod * *this;
  Rational r = nm.to_rational();
  prod.scale(Rational(1) / r);
  return prod;
}

Rational CycNum::trace() const {
  // Tr(zeta_n^j) is the Ramanujan sum c_n(j) = mu(n/g) phi(n) / phi(n/g), g = gcd(j, n)
  Rational t = 0;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    long m = order_ / gcd_l(static_cast<long>(j), order_);
    long mu = 1, mm = m;
    for (long p = 2; p * p <= mm; ++p) {
      if (mm % p != 0) continue;
      mm /= p;
      if (mm % p == 0) {
        mu = 0;
        break;
      }
      mu = -mu;
    }
    if (mu != 0 && mm > 1) mu = -mu;
    t += c_[j] * Rational(mu * (euler_phi(order_) / euler_phi(m)));
  }
  return t;
}

Rational CycNum::norm() const {
  CycNum prod = *this;
  for (long k = 2; k < order_; ++k) {
    if (gcd_l(k, order_) == 1) prod *= galois(k);
  }
  return prod.to_rational();
}

bool CycNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool CycNum::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return r == 0; });
}

Rational CycNum::to_rational() const {
  if (!is_rational()) throw Error("CycNum: element is not rational: " + to_string());
  return c_[0];
}

Complex CycNum::embed() const {
  Complex acc(0, 0);
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] != 0) acc += root_of_unity(static_cast<long>(j), order_) * to_real(c_[j]);
  }
  return acc;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.order_ != order_) {
    long l = lcm_l(order_, o.order_);
    *this = lift(l);
    return *this += o.lift(l);
  }
  for (size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.order_ != order_) {
    long l = lcm_l(order_, o.order_);
    *this = lift(l);
    return *this *= o.lift(l);
  }
  std::vector<Rational> v(2 * c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] != 0) v[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce_mod_phi(v, order_);
  c_ = std::move(v);
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycNum& CycNum::scale(const Rational& r) {
  for (auto& c : c_) c *= r;
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  long l = lcm_l(a.order_, b.order_);
  return a.lift(l).c_ == b.lift(l).c_;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    Rational c = c_[j];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = c < 0 ? Rational(-c) : c;
    if (j == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "z" << order_;
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycNum pow(CycNum x, long e) {
  if (e < 0) {
    x = x.inverse();
    e = -e;
  }
  CycNum r(Rational(1), x.order());
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

std::optional<std::pair<long, long>> as_root_of_unity(const CycNum& x) {
  long n = x.order() % 2 == 0 ? x.order() : 2 * x.order();
  for (long k = 0; k < n; ++k) {
    if (CycNum::zeta(n, k) == x) {
      long g = gcd_l(k, n);
      return std::make_pair(k / g, n / g);
    }
  }
  return std::nullopt;
}

namespace {

long mult_order(long a, long n) {
  long x = mod_l(a, n), k = 1;
  if (n == 1) return 1;
  while (x != 1) {
    x = x * a % n;
    x = mod_l(x, n);
    ++k;
  }
  return k;
}

}  // namespace

DirichletChar DirichletChar::from_exponents(long modulus, long order, std::vector<long> exps) {
  long g = order;
  for (long e : exps) {
    if (e >= 0) g = gcd_l(g, e);
  }
  DirichletChar c;
  c.modulus_ = modulus;
  c.order_ = order / g;
  for (long& e : exps) {
    if (e >= 0) e /= g;
  }
  c.exps_ = std::move(exps);
  return c;
}

DirichletChar DirichletChar::trivial(long modulus) {
  std::vector<long> e(modulus, -1);
  for (long a = 0; a < modulus; ++a) {
    if (gcd_l(a, modulus) == 1) e[a] = 0;
  }
  if (modulus == 1) e[0] = 0;
  return from_exponents(modulus, 1, std::move(e));
}

DirichletChar DirichletChar::make(long N, const std::vector<std::pair<long, CycNum>>& assignments) {
  if (N < 1) throw Error("make_character: modulus must be positive");
  struct Gen {
    long r, k, n;
  };
  std::vector<Gen> gens;
  long m = 1;
  for (const auto& [res, val] : assignments) {
    long r = mod_l(res, N);
    if (gcd_l(r, N) != 1) throw Error("make_character: residue " + std::to_string(res) + " is not a unit mod " + std::to_string(N));
    auto root = as_root_of_unity(val);
    if (!root) throw Error("make_character: value " + val.to_string() + " at residue " + std::to_string(res) + " is not a root of unity");
    long ord_r = mult_order(r, N);
    if (ord_r % root->second != 0) {
      throw Error("make_character: inconsistent assignment, " + std::to_string(res) + "^" + std::to_string(ord_r) + " = 1 mod " +
                  std::to_string(N) + " but the assigned value has order " + std::to_string(root->second));
    }
    gens.push_back({r, root->first, root->second});
    m = lcm_l(m, root->second);
  }
  std::vector<long> exps(N, -1);
  exps[1 % N] = 0;
  std::vector<long> queue{1 % N};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    long a = queue[qi];
    for (const Gen& g : gens) {
      long b = a * g.r % N;
      long e = mod_l(exps[a] + g.k * (m / g.n), m);
      if (exps[b] < 0) {
        exps[b] = e;
        queue.push_back(b);
      } else if (exps[b] != e) {
        throw Error("make_character: inconsistent assignment, residue " + std::to_string(b) + " would take both zeta_" +
                    std::to_string(m) + "^" + std::to_string(exps[b]) + " and zeta_" + std::to_string(m) + "^" + std::to_string(e));
      }
    }
  }
  long units = euler_phi(N);
  if (static_cast<long>(queue.size()) != units) {
    throw Error("make_character: assignments generate a subgroup of order " + std::to_string(queue.size()) +
                ", the unit group mod " + std::to_string(N) + " has order " + std::to_string(units));
  }
  return from_exponents(N, m, std::move(exps));
}

std::optional<long> DirichletChar::exponent(long a) const {
  long e = exps_[mod_l(a, modulus_)];
  if (e < 0) return std::nullopt;
  return e;
}

CycNum DirichletChar::operator()(long a) const {
  auto e = exponent(a);
  if (!e) return CycNum(Rational(0), order_);
  return CycNum::zeta(order_, *e);
}

Complex DirichletChar::value(long a) const {
  auto e = exponent(a);
  if (!e) return Complex(0, 0);
  return root_of_unity(*e, order_);
}

bool DirichletChar::is_even() const { return modulus_ <= 2 || exps_[modulus_ - 1] == 0; }

long DirichletChar::conductor() const {
  for (long d = 1; d <= modulus_; ++d) {
    if (modulus_ % d != 0) continue;
    bool ok = true;
    for (long a = 1; a < modulus_ && ok; ++a) {
      if (exps_[a] >= 0 && (a - 1) % d == 0 && exps_[a] != 0) ok = false;
    }
    if (ok) return d;
  }
  return modulus_;
}

DirichletChar DirichletChar::pow(long k) const {
  std::vector<long> e = exps_;
  for (long& x : e) {
    if (x >= 0) x = mod_l(x * k, order_);
  }
  return from_exponents(modulus_, order_, std::move(e));
}

DirichletChar operator*(const DirichletChar& a, const DirichletChar& b) {
  if (a.modulus_ != b.modulus_) throw Error("character product: moduli differ");
  long m = lcm_l(a.order_, b.order_);
  std::vector<long> e(a.modulus_, -1);
  for (long r = 0; r < a.modulus_; ++r) {
    if (a.exps_[r] >= 0) e[r] = mod_l(a.exps_[r] * (m / a.order_) + b.exps_[r] * (m / b.order_), m);
  }
  return DirichletChar::from_exponents(a.modulus_, m, std::move(e));
}

bool operator==(const DirichletChar& a, const DirichletChar& b) {
  return a.modulus_ == b.modulus_ && a.order_ == b.order_ && a.exps_ == b.exps_;
}

std::string DirichletChar::describe() const {
  std::ostringstream os;
  os << "mod " << modulus_ << ", order " << order_ << ", values zeta_" << order_ << "^[";
  bool first = true;
  for (long a = 0; a < modulus_; ++a) {
    if (exps_[a] < 0) continue;
    os << (first ? "" : ",") << a << ":" << exps_[a];
    first = false;
  }
  os << "]";
  return os.str();
}

std::vector<DirichletChar> all_characters(long N) {
  // greedy generating set of the unit group
  std::vector<long> gens;
  std::vector<char> in(N, 0);
  in[1 % N] = 1;
  long size = 1, units = euler_phi(N);
  while (size < units) {
    long g = 1;
    while (in[g] || gcd_l(g, N) != 1) ++g;
    gens.push_back(g);
    std::vector<long> cur;
    for (long a = 0; a < N; ++a) {
      if (in[a]) cur.push_back(a);
    }
    for (long a : cur) {
      long x = a;
      do {
        x = x * g % N;
        in[x] = 1;
      } while (x != a);
    }
    size = std::count(in.begin(), in.end(), 1);
  }
  long e = 1;
  for (long g : gens) e = lcm_l(e, mult_order(g, N));
  std::vector<DirichletChar> out;
  std::vector<long> idx(gens.size(), 0);
  while (true) {
    std::vector<std::pair<long, CycNum>> as;
    for (size_t i = 0; i < gens.size(); ++i) as.emplace_back(gens[i], CycNum::zeta(e, idx[i]));
    try {
      DirichletChar c = DirichletChar::make(N, as);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    } catch (const Error&) {
    }
    size_t i = 0;
    while (i < idx.size() && ++idx[i] == e) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  if (gens.empty()) out.push_back(DirichletChar::trivial(N));
  return out;
}

CycNum gauss_sum(const DirichletChar& chi) {
  if (chi.is_trivial()) throw Error("gauss_sum: trivial character");
  long N = chi.modulus(), o = chi.order(), L = lcm_l(N, o);
  std::vector<Rational> v(L);
  for (long a = 1; a < N; ++a) {
    auto e = chi.exponent(a);
    if (e) v[mod_l(*e * (L / o) + a * (L / N), L)] += 1;
  }
  return CycNum(L, std::move(v));
}

Rational bernoulli2(const Rational& x) { return x * x - x + Rational(1, 6); }

CycNum bernoulli2_sum(const DirichletChar& chi) {
  if (chi.is_trivial()) throw Error("bernoulli2_sum: trivial character");
  if (!chi.is_even()) throw Error("bernoulli2_sum: odd character, the sum vanishes identically");
  long N = chi.modulus(), o = chi.order();
  std::vector<Rational> v(o);
  for (long a = 0; a < N; ++a) {
    auto e = chi.exponent(a);
    if (e) v[mod_l(-*e, o)] += bernoulli2(Rational(a, N));
  }
  return CycNum(o, std::move(v));
}

CycNum l2_over_pi2(const DirichletChar& chi) {
  CycNum s = bernoulli2_sum(chi) * gauss_sum(chi);
  s.scale(Rational(1, chi.modulus()));
  return s;
}

}  // namespace mahlerlab
