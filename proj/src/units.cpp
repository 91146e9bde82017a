#include "mahlerlab/units.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace mahlerlab {

namespace {

using boost::multiprecision::log;
using boost::multiprecision::sin;

// B2(r/N) = x^2 - x + 1/6 with x = r/N in [0, 1)
Rational b2(long r, long N) {
  Rational x(mod_l(r, N), N);
  return x * x - x + Rational(1, 6);
}

Real b2_real(const Real& x) { return x * x - x + Real(1) / 6; }

void check_class(long g, long N) {
  if (mod_l(g, N) == 0 || mod_l(2 * g, N) == 0) throw Error("class " + std::to_string(g) + " is its own negative mod " + std::to_string(N));
}

long class_multiplicity(const YangProduct& p, long n) {
  long m = mod_l(n, p.N), out = 0;
  for (long g : p.num)
    if (m == mod_l(g, p.N) || m == mod_l(-g, p.N)) ++out;
  for (long g : p.den)
    if (m == mod_l(g, p.N) || m == mod_l(-g, p.N)) --out;
  return out;
}

long terms_for_height(const Real& y, int digits) {
  double yd = static_cast<double>(y);
  if (yd <= 0) throw Error("point is not in the upper half plane");
  return static_cast<long>(std::ceil((digits + 3) * std::log(10.0) / (2 * M_PI * yd))) + 2;
}

Real tol_for(int digits) { return std::max(pow10(-(digits - 6)), pow10(-26)); }

// log|g_b(z)| and d/dz log g_b(z), b = (a1/N, a2/N), a1, a2 in [0, N)
UnitValue siegel_log(long a1, long a2, long N, const Complex& z, int digits) {
  if (a1 == 0 && a2 == 0) throw Error("Siegel index (0, 0)");
  Real b1 = Real(a1) / N, b2v = Real(a2) / N;
  const Real& P = pi();
  Complex twopii(0, 2 * P);
  Complex qz = e2pii(b1 * z + b2v);
  Complex q = e2pii(z);
  Complex prod = Complex(1, 0) - qz;
  Complex D = -b1 * qz / prod;
  Complex qn(1, 0);
  Complex inv_qz = Complex(1, 0) / qz;
  long nmax = terms_for_height(im(z), digits) + 1;
  for (long n = 1; n <= nmax; ++n) {
    qn *= q;
    Complex X = qn * qz, Y = qn * inv_qz;
    Complex oX = Complex(1, 0) - X, oY = Complex(1, 0) - Y;
    prod *= oX * oY;
    D -= (Real(n) + b1) * X / oX + (Real(n) - b1) * Y / oY;
    if (absz(Y) < pow10(-digits - 4) && absz(X) < pow10(-digits - 4)) break;
  }
  Real la = -2 * P * im(z) * b2_real(b1) / 2 + log(absz(prod));
  Complex dl = twopii * (Complex(b2_real(b1) / 2, 0) + D);
  return {la, dl};
}

// g_b(z) with its phase
Complex siegel_value(long a1, long a2, long N, const Complex& z, int digits) {
  Real b1 = Real(a1) / N, b2v = Real(a2) / N;
  Complex qz = e2pii(b1 * z + b2v);
  Complex q = e2pii(z);
  Complex val = -e2pii(Complex(b2v * (b1 - 1) / 2, 0)) * e2pii(z * b2_real(b1) / 2) * (Complex(1, 0) - qz);
  Complex qn(1, 0), inv_qz = Complex(1, 0) / qz;
  long nmax = terms_for_height(im(z), digits) + 1;
  for (long n = 1; n <= nmax; ++n) {
    qn *= q;
    val *= (Complex(1, 0) - qn * qz) * (Complex(1, 0) - qn * inv_qz);
  }
  return val;
}

// w = g z with z in the standard fundamental domain
std::pair<Complex, Mat2> reduce(const Complex& w) {
  if (im(w) <= 0) throw Error("point is not in the upper half plane");
  Complex z = w;
  Mat2 g{1, 0, 0, 1};
  for (int it = 0; it < 10000; ++it) {
    Real n = boost::multiprecision::round(re(z));
    if (n != 0) {
      long k = static_cast<long>(n);
      z -= Real(k);
      g = g * Mat2{1, k, 0, 1};
    }
    if (norm2(z) < Real(1) - pow10(-30)) {
      z = Complex(-1, 0) / z;
      g = g * Mat2{0, 1, -1, 0};
      continue;
    }
    return {z, g};
  }
  throw Error("reduction to the fundamental domain did not terminate");
}

Real log_abs_constant(const UnitMonomial& u) { return log(absz(u.constant)); }

// log of the modulus of the leading coefficient at infinity
Real log_leading_modulus(const UnitMonomial& u) {
  Real acc = log_abs_constant(u);
  for (const auto& [k, e] : u.exps) {
    if (k.first != 0) continue;
    acc += Real(e) * log(2 * boost::multiprecision::abs(sin(pi() * Real(k.second) / u.N)));
  }
  return acc;
}

// the constant in front of the q-product
Complex yang_scale(const UnitMonomial& u) { return u.constant / UnitMonomial::from_yang(*u.yang).constant; }

}  // namespace

std::string YangProduct::describe() const {
  std::ostringstream os;
  os << "q^" << q_power << " prod_{n = ±{";
  for (size_t i = 0; i < num.size(); ++i) os << (i ? "," : "") << num[i];
  os << "} mod " << N << "} (1-q^n) / prod_{n = ±{";
  for (size_t i = 0; i < den.size(); ++i) os << (i ? "," : "") << den[i];
  os << "} mod " << N << "} (1-q^n)";
  return os.str();
}

QSeries<BigInt> qproduct_expand(const YangProduct& p, long prec) {
  for (long g : p.num) check_class(g, p.N);
  for (long g : p.den) check_class(g, p.N);
  long R = prec - p.q_power;
  if (R <= 0) return QSeries<BigInt>(prec, {}, prec);
  std::vector<BigInt> c(R, BigInt(0));
  c[0] = 1;
  for (long n = 1; n < R; ++n) {
    long m = class_multiplicity(p, n);
    for (; m > 0; --m)
      for (long i = R - 1; i >= n; --i) c[i] -= c[i - n];
    for (; m < 0; ++m)
      for (long i = n; i < R; ++i) c[i] += c[i - n];
  }
  return QSeries<BigInt>(p.q_power, std::move(c), prec);
}

Complex qproduct_eval(const YangProduct& p, const Complex& z, int digits) {
  for (long g : p.num) check_class(g, p.N);
  for (long g : p.den) check_class(g, p.N);
  Complex q = e2pii(z);
  Complex val = e2pii(z * Real(p.q_power));
  Complex qn(1, 0);
  long nmax = terms_for_height(im(z), digits);
  for (long n = 1; n <= nmax; ++n) {
    qn *= q;
    long m = class_multiplicity(p, n);
    for (; m > 0; --m) val *= Complex(1, 0) - qn;
    for (; m < 0; ++m) val /= Complex(1, 0) - qn;
  }
  return val;
}

UnitMonomial UnitMonomial::from_yang(const YangProduct& p, const Complex& constant) {
  UnitMonomial u;
  u.N = p.N;
  u.yang = p;
  Rational qpow(0);
  Complex c = constant;
  const long N = p.N;
  auto add = [&](long g, long e) {
    check_class(g, N);
    long a1 = mod_l(g, N);
    for (long j = 0; j < N; ++j) u.exps[{a1, j}] += e;
    qpow += Rational(e * N) * b2(a1, N) / 2;
    // prod_j g_{(a1/N, j/N)} = kappa * q^{...} prod (1 - q^n), kappa = (-1)^N e^{pi i (a1/N - 1)(N - 1)/2}
    Complex kappa = e2pii(Complex(Real(a1 - N) * (N - 1) / (4 * Real(N)), 0));
    if (N % 2) kappa = -kappa;
    for (long k = 0; k < std::labs(e); ++k) c = e > 0 ? c / kappa : c * kappa;
  };
  for (long g : p.num) add(g, 1);
  for (long g : p.den) add(g, -1);
  if (qpow != Rational(p.q_power))
    throw Error("not a modular unit: " + p.describe() + " needs leading power q^" + qpow.str());
  for (auto it = u.exps.begin(); it != u.exps.end();) it = it->second == 0 ? u.exps.erase(it) : std::next(it);
  u.constant = c;
  return u;
}

Rational UnitMonomial::order_at_infinity() const {
  Rational acc(0);
  for (const auto& [k, e] : exps) acc += Rational(e) * b2(k.first, N) / 2;
  return acc;
}

std::string UnitMonomial::describe() const {
  if (yang) return yang->describe();
  std::ostringstream os;
  os << "level " << N << " Siegel monomial with " << exps.size() << " factors";
  return os.str();
}

UnitMonomial sl2_transform(const UnitMonomial& u, const Mat2& g) {
  if (g.det() != 1) throw Error("sl2_transform needs determinant 1");
  UnitMonomial out;
  out.N = u.N;
  out.constant = Complex(absz(u.constant), 0);
  out.phase_known = false;
  for (const auto& [k, e] : u.exps) {
    SiegelIndex t{mod_l(k.first * g.a + k.second * g.c, u.N), mod_l(k.first * g.b + k.second * g.d, u.N)};
    out.exps[t] += e;
  }
  for (auto it = out.exps.begin(); it != out.exps.end();) it = it->second == 0 ? out.exps.erase(it) : std::next(it);
  return out;
}

Rational CuspDivisor::at(const Cusp& c) const { return order[gamma1_cusp_index(cusps, c, N)]; }

bool CuspDivisor::is_zero() const {
  return std::all_of(order.begin(), order.end(), [](const Rational& r) { return r == 0; });
}

CuspDivisor cusp_divisor(const UnitMonomial& u) {
  CuspDivisor d;
  d.N = u.N;
  d.cusps = gamma1_cusps(u.N);
  for (const auto& cu : d.cusps) {
    long p = cu.is_infinity() ? 1 : cu.a, q = cu.c;
    Rational acc(0);
    for (const auto& [k, e] : u.exps) acc += Rational(e) * b2(k.first * p + k.second * q, u.N) / 2;
    d.order.push_back(acc * gamma1_cusp_width(cu, u.N));
  }
  return d;
}

Cusp diamond_infinity(long N, long d) {
  if (gcd_l(d, N) != 1) throw Error("d is not a unit mod N");
  auto cusps = gamma1_cusps(N);
  return cusps[gamma1_cusp_index(cusps, Cusp::make(d, N), N)];
}

UnitMonomial unit_from_divisor(long N, const std::vector<std::pair<Cusp, Rational>>& target, const Complex& lead) {
  auto cusps = gamma1_cusps(N);
  std::vector<Rational> t(cusps.size(), Rational(0));
  for (const auto& [c, r] : target) t[gamma1_cusp_index(cusps, c, N)] = r;
  std::vector<long> gs;
  for (long g = 1; 2 * g < N; ++g) gs.push_back(g);
  // columns: orders of each Yang factor, then the target
  Matrix<Rational> A(cusps.size(), std::vector<Rational>(gs.size() + 1, Rational(0)));
  for (size_t j = 0; j < gs.size(); ++j) {
    UnitMonomial e;
    e.N = N;
    for (long k = 0; k < N; ++k) e.exps[{gs[j], k}] = 1;
    auto dv = cusp_divisor(e);
    for (size_t i = 0; i < cusps.size(); ++i) A[i][j] = dv.order[i];
  }
  for (size_t i = 0; i < cusps.size(); ++i) A[i][gs.size()] = t[i];
  auto piv = rref(A);
  if (!piv.empty() && piv.back() == gs.size()) throw Error("divisor is not the divisor of a Yang unit");
  if (piv.size() < gs.size()) throw Error("Yang unit with this divisor is not unique");
  YangProduct p;
  p.N = N;
  Rational qpow(0);
  for (size_t r = 0; r < piv.size(); ++r) {
    Rational e = A[r][gs.size()];
    if (denominator(e) != 1) throw Error("divisor needs a fractional exponent");
    long ei = numerator(e).convert_to<long>();
    long g = gs[piv[r]];
    for (long k = 0; k < std::labs(ei); ++k) (ei > 0 ? p.num : p.den).push_back(g);
    qpow += Rational(ei * N) * b2(g, N) / 2;
  }
  if (denominator(qpow) != 1) throw Error("leading power of q is fractional");
  p.q_power = numerator(qpow).convert_to<long>();
  return UnitMonomial::from_yang(p, lead);
}

std::vector<UnitValue> eval_units(const std::vector<const UnitMonomial*>& us, const Complex& w, int digits) {
  if (us.empty()) return {};
  long N = us[0]->N;
  auto [z, g] = reduce(w);
  std::map<SiegelIndex, std::vector<long>> idx;
  for (size_t k = 0; k < us.size(); ++k) {
    if (us[k]->N != N) throw Error("eval_units needs units of one level");
    for (const auto& [key, e] : us[k]->exps) {
      SiegelIndex t{mod_l(key.first * g.a + key.second * g.c, N), mod_l(key.first * g.b + key.second * g.d, N)};
      auto& v = idx[t];
      v.resize(us.size(), 0);
      v[k] += e;
    }
  }
  std::vector<UnitValue> out(us.size());
  for (size_t k = 0; k < us.size(); ++k) out[k] = {log_abs_constant(*us[k]), Complex(0, 0)};
  for (const auto& [t, ev] : idx) {
    bool any = std::any_of(ev.begin(), ev.end(), [](long e) { return e != 0; });
    if (!any) continue;
    UnitValue s = siegel_log(t.first, t.second, N, z, digits);
    for (size_t k = 0; k < us.size(); ++k) {
      if (!ev[k]) continue;
      out[k].log_abs += Real(ev[k]) * s.log_abs;
      out[k].dlog += Real(ev[k]) * s.dlog;
    }
  }
  // d/dw = (cz + d)^2 d/dz
  Complex j = Real(g.c) * z + Real(g.d);
  for (auto& o : out) o.dlog *= j * j;
  return out;
}

Complex unit_value(const UnitMonomial& u, const Complex& w, int digits) {
  if (!u.phase_known) throw Error("unit_value needs a unit with known phase");
  if (u.yang) return yang_scale(u) * qproduct_eval(*u.yang, w, digits);
  Complex val = u.constant;
  for (const auto& [k, e] : u.exps) {
    Complex s = siegel_value(k.first, k.second, u.N, w, digits);
    for (long i = 0; i < std::labs(e); ++i) val = e > 0 ? val * s : val / s;
  }
  return val;
}

Complex cusp_value(const UnitMonomial& u, const Cusp& c, int digits) {
  auto dv = cusp_divisor(u);
  if (dv.at(c) != 0) throw Error("unit has order " + dv.at(c).str() + " at " + c.to_string());
  // the product itself starts with 1
  if (c.is_infinity() && u.yang) return yang_scale(u);
  Mat2 g = cusp_matrix(c);
  long w = gamma1_cusp_width(c, u.N);
  // z = x + i w/2 with c x + d centred on 0 maximizes the smallest Im(g z)
  Real T = Real(w) / 2;
  Real x0 = c.is_infinity() ? Real(0) : -Real(g.d) / g.c;
  long m = static_cast<long>(std::ceil(digits * std::log(10.0) / M_PI)) + 10;
  Complex acc(0, 0);
  for (long j = 0; j < m; ++j) {
    Real x = x0 - Real(w) / 2 + Real(w) * (Real(j) + Real(1) / 2) / m;
    Complex z(x, T);
    Complex gz = (Real(g.a) * z + Real(g.b)) / (Real(g.c) * z + Real(g.d));
    acc += unit_value(u, gz, digits);
  }
  return acc / Real(m);
}

namespace {

using Integrand = std::function<Real(const Real&)>;

// adaptive Gauss-Legendre on [a, b]
void adaptive(const Integrand& f, const Real& a, const Real& b, const Real& whole, const Real& tol, int depth,
              Real& acc, Real& err, long& evals) {
  Real m = (a + b) / 2;
  Real l = gl_integrate(f, a, m, 20), r = gl_integrate(f, m, b, 20);
  evals += 40;
  Real diff = boost::multiprecision::abs(l + r - whole);
  if (diff <= tol || depth >= 30) {
    acc += l + r;
    err += diff;
    return;
  }
  adaptive(f, a, m, l, tol / 2, depth + 1, acc, err, evals);
  adaptive(f, m, b, r, tol / 2, depth + 1, acc, err, evals);
}

EtaIntegral integrate(const Integrand& f, const Real& a, const Real& b, const Real& tol, const Real& panel) {
  EtaIntegral out;
  long n = std::max(1L, static_cast<long>(std::ceil(static_cast<double>(boost::multiprecision::abs(b - a) / panel))));
  Real h = (b - a) / n;
  for (long k = 0; k < n; ++k) {
    Real lo = a + h * k, hi = a + h * (k + 1);
    Real whole = gl_integrate(f, lo, hi, 20);
    out.evaluations += 20;
    adaptive(f, lo, hi, whole, tol / n, 0, out.value, out.error, out.evaluations);
  }
  return out;
}

// eta(u, v)(z'(s)) at z(s)
Real eta_density(const UnitMonomial& u, const UnitMonomial& v, const Complex& z, const Complex& dz, int digits) {
  auto val = eval_units({&u, &v}, z, digits);
  Real dargv = im(val[1].dlog * dz), dargu = im(val[0].dlog * dz);
  return val[0].log_abs * dargv - val[1].log_abs * dargu;
}

// int_{x0 + i t0}^{x0 + i oo} eta(u, v), in t = t0 e^s
EtaIntegral eta_vertical_to_infinity(const UnitMonomial& u, const UnitMonomial& v, const Real& x0, const Real& t0,
                                     long width, int digits) {
  Real tmax = Real(width) * (digits * std::log(10.0) + 20) / (2 * pi()) + 2;
  Real smax = tmax > t0 ? Real(log(tmax / t0)) : Real(1);
  Integrand f = [&](const Real& s) {
    Real t = t0 * boost::multiprecision::exp(s);
    return eta_density(u, v, Complex(x0, t), Complex(0, t), digits);
  };
  return integrate(f, Real(0), smax, tol_for(digits), Real(0.25));
}

Real log_tame_modulus(const UnitMonomial& U, const UnitMonomial& V) {
  Rational mu = U.order_at_infinity(), mv = V.order_at_infinity();
  return to_real(mv) * log_leading_modulus(U) - to_real(mu) * log_leading_modulus(V);
}

}  // namespace

EtaIntegral eta_geodesic(const UnitMonomial& u, const UnitMonomial& v, const Complex& z0, const Complex& z1,
                         int digits) {
  if (im(z0) <= 0 || im(z1) <= 0) throw Error("geodesic endpoints must lie in the upper half plane");
  Real x0 = re(z0), y0 = im(z0), x1 = re(z1), y1 = im(z1);
  Real tol = tol_for(digits);
  Integrand f;
  Real s0, s1;
  if (boost::multiprecision::abs(x1 - x0) < pow10(-30)) {
    f = [&](const Real& s) {
      Real t = boost::multiprecision::exp(s);
      return eta_density(u, v, Complex(x0, t), Complex(0, t), digits);
    };
    s0 = log(y0);
    s1 = log(y1);
  } else {
    // circle centred at c on the real line, z(s) = c + R(-tanh s + i sech s)
    Real c = (x1 * x1 + y1 * y1 - x0 * x0 - y0 * y0) / (2 * (x1 - x0));
    Real R = boost::multiprecision::sqrt((x0 - c) * (x0 - c) + y0 * y0);
    f = [&, c, R](const Real& s) {
      Real th = boost::multiprecision::tanh(s), sh = 1 / boost::multiprecision::cosh(s);
      Complex z(c - R * th, R * sh);
      Complex dz(-R * sh * sh, -R * sh * th);
      return eta_density(u, v, z, dz, digits);
    };
    s0 = boost::multiprecision::atanh((c - x0) / R);
    s1 = boost::multiprecision::atanh((c - x1) / R);
  }
  return integrate(f, s0, s1, tol, Real(1));
}

EtaIntegral eta_geodesic(const UnitMonomial& u, const UnitMonomial& v, const Cusp& p, const Cusp& q, int digits) {
  if (p == q) throw Error("geodesic needs two distinct cusps");
  Mat2 gp = cusp_matrix(p);
  Cusp r = q.apply(gp.inverse());  // finite
  Mat2 gr = cusp_matrix(r);
  UnitMonomial U = sl2_transform(u, gp), V = sl2_transform(v, gp);
  UnitMonomial U2 = sl2_transform(U, gr), V2 = sl2_transform(V, gr);
  for (auto* pr : {&U, &U2}) {
    const UnitMonomial& a = *pr;
    const UnitMonomial& b = pr == &U ? V : V2;
    Real lt = log_tame_modulus(a, b);
    if (boost::multiprecision::abs(lt) > pow10(-20))
      throw Error("tame symbol at " + (pr == &U ? p : q).to_string() + " has modulus e^" + fmt(lt, 10) +
                  "; the integral depends on the path");
  }
  long w1 = gamma1_cusp_width(p, u.N), w2 = gamma1_cusp_width(q, u.N);
  // in gp coordinates the path is r + i t, t from oo down to 0; split at t = 1/c'
  Real xr = Real(r.a) / r.c;
  Real ts = Real(1) / r.c;
  EtaIntegral upper = eta_vertical_to_infinity(U, V, xr, ts, w1, digits);
  // gr^{-1}(r + i t) = -d'/c' + i / (c'^2 t)
  Real x2 = -Real(gr.d) / gr.c;
  Real y2 = Real(1) / (Real(gr.c) * gr.c * ts);
  EtaIntegral lower = eta_vertical_to_infinity(U2, V2, x2, y2, w2, digits);
  EtaIntegral out;
  out.value = lower.value - upper.value;
  out.error = lower.error + upper.error;
  out.evaluations = lower.evaluations + upper.evaluations;
  return out;
}

EtaIntegral eta_loop(const UnitMonomial& u, const UnitMonomial& v, const Mat2& g0, int digits) {
  Mat2 g = g0;
  if (g.c < 0 || (g.c == 0 && g.d < 0)) g = {-g.a, -g.b, -g.c, -g.d};
  if (g.c == 0) {
    if (g.b == 0) return {};
    return eta_geodesic(u, v, Complex(0, 1), Complex(Real(g.b), 1), digits);
  }
  Complex z(Real(-g.d) / g.c, Real(1) / g.c), gz(Real(g.a) / g.c, Real(1) / g.c);
  return eta_geodesic(u, v, z, gz, digits);
}

Complex eta_cycle(const UnitMonomial& u, const UnitMonomial& v, const Chain& closed, int digits, Real* error) {
  auto coef = loop_coordinates(closed);
  const auto& loops = closed.space().h1_loops();
  Complex acc(0, 0);
  Real err = 0;
  for (size_t k = 0; k < coef.size(); ++k) {
    if (coef[k].is_zero()) continue;
    EtaIntegral e = eta_loop(u, v, loops[k].g, digits);
    Complex c = coef[k].embed();
    acc += c * e.value;
    err += absz(c) * e.error;
  }
  if (error) *error = err;
  return acc;
}

namespace {

BigInt min_poly_residual(const LaurentPoly2& P0, const YangProduct& u, const YangProduct& v, const BigInt& su,
                         const BigInt& sv, long order) {
  LaurentPoly2 P = P0.shifted_nonnegative();
  long need = 0;
  for (const auto& [k, c] : P.terms()) need = std::max(need, -(k.first * u.q_power + k.second * v.q_power));
  long rel = order + 1 + need + 1;
  auto us = qproduct_expand(u, u.q_power + rel) * su, vs = qproduct_expand(v, v.q_power + rel) * sv;
  std::map<int, QSeries<BigInt>> upow, vpow;
  auto power = [&](std::map<int, QSeries<BigInt>>& cache, const QSeries<BigInt>& s, int e) -> const QSeries<BigInt>& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    QSeries<BigInt> r = e == 0 ? QSeries<BigInt>::constant(BigInt(1), rel) : s.pow(e);
    return cache.emplace(e, r).first->second;
  };
  std::optional<QSeries<BigInt>> sum;
  for (const auto& [k, c] : P.terms()) {
    QSeries<BigInt> t = power(upow, us, k.first) * power(vpow, vs, k.second) * BigInt(c);
    sum = sum ? *sum + t : t;
  }
  if (!sum) return BigInt(0);
  if (sum->precision() <= order) throw Error("not enough precision to check through q^" + std::to_string(order));
  BigInt worst(0);
  for (long n = std::min(sum->valuation(), 0L); n <= order; ++n) {
    BigInt a = abs((*sum)[n]);
    if (a > worst) worst = a;
  }
  return worst;
}

BigInt integer_scale(const UnitMonomial& u) {
  if (!u.yang || !u.phase_known) throw Error("exact expansion needs a unit built from a q-product");
  Complex s = yang_scale(u);
  Real r = boost::multiprecision::round(re(s));
  if (absz(s - Complex(r, 0)) > pow10(-25)) throw Error("exact expansion needs an integer constant, got " + fmt(s));
  return BigInt(r.convert_to<long>());
}

}  // namespace

BigInt verify_min_poly(const LaurentPoly2& P, const YangProduct& u, const YangProduct& v, long order) {
  return min_poly_residual(P, u, v, BigInt(1), BigInt(1), order);
}

BigInt verify_min_poly(const LaurentPoly2& P, const UnitMonomial& u, const UnitMonomial& v, long order) {
  return min_poly_residual(P, *u.yang, *v.yang, integer_scale(u), integer_scale(v), order);
}

QSeries<BigInt> unit_expand(const UnitMonomial& u, long prec) { return qproduct_expand(*u.yang, prec) * integer_scale(u); }

YangProduct yang_u(long N) {
  switch (N) {
    case 16: return {16, 1, {1, 5}, {3, 7}};
    case 18: return {18, 3, {1, 2}, {7, 8}};
    case 25: return {25, 1, {3, 4}, {2, 11}};
  }
  throw Error("no Yang pair at level " + std::to_string(N));
}

YangProduct yang_v(long N) {
  switch (N) {
    case 16: return {16, 1, {14}, {10}};
    case 18: return {18, 2, {1, 4}, {5, 8}};
    case 25: return {25, -1, {9, 12}, {6, 8}};
  }
  throw Error("no Yang pair at level " + std::to_string(N));
}

Level13Units level13_units() {
  const long dx[6] = {0, 1, 1, -1, 0, -1}, dy[6] = {1, -1, 1, 1, -1, -1};
  std::vector<std::pair<Cusp, Rational>> tx, ty;
  for (long d = 1; d <= 6; ++d) {
    Cusp c = diamond_infinity(13, d);
    tx.push_back({c, Rational(dx[d - 1])});
    ty.push_back({c, Rational(dy[d - 1])});
  }
  Level13Units out{unit_from_divisor(13, tx, Complex(1, 0)), unit_from_divisor(13, ty, Complex(-1, 0)), {}, {}};
  out.xp = *out.x.yang;
  out.yp = *out.y.yang;
  return out;
}

CurveExpansions curve_qexpansions13(long prec) {
  auto L = level13_units();
  long extra = 4;
  auto x = unit_expand(L.x, prec + extra), y = unit_expand(L.y, prec + extra);
  if (x.valuation() != 0) throw Error("x must be a unit at infinity");
  auto one = QSeries<BigInt>::constant(BigInt(1), prec + extra);
  auto x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  auto num = (x2 - x) * y - x3 + x2 + x * BigInt(2) - one;
  auto den = x4 - x3 * BigInt(2) + x2 * BigInt(3) - x * BigInt(2) + one;
  auto omega = (num * den.inverse() * y.theta()).truncated(prec);
  return {x.truncated(prec), y.truncated(prec), omega, (x * omega).truncated(prec)};
}

DifferentialFit fit_differential(const CurveExpansions& ce, const std::vector<Complex>& fbar, const Complex& w,
                                 long check) {
  if (static_cast<long>(fbar.size()) <= check || ce.omega.precision() <= check)
    throw Error("not enough coefficients to check through q^" + std::to_string(check));
  auto s1 = [&](long n) { return Complex(to_real(ce.omega[n]), 0); };
  auto s2 = [&](long n) { return Complex(to_real(ce.h_omega[n]), 0); };
  // w fbar_n = alpha s1_n + beta s2_n for n = 1, 2
  Complex a11 = s1(1), a12 = s2(1), a21 = s1(2), a22 = s2(2);
  Complex det = a11 * a22 - a12 * a21;
  if (absz(det) < pow10(-20)) throw Error("omega and h omega are dependent on q^1, q^2");
  Complex r1 = w * fbar[1], r2 = w * fbar[2];
  DifferentialFit out;
  out.alpha = (r1 * a22 - a12 * r2) / det;
  out.beta = (a11 * r2 - a21 * r1) / det;
  for (long n = 0; n <= check; ++n) {
    Complex lhs = n < static_cast<long>(fbar.size()) ? w * fbar[n] : Complex(0, 0);
    if (n == 0) lhs = Complex(0, 0);
    out.residual = std::max(out.residual, absz(lhs - out.alpha * s1(n) - out.beta * s2(n)));
  }
  return out;
}

}  // namespace mahlerlab
