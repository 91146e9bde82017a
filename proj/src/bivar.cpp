#include "mahlerlab/bivar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <sstream>

namespace mahlerlab {

LaurentPoly2::LaurentPoly2(std::map<Key, BigInt> terms, std::string x, std::string y)
    : terms_(std::move(terms)), xname_(std::move(x)), yname_(std::move(y)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) it = terms_.erase(it);
    else ++it;
  }
}

LaurentPoly2 LaurentPoly2::constant(long c) { return monomial(c, 0, 0); }

LaurentPoly2 LaurentPoly2::monomial(long c, int i, int j) {
  std::map<Key, BigInt> t;
  if (c != 0) t[{i, j}] = c;
  return LaurentPoly2(std::move(t));
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, std::string x, std::string y) : s_(s), x_(std::move(x)), y_(std::move(y)) {}

  LaurentPoly2 run() {
    skip();
    if (i_ >= s_.size()) throw ParseError("empty expression", i_);
    LaurentPoly2 r = expr();
    skip();
    if (i_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
    return r;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  LaurentPoly2 named(LaurentPoly2 p) const { return LaurentPoly2(p.terms(), x_, y_); }

  LaurentPoly2 expr() {
    LaurentPoly2 acc = term();
    while (true) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return named(acc);
    }
  }

  LaurentPoly2 term() {
    LaurentPoly2 acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }

  LaurentPoly2 unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  long exponent() {
    skip();
    bool paren = eat('(');
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    skip();
    size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw ParseError("expected integer exponent", start);
    if (i_ - start > 6) throw ParseError("exponent too large", start);
    long e = std::stol(std::string(s_.substr(start, i_ - start)));
    if (paren && !eat(')')) throw ParseError("expected ')'", i_);
    return neg ? -e : e;
  }

  LaurentPoly2 power() {
    size_t at = i_;
    LaurentPoly2 base = atom();
    if (!eat('^')) return base;
    long e = exponent();
    if (e >= 0) {
      LaurentPoly2 r = LaurentPoly2::constant(1);
      for (long k = 0; k < e; ++k) r = r * base;
      return r;
    }
    if (base.terms().size() != 1 || abs(base.terms().begin()->second) != 1) {
      throw ParseError("negative exponent on a non-monomial", at);
    }
    auto [key, c] = *base.terms().begin();
    std::map<LaurentPoly2::Key, BigInt> t;
    t[{static_cast<int>(key.first * e), static_cast<int>(key.second * e)}] = (-e) % 2 == 1 ? c : BigInt(1);
    return LaurentPoly2(std::move(t));
  }

  LaurentPoly2 atom() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      LaurentPoly2 r = expr();
      if (!eat(')')) throw ParseError("expected ')'", i_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::map<LaurentPoly2::Key, BigInt> t;
      t[{0, 0}] = BigInt(std::string(s_.substr(start, i_ - start)));
      return LaurentPoly2(std::move(t));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string id(s_.substr(start, i_ - start));
      if (id == x_) return LaurentPoly2::monomial(1, 1, 0);
      if (id == y_) return LaurentPoly2::monomial(1, 0, 1);
      throw ParseError("unknown variable '" + id + "' (expected " + x_ + " or " + y_ + ")", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", i_);
  }

  std::string_view s_;
  std::string x_, y_;
  size_t i_ = 0;
};

}  // namespace

LaurentPoly2 LaurentPoly2::parse(std::string_view text, std::string x, std::string y) {
  return Parser(text, std::move(x), std::move(y)).run();
}

int LaurentPoly2::min_deg(Var v) const {
  if (terms_.empty()) return 0;
  int m = INT32_MAX;
  for (const auto& [k, c] : terms_) m = std::min(m, v == Var::X ? k.first : k.second);
  return m;
}

int LaurentPoly2::max_deg(Var v) const {
  if (terms_.empty()) return 0;
  int m = INT32_MIN;
  for (const auto& [k, c] : terms_) m = std::max(m, v == Var::X ? k.first : k.second);
  return m;
}

namespace {

std::vector<Complex> power_table(const Complex& z, int lo, int hi) {
  std::vector<Complex> t(hi - lo + 1);
  Complex zi = Real(1) / z;
  Complex p(1, 0);
  for (int e = 0; e <= hi; ++e) {
    if (e >= lo) t[e - lo] = p;
    p *= z;
  }
  p = Complex(1, 0);
  for (int e = 0; e >= lo; --e) {
    if (e <= hi) t[e - lo] = p;
    p *= zi;
  }
  return t;
}

}  // namespace

Complex LaurentPoly2::eval(const Complex& x, const Complex& y) const {
  if (terms_.empty()) return Complex(0, 0);
  auto px = power_table(x, min_deg(Var::X), max_deg(Var::X));
  auto py = power_table(y, min_deg(Var::Y), max_deg(Var::Y));
  int mx = min_deg(Var::X), my = min_deg(Var::Y);
  Complex acc(0, 0);
  for (const auto& [k, c] : terms_) acc += px[k.first - mx] * py[k.second - my] * to_real(c);
  return acc;
}

CycNum LaurentPoly2::eval(const CycNum& x, const CycNum& y) const {
  CycNum acc;
  for (const auto& [k, c] : terms_) acc += CycNum(Rational(c)) * pow(x, k.first) * pow(y, k.second);
  return acc;
}

CPoly LaurentPoly2::slice(Var fixed, const Complex& value) const {
  Var free = fixed == Var::X ? Var::Y : Var::X;
  int lo = min_deg(free), hi = max_deg(free);
  CPoly out(terms_.empty() ? 0 : hi - lo + 1, Complex(0, 0));
  if (terms_.empty()) return out;
  auto pv = power_table(value, min_deg(fixed), max_deg(fixed));
  int mf = min_deg(fixed);
  for (const auto& [k, c] : terms_) {
    int ef = fixed == Var::X ? k.first : k.second;
    int eu = fixed == Var::X ? k.second : k.first;
    out[eu - lo] += pv[ef - mf] * to_real(c);
  }
  return out;
}

std::vector<LaurentPoly2> LaurentPoly2::coefficient_polys(Var fixed) const {
  Var free = fixed == Var::X ? Var::Y : Var::X;
  int lo = min_deg(free), hi = max_deg(free);
  std::vector<std::map<Key, BigInt>> parts(terms_.empty() ? 0 : hi - lo + 1);
  for (const auto& [k, c] : terms_) {
    int ef = fixed == Var::X ? k.first : k.second;
    int eu = fixed == Var::X ? k.second : k.first;
    parts[eu - lo][{ef, 0}] = c;
  }
  std::vector<LaurentPoly2> out;
  for (auto& p : parts) out.emplace_back(std::move(p), name(fixed), name(free));
  return out;
}

LaurentPoly2 LaurentPoly2::reciprocal() const {
  int a = min_deg(Var::X) + max_deg(Var::X), b = min_deg(Var::Y) + max_deg(Var::Y);
  std::map<Key, BigInt> t;
  for (const auto& [k, c] : terms_) t[{a - k.first, b - k.second}] = c;
  return LaurentPoly2(std::move(t), xname_, yname_).shifted_nonnegative();
}

LaurentPoly2 LaurentPoly2::swapped() const {
  std::map<Key, BigInt> t;
  for (const auto& [k, c] : terms_) t[{k.second, k.first}] = c;
  return LaurentPoly2(std::move(t), yname_, xname_);
}

LaurentPoly2 LaurentPoly2::shifted_nonnegative() const {
  int a = min_deg(Var::X), b = min_deg(Var::Y);
  std::map<Key, BigInt> t;
  for (const auto& [k, c] : terms_) t[{k.first - a, k.second - b}] = c;
  return LaurentPoly2(std::move(t), xname_, yname_);
}

LaurentPoly2 LaurentPoly2::substitute_inverse(Var v) const {
  std::map<Key, BigInt> t;
  for (const auto& [k, c] : terms_) {
    if (v == Var::X) t[{-k.first, k.second}] = c;
    else t[{k.first, -k.second}] = c;
  }
  return LaurentPoly2(std::move(t), xname_, yname_);
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  std::map<Key, BigInt> t = terms_;
  for (const auto& [k, c] : o.terms_) t[k] += c;
  return LaurentPoly2(std::move(t), xname_, yname_);
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const { return *this + (-o); }

LaurentPoly2 LaurentPoly2::operator-() const {
  std::map<Key, BigInt> t;
  for (const auto& [k, c] : terms_) t[k] = -c;
  return LaurentPoly2(std::move(t), xname_, yname_);
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  std::map<Key, BigInt> t;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) t[{a.first + b.first, a.second + b.second}] += ca * cb;
  }
  return LaurentPoly2(std::move(t), xname_, yname_);
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Key, BigInt>> v(terms_.begin(), terms_.end());
  // descending in y, then in x
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    BigInt a = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    std::vector<std::string> f;
    if (k.first != 0) f.push_back(xname_ + (k.first == 1 ? "" : "^" + std::to_string(k.first)));
    if (k.second != 0) f.push_back(yname_ + (k.second == 1 ? "" : "^" + std::to_string(k.second)));
    if (f.empty() || a != 1) f.insert(f.begin(), a.str());
    for (size_t i = 0; i < f.size(); ++i) os << (i ? "*" : "") << f[i];
  }
  return os.str();
}

namespace {

std::vector<IntPoly> y_coefficients(const LaurentPoly2& P0) {
  LaurentPoly2 P = P0.shifted_nonnegative();
  std::vector<IntPoly> c(P.max_deg(Var::Y) + 1);
  for (const auto& [k, v] : P.terms()) {
    IntPoly& p = c[k.second];
    if (static_cast<int>(p.size()) <= k.first) p.resize(k.first + 1);
    p[k.first] = v;
  }
  return c;
}

}  // namespace

IntPoly resultant_y(const LaurentPoly2& P, const LaurentPoly2& Q) {
  auto p = y_coefficients(P), q = y_coefficients(Q);
  int m = static_cast<int>(p.size()) - 1, n = static_cast<int>(q.size()) - 1;
  int sz = m + n;
  if (sz == 0) return IntPoly{BigInt(1)};
  std::vector<std::vector<IntPoly>> M(sz, std::vector<IntPoly>(sz));
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) M[r][r + j] = p[m - j];
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) M[n + r][r + j] = q[n - j];
  }
  IntPoly prev{BigInt(1)};
  int sign = 1;
  for (int k = 0; k < sz - 1; ++k) {
    if (degree(M[k][k]) < 0) {
      int piv = -1;
      for (int i = k + 1; i < sz; ++i) {
        if (degree(M[i][k]) >= 0) {
          piv = i;
          break;
        }
      }
      if (piv < 0) return {};
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < sz; ++i) {
      for (int j = k + 1; j < sz; ++j) {
        M[i][j] = divexact(sub(mul(M[i][j], M[k][k]), mul(M[i][k], M[k][j])), prev);
      }
      M[i][k].clear();
    }
    prev = M[k][k];
  }
  IntPoly det = M[sz - 1][sz - 1];
  if (sign < 0) {
    for (auto& c : det) c = -c;
  }
  trim(det);
  return det;
}

std::optional<RootOfUnity> snap_root_of_unity(const Complex& z, const Real& tol, long max_order) {
  Real t = atan2(im(z), re(z)) / (2 * pi());
  for (long n = 1; n <= max_order; ++n) {
    long k = static_cast<long>(llround(static_cast<double>(t * n)));
    k = mod_l(k, n);
    if (absz(z - root_of_unity(k, n)) < tol) {
      long g = gcd_l(k, n);
      if (g == 0) g = n;
      return RootOfUnity{k / g, n / g};
    }
  }
  return std::nullopt;
}

double torus_grid_min(const LaurentPoly2& P, long n) {
  std::vector<std::tuple<int, int, double>> t;
  for (const auto& [k, c] : P.terms()) t.emplace_back(k.first, k.second, c.convert_to<double>());
  double best = INFINITY;
  const double tau = 2 * M_PI;
  for (long a = 0; a < n; ++a) {
    double th = tau * (a + 0.5) / n;
    for (long b = 0; b < n; ++b) {
      double ph = tau * (b + 0.5) / n;
      std::complex<double> s = 0;
      for (const auto& [i, j, c] : t) s += c * std::polar(1.0, i * th + j * ph);
      best = std::min(best, std::abs(s));
    }
  }
  return best;
}

namespace {

struct ArcResult {
  bool certified = false;
  long arcs = 0;
  Real min_margin = -1;
};

// certify that R has no zero on |x| = 1 by arc bisection with the bound
// |R(e^{it}) - R(e^{im})| <= (sum k |c_k|) |t - m|
ArcResult certify_arcs(const IntPoly& R, int max_depth) {
  ArcResult out;
  Real slope = 0, l1 = 0;
  for (size_t k = 0; k < R.size(); ++k) {
    Real a = abs(to_real(R[k]));
    slope += a * k;
    l1 += a;
  }
  const Real rounding = l1 * Real(1e-28);
  struct Arc {
    Real a, b;
    int depth;
  };
  std::vector<Arc> todo;
  const int start = 64;
  for (int i = 0; i < start; ++i) todo.push_back({2 * pi() * i / start, 2 * pi() * (i + 1) / start, 0});
  while (!todo.empty()) {
    Arc arc = todo.back();
    todo.pop_back();
    Real m = (arc.a + arc.b) / 2, h = (arc.b - arc.a) / 2;
    Real margin = absz(horner(R, expi(m))) - slope * h - rounding;
    if (margin > 0) {
      ++out.arcs;
      if (out.min_margin < 0 || margin < out.min_margin) out.min_margin = margin;
    } else if (arc.depth >= max_depth) {
      return out;
    } else {
      todo.push_back({arc.a, m, arc.depth + 1});
      todo.push_back({m, arc.b, arc.depth + 1});
    }
  }
  out.certified = true;
  return out;
}

}  // namespace

TorusCertificate torus_nonvanishing(const LaurentPoly2& P, int digits, int max_depth, long grid) {
  if (P.is_zero()) throw Error("torus_nonvanishing: zero polynomial");
  digits = clamp_digits(digits);
  TorusCertificate cert;
  cert.resultant = resultant_y(P, P.reciprocal());
  cert.grid_size = grid;
  if (grid > 0) cert.grid_min = Real(torus_grid_min(P, grid));
  if (cert.resultant.empty()) {
    cert.note = "resultant vanishes identically (P shares a factor with its reciprocal)";
    return cert;
  }
  // Either resultant certifies; the squarefree part has the same zeros and
  // keeps the bisection linear near multiple roots.
  IntPoly sf = squarefree_part(cert.resultant);
  ArcResult ay = certify_arcs(sf, max_depth);
  if (ay.certified) {
    cert.status = TorusStatus::Nonvanishing;
    cert.arcs = ay.arcs;
    cert.min_margin = ay.min_margin;
    cert.note = "Res_y(P, P*) has no zero on |x|=1";
    return cert;
  }
  LaurentPoly2 S = P.swapped();
  IntPoly rx = resultant_y(S, S.reciprocal());
  if (!rx.empty()) {
    ArcResult ax = certify_arcs(squarefree_part(rx), max_depth);
    if (ax.certified) {
      cert.status = TorusStatus::Nonvanishing;
      cert.resultant = rx;
      cert.arcs = ax.arcs;
      cert.min_margin = ax.min_margin;
      cert.note = "Res_x(P, P*) has no zero on |y|=1";
      return cert;
    }
  }
  // census of the torus zeros over the unit-circle roots of Res_y
  auto xs = polynomial_roots(to_complex(sf));
  const Real tol_snap = Real(1e-8);
  const Real tol_res = pow10(-(digits / 2));
  for (const Complex& x0 : xs) {
    if (abs(absz(x0) - 1) > Real(1e-20)) continue;
    CPoly sl = P.y_slice(x0);
    auto ys = polynomial_roots(sl);
    for (const Complex& y0 : ys) {
      if (abs(absz(y0) - 1) > Real(1e-6)) continue;
      TorusPoint pt{x0, y0, std::nullopt, std::nullopt, false, absz(P.eval(x0, y0))};
      auto sx = snap_root_of_unity(x0, tol_snap), sy = snap_root_of_unity(y0, tol_snap);
      if (sx && sy) {
        Real res = absz(P.eval(sx->value(), sy->value()));
        if (res < tol_res) {
          pt.x_exact = sx;
          pt.y_exact = sy;
          pt.x = sx->value();
          pt.y = sy->value();
          pt.residual = res;
          pt.exact_zero = P.eval(sx->exact(), sy->exact()).is_zero();
        }
      }
      if (pt.residual >= tol_res) continue;
      bool dup = false;
      for (const auto& w : cert.witnesses) {
        if (absz(w.x - pt.x) < Real(1e-12) && absz(w.y - pt.y) < Real(1e-12)) dup = true;
      }
      if (!dup) cert.witnesses.push_back(pt);
    }
  }
  if (!cert.witnesses.empty()) {
    cert.status = TorusStatus::Vanishing;
    cert.note = std::to_string(cert.witnesses.size()) + " torus zeros";
  } else {
    cert.note = "resultants have zeros on the unit circle but no torus zero of P was located";
  }
  return cert;
}

}  // namespace mahlerlab
