#include "mahlerlab/modsym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mahlerlab {

namespace {

// a x + b y = g
long xgcd(long a, long b, long& x, long& y) {
  long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    long q = a / b;
    long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Mat2 cusp_matrix(const Cusp& c) {
  if (c.is_infinity()) return {1, 0, 0, 1};
  long x, y;
  xgcd(c.a, c.c, x, y);  // a x + c y = 1
  return {c.a, -y, c.c, x};
}

std::pair<long, long> cusp_key(const Cusp& cu, long N) {
  long g = gcd_l(cu.c, N);
  std::pair<long, long> best{-1, -1};
  for (long s : {1L, -1L}) {
    std::pair<long, long> k{mod_l(s * cu.c, N), mod_l(s * cu.a, g)};
    if (best.first < 0 || k < best) best = k;
  }
  return best;
}


std::vector<Cusp> gamma1_cusps(long N) {
  std::map<std::pair<long, long>, Cusp> found;
  for (long c = 0; c <= N * N; ++c) {
    for (long a = (c == 0 ? 1 : 0); a <= (c == 0 ? 1 : c + N); ++a) {
      if (gcd_l(a, c) != 1) continue;
      Cusp cu = Cusp::make(a, c);
      found.emplace(cusp_key(cu, N), cu);
    }
  }
  std::vector<Cusp> out;
  for (const auto& [k, cu] : found) out.push_back(cu);
  std::sort(out.begin(), out.end(), [](const Cusp& x, const Cusp& y) {
    return std::make_pair(x.c, x.a) < std::make_pair(y.c, y.a);
  });
  // infinity first
  std::stable_partition(out.begin(), out.end(), [](const Cusp& x) { return x.is_infinity(); });
  return out;
}

size_t gamma1_cusp_index(const std::vector<Cusp>& cusps, const Cusp& c, long N) {
  auto k = cusp_key(c, N);
  for (size_t i = 0; i < cusps.size(); ++i)
    if (cusp_key(cusps[i], N) == k) return i;
  throw Error("cusp " + c.to_string() + " not in the list");
}

long gamma1_cusp_width(const Cusp& c, long N) { return c.is_infinity() ? 1 : N / gcd_l(c.c, N); }

Cusp Cusp::make(long a, long c) {
  if (c == 0) {
    if (a == 0) throw Error("0/0 is not a cusp");
    return infinity();
  }
  long g = gcd_l(a, c);
  a /= g;
  c /= g;
  if (c < 0) {
    a = -a;
    c = -c;
  }
  return {a, c};
}

Cusp Cusp::apply(const Mat2& g) const { return make(g.a * a + g.b * c, g.c * a + g.d * c); }

std::string Cusp::to_string() const {
  if (is_infinity()) return "oo";
  if (c == 1) return std::to_string(a);
  return std::to_string(a) + "/" + std::to_string(c);
}

std::vector<Mat2> heilbronn_merel(long n) {
  std::vector<Mat2> out;
  for (long a = 1; a <= n; ++a) {
    long q = n / a;
    if (q * a == n) {
      long d = q;
      for (long b = 0; b < a; ++b) out.push_back({a, b, 0, d});
      for (long c = 1; c < d; ++c) out.push_back({a, 0, c, d});
    }
    for (long d = q + 1; d <= n; ++d) {
      long bc = a * d - n;
      for (long c = bc / a + 1; c < d; ++c)
        if (bc % c == 0) out.push_back({a, bc / c, c, d});
    }
  }
  return out;
}

// ---- Chain ----

Chain& Chain::operator+=(const Chain& o) {
  if (!sp_) sp_ = o.sp_;
  if (c_.empty()) c_.assign(o.c_.size(), CycNum());
  if (sp_ != o.sp_ || c_.size() != o.c_.size()) throw Error("chains live in different spaces");
  for (size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  return *this;
}

Chain& Chain::operator-=(const Chain& o) { return *this += -o; }

Chain& Chain::operator*=(const CycNum& s) {
  for (auto& x : c_)
    if (!x.is_zero()) x *= s;
  return *this;
}

bool Chain::operator==(const Chain& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

bool Chain::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const CycNum& x) { return x.is_zero(); });
}

std::vector<CycNum> Chain::boundary() const {
  std::vector<CycNum> out(sp_->num_cusps());
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    for (auto [cls, m] : sp_->basis_boundary(j)) out[cls] += c_[j] * CycNum(m);
  }
  return out;
}

bool Chain::is_closed() const {
  auto b = boundary();
  return std::all_of(b.begin(), b.end(), [](const CycNum& x) { return x.is_zero(); });
}

std::string Chain::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    Symbol s = sp_->basis_symbol(j);
    os << "(" << c_[j].to_string() << ")*xi(" << s.u << "," << s.v << ")";
  }
  return first ? "0" : os.str();
}

// ---- SymbolSpace ----

SymbolSpace::SymbolSpace(long N) : N_(N) {
  if (N < 1) throw Error("level must be positive");
  index_.assign(N * N, -1);
  for (long u = 0; u < N; ++u)
    for (long v = 0; v < N; ++v)
      if (gcd_l(gcd_l(u, v), N) == 1) {
        index_[u * N + v] = static_cast<long>(syms_.size());
        syms_.push_back({u, v});
      }
  size_t n = syms_.size();

  // 2-term relations x = -x sigma and x = -x by a signed union-find
  std::vector<size_t> parent(n);
  std::vector<int> sgn(n, 1);
  std::vector<char> dead(n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::pair<size_t, int>(size_t)> find = [&](size_t i) -> std::pair<size_t, int> {
    if (parent[i] == i) return {i, 1};
    auto [r, s] = find(parent[i]);
    parent[i] = r;
    sgn[i] *= s;
    return {r, sgn[i]};
  };
  auto unite = [&](size_t i, size_t j, int s) {  // x_i = s x_j
    auto [ri, si] = find(i);
    auto [rj, sj] = find(j);
    int t = si * s * sj;  // x_ri = t x_rj
    if (ri == rj) {
      if (t != 1) dead[ri] = 1;
      return;
    }
    parent[ri] = rj;
    sgn[ri] = t;
    if (dead[ri]) dead[rj] = 1;
  };
  for (size_t i = 0; i < n; ++i) {
    Symbol x = syms_[i];
    unite(i, *index(x.v, -x.u), -1);
    unite(i, *index(-x.u, -x.v), 1);
  }
  std::vector<long> cls_of_root(n, -1);
  std::vector<size_t> class_root;
  std::vector<std::pair<long, int>> sym_class(n);  // (class or -1, sign)
  for (size_t i = 0; i < n; ++i) {
    auto [r, s] = find(i);
    if (dead[r]) {
      sym_class[i] = {-1, 0};
      continue;
    }
    if (cls_of_root[r] < 0) {
      cls_of_root[r] = static_cast<long>(class_root.size());
      class_root.push_back(r);
    }
    sym_class[i] = {cls_of_root[r], s};
  }
  size_t ncls = class_root.size();

  // 3-term relations, one row per tau-orbit
  Matrix<Rational> rows;
  std::vector<char> seen(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    Symbol x = syms_[i];
    size_t i1 = *index(x.v, -x.u - x.v);
    Symbol y = syms_[i1];
    size_t i2 = *index(y.v, -y.u - y.v);
    seen[i] = seen[i1] = seen[i2] = 1;
    std::vector<Rational> row(ncls, Rational(0));
    bool any = false;
    for (size_t k : {i, i1, i2}) {
      auto [c, s] = sym_class[k];
      if (c < 0) continue;
      row[c] += s;
      any = true;
    }
    if (any && std::any_of(row.begin(), row.end(), [](const Rational& r) { return r != 0; }))
      rows.push_back(std::move(row));
  }
  std::vector<size_t> piv = rref(rows);
  std::vector<long> free_pos(ncls, -1), piv_row(ncls, -1);
  for (size_t r = 0; r < piv.size(); ++r) piv_row[piv[r]] = static_cast<long>(r);
  for (size_t c = 0; c < ncls; ++c)
    if (piv_row[c] < 0) {
      free_pos[c] = static_cast<long>(basis_sym_.size());
      basis_sym_.push_back(class_root[c]);
    }
  std::vector<std::vector<std::pair<size_t, Rational>>> cls_coords(ncls);
  for (size_t c = 0; c < ncls; ++c) {
    if (free_pos[c] >= 0) {
      cls_coords[c].push_back({static_cast<size_t>(free_pos[c]), Rational(1)});
      continue;
    }
    const auto& row = rows[piv_row[c]];
    for (size_t f = 0; f < ncls; ++f)
      if (free_pos[f] >= 0 && row[f] != 0) cls_coords[c].push_back({static_cast<size_t>(free_pos[f]), -row[f]});
  }
  coords_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    auto [c, s] = sym_class[i];
    if (c < 0) continue;
    for (auto [j, q] : cls_coords[c]) coords_[i].push_back({j, s > 0 ? q : Rational(-q)});
  }

  // cusps and boundary
  for (size_t i = 0; i < n; ++i) {
    Mat2 g = lift(syms_[i]);
    cusp_class_or_add(Cusp::make(g.a, g.c));
    cusp_class_or_add(Cusp::make(g.b, g.d));
  }
  bnd_.resize(dim());
  Matrix<Rational> bm(num_cusps(), std::vector<Rational>(dim(), Rational(0)));
  for (size_t j = 0; j < dim(); ++j) {
    Mat2 g = lift(syms_[basis_sym_[j]]);
    size_t end = cusp_class(Cusp::make(g.a, g.c)), start = cusp_class(Cusp::make(g.b, g.d));
    if (end != start) {
      bnd_[j] = {{end, 1}, {start, -1}};
      bm[end][j] += 1;
      bm[start][j] -= 1;
    }
  }
  h1_ = nullspace(bm, dim());
}

std::optional<size_t> SymbolSpace::index(long u, long v) const {
  long k = index_[mod_l(u, N_) * N_ + mod_l(v, N_)];
  if (k < 0) return std::nullopt;
  return static_cast<size_t>(k);
}

Symbol SymbolSpace::act(Symbol x, const Mat2& g) const {
  return {mod_l(x.u * g.a + x.v * g.c, N_), mod_l(x.u * g.b + x.v * g.d, N_)};
}

Mat2 SymbolSpace::lift(Symbol x) const {
  long c = mod_l(x.u, N_), d = mod_l(x.v, N_);
  if (c == 0) c = N_;
  while (gcd_l(c, d) != 1) d += N_;
  long xx, yy;
  xgcd(c, d, xx, yy);  // c xx + d yy = 1
  return {yy, -xx, c, d};
}

size_t SymbolSpace::cusp_class_or_add(const Cusp& c) {
  auto key = cusp_key(c, N_);
  auto it = cusp_keys_.find(key);
  if (it == cusp_keys_.end()) {
    cusp_keys_[key] = cusp_reps_.size();
    cusp_reps_.push_back(c);
    return cusp_reps_.size() - 1;
  }
  Cusp& rep = cusp_reps_[it->second];
  if (c.c < rep.c || (c.c == rep.c && std::labs(c.a) < std::labs(rep.a))) rep = c;
  return it->second;
}

size_t SymbolSpace::cusp_class(const Cusp& c) const {
  auto it = cusp_keys_.find(cusp_key(c, N_));
  if (it == cusp_keys_.end()) throw Error("unknown cusp class for " + c.to_string());
  return it->second;
}

Chain SymbolSpace::zero() const { return Chain(this, std::vector<CycNum>(dim())); }

Chain SymbolSpace::xi(long u, long v) const {
  auto i = index(u, v);
  if (!i) throw Error("(" + std::to_string(u) + "," + std::to_string(v) + ") is not in E_N");
  std::vector<CycNum> c(dim());
  for (auto [j, q] : coords_[*i]) c[j] = CycNum(q);
  return Chain(this, std::move(c));
}

Chain SymbolSpace::from_rational(const std::vector<Rational>& v) const {
  if (v.size() != dim()) throw Error("coordinate vector has wrong length");
  std::vector<CycNum> c(dim());
  for (size_t j = 0; j < dim(); ++j) c[j] = CycNum(v[j]);
  return Chain(this, std::move(c));
}

Chain SymbolSpace::path(const Cusp& from, const Cusp& to) const {
  // {oo, a/c} through the convergents of a/c
  auto from_inf = [&](const Cusp& cu) {
    std::vector<CycNum> acc(dim());
    if (cu.is_infinity()) return acc;
    long num = cu.a, den = cu.c;
    long q_prev = 0, q_prev2 = 1;  // q_{k-1}, q_{k-2}
    long sign = -1;                // (-1)^{k-1}
    while (den != 0) {
      long t = floor_div(num, den);
      long qk = t * q_prev + q_prev2;
      auto i = index(qk, sign * q_prev);
      for (auto [j, r] : coords_[*i]) acc[j] += CycNum(r);
      q_prev2 = q_prev;
      q_prev = qk;
      long rem = num - t * den;
      num = den;
      den = rem;
      sign = -sign;
    }
    return acc;
  };
  Chain out(this, from_inf(to));
  out -= Chain(this, from_inf(from));
  return out;
}

const SymbolSpace::SparseImage& SymbolSpace::op_images(const std::string& key,
                                                        const std::function<Chain(Symbol)>& on_symbol) const {
  auto it = op_cache_.find(key);
  if (it != op_cache_.end()) return it->second;
  SparseImage img(dim());
  for (size_t j = 0; j < dim(); ++j) {
    Chain c = on_symbol(syms_[basis_sym_[j]]);
    for (size_t k = 0; k < dim(); ++k)
      if (!c.coeffs()[k].is_zero()) img[j].push_back({k, c.coeffs()[k].to_rational()});
  }
  return op_cache_.emplace(key, std::move(img)).first->second;
}

Chain SymbolSpace::apply_images(const SparseImage& img, const Chain& c) const {
  std::vector<CycNum> out(dim());
  for (size_t j = 0; j < dim(); ++j) {
    const CycNum& a = c.coeffs()[j];
    if (a.is_zero()) continue;
    for (const auto& [k, q] : img[j]) out[k] += a * CycNum(q);
  }
  return Chain(this, std::move(out));
}

Chain SymbolSpace::star(const Chain& c) const {
  return apply_images(op_images("star", [&](Symbol x) { return xi(-x.u, x.v); }), c);
}

Chain SymbolSpace::diamond(long d, const Chain& c) const {
  if (gcd_l(d, N_) != 1) throw Error("diamond operator needs d coprime to the level");
  long dm = mod_l(d, N_);
  return apply_images(op_images("d" + std::to_string(dm), [&](Symbol x) { return xi(dm * x.u, dm * x.v); }), c);
}

Chain SymbolSpace::fricke(const Chain& c) const {
  auto w = [&](const Cusp& p) { return Cusp::make(-p.c, N_ * p.a); };
  return apply_images(op_images("W",
                                [&](Symbol x) {
                                  Mat2 g = lift(x);
                                  return path(w(Cusp::make(g.b, g.d)), w(Cusp::make(g.a, g.c)));
                                }),
                      c);
}

std::vector<Symbol> SymbolSpace::hecke_symbols(long p, Symbol x) const {
  std::vector<Symbol> out;
  auto hs = heilbronn_merel(p);
  for (const Mat2& h : hs) {
    Symbol y = act(x, h);
    if (index(y.u, y.v)) out.push_back(y);
  }
  return out;
}

Chain SymbolSpace::hecke(long p, const Chain& c) const {
  auto hs = heilbronn_merel(p);
  return apply_images(op_images("T" + std::to_string(p),
                                [&](Symbol x) {
                                  Chain acc = zero();
                                  for (const Mat2& h : hs) {
                                    Symbol y = act(x, h);
                                    if (index(y.u, y.v)) acc += xi(y.u, y.v);
                                  }
                                  return acc;
                                }),
                      c);
}

Chain SymbolSpace::project(const Chain& c, const DirichletChar& psi) const {
  if (psi.modulus() != N_) throw Error("character modulus differs from the level");
  Chain acc = zero();
  long phi = 0;
  for (long d = 1; d <= N_; ++d) {
    if (gcd_l(d, N_) != 1) continue;
    ++phi;
    acc += psi.conj()(d) * diamond(d, c);
  }
  return CycNum(Rational(1, phi)) * acc;
}

// ---- linear algebra on chains ----

std::optional<std::vector<CycNum>> express(const Chain& target, const std::vector<Chain>& basis) {
  Matrix<CycNum> vecs;
  for (const auto& b : basis) vecs.push_back(b.coeffs());
  Matrix<CycNum> probe = vecs;
  if (rank(probe) != basis.size()) throw Error("basis chains are linearly dependent");
  return solve_in_span(vecs, target.coeffs());
}

Chain merel_cycle(const SymbolSpace& sp, const std::function<CycNum(Symbol)>& xi_f) {
  long N = sp.level();
  auto sigma = [&](Symbol x) { return Symbol{mod_l(x.v, N), mod_l(-x.u, N)}; };
  auto tau = [&](Symbol x) { return Symbol{mod_l(x.v, N), mod_l(-x.u - x.v, N)}; };
  auto name = [](Symbol x) { return "(" + std::to_string(x.u) + "," + std::to_string(x.v) + ")"; };
  Chain acc = sp.zero();
  for (size_t i = 0; i < sp.num_symbols(); ++i) {
    Symbol x = sp.symbol(i);
    CycNum fx = xi_f(x);
    if (!(fx + xi_f(sigma(x))).is_zero()) throw Error("relation xi_f(x sigma) = -xi_f(x) fails at x = " + name(x));
    CycNum ft = xi_f(tau(x));
    if (!(fx + ft + xi_f(tau(tau(x)))).is_zero())
      throw Error("relation xi_f(x) + xi_f(x tau) + xi_f(x tau^2) = 0 fails at x = " + name(x));
    CycNum coef = fx + CycNum(2) * ft;
    if (coef.is_zero()) continue;
    acc += coef * sp.xi(x.u, x.v);
  }
  acc *= CycNum(Rational(-1, 3));
  if (!acc.is_closed()) throw Error("Merel cycle is not closed");
  return acc;
}

Chain merel_cycle_minus(const SymbolSpace& sp, const std::function<CycNum(Symbol)>& xi_f) {
  long N = sp.level();
  return merel_cycle(sp, [&](Symbol x) {
    CycNum s = xi_f(x) + xi_f(Symbol{mod_l(-x.u, N), x.v});
    return s.scale(Rational(1, 2));
  });
}

CycNum FormalSymbols::value(const SymbolSpace& sp, Symbol x, size_t k) const {
  auto i = sp.index(x.u, x.v);
  if (!i) throw Error("symbol outside E_N");
  return values[*i][k];
}

FormalSymbols formal_plus_symbols(const SymbolSpace& sp, const DirichletChar& psi, const std::vector<Symbol>& unknowns) {
  // P+ pi_psi on each basis vector
  size_t n = sp.dim();
  std::vector<Chain> img;
  for (size_t j = 0; j < n; ++j) {
    std::vector<CycNum> e(n);
    e[j] = CycNum(1);
    Chain c = sp.project(Chain(&sp, e), psi);
    c += sp.star(c);
    img.push_back(CycNum(Rational(1, 2)) * c);
  }
  auto apply = [&](Symbol x) {
    std::vector<CycNum> out(n);
    auto i = sp.index(x.u, x.v);
    if (!i) throw Error("symbol outside E_N");
    for (auto [j, q] : sp.coords(*i))
      for (size_t k = 0; k < n; ++k)
        if (!img[j].coeffs()[k].is_zero()) out[k] += CycNum(q) * img[j].coeffs()[k];
    return out;
  };
  size_t K = unknowns.size(), S = sp.num_symbols();
  Matrix<CycNum> m(n, std::vector<CycNum>(K + S));
  auto put = [&](size_t col, const std::vector<CycNum>& v) {
    for (size_t r = 0; r < n; ++r) m[r][col] = v[r];
  };
  for (size_t k = 0; k < K; ++k) put(k, apply(unknowns[k]));
  for (size_t i = 0; i < S; ++i) put(K + i, apply(sp.symbol(i)));
  auto piv = rref(m);
  if (piv.size() != K || (K > 0 && piv.back() != K - 1))
    throw Error("the chosen symbols do not form a basis of the plus part of the isotypic component");
  FormalSymbols out;
  out.unknowns = unknowns;
  out.values.assign(S, std::vector<CycNum>(K));
  for (size_t i = 0; i < S; ++i)
    for (size_t k = 0; k < K; ++k) out.values[i][k] = m[k][K + i];
  return out;
}

RebolledoTable rebolledo_reduce(const SymbolSpace& sp, const DirichletChar& psi) {
  long N = sp.level();
  RebolledoTable t;
  t.basis = {{1, 0}, {1, 2}, {1, 3}, {1, mod_l(-3, N)}};
  std::vector<Chain> b;
  for (Symbol x : t.basis) b.push_back(sp.project(sp.xi(x.u, x.v), psi));
  std::vector<Symbol> targets{{0, 1}};
  for (long v = 0; v < N; ++v) targets.push_back({1, v});
  for (Symbol x : targets) {
    auto c = express(sp.project(sp.xi(x.u, x.v), psi), b);
    if (!c) throw Error("xi(" + std::to_string(x.u) + "," + std::to_string(x.v) + ")^psi is outside the span");
    t.cycles.push_back({x, *c});
  }
  t.periods = formal_plus_symbols(sp, psi, {{1, 0}, {1, 2}, {1, 3}});
  return t;
}

// ---- Hecke eigensystems ----

std::vector<long> primes_up_to(long n) {
  std::vector<char> comp(std::max(n + 1, 2L), 0);
  std::vector<long> out;
  for (long i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) comp[j] = 1;
  }
  return out;
}

std::vector<CycNum> extend_coefficients(long N, const DirichletChar& chi, const std::vector<long>& primes,
                                        const std::vector<CycNum>& ap, long bound) {
  std::vector<CycNum> an(bound + 1);
  if (bound >= 1) an[1] = CycNum(1);
  std::vector<long> spf(bound + 1, 0);
  for (long i = 2; i <= bound; ++i)
    if (spf[i] == 0)
      for (long j = i; j <= bound; j += i)
        if (spf[j] == 0) spf[j] = i;
  std::map<long, CycNum> apm;
  for (size_t i = 0; i < primes.size(); ++i) apm[primes[i]] = ap[i];
  for (long n = 2; n <= bound; ++n) {
    long p = spf[n], m = n, pk = 1;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    if (m > 1) {
      an[n] = an[pk] * an[m];
      continue;
    }
    auto it = apm.find(p);
    if (it == apm.end()) throw Error("missing a_p for p = " + std::to_string(p));
    if (n == p) {
      an[n] = it->second;
    } else if (N % p == 0) {
      an[n] = it->second * an[n / p];
    } else {
      an[n] = it->second * an[n / p] - chi(p) * CycNum(p) * an[n / p / p];
    }
  }
  return an;
}

std::vector<Complex> Eigensystem::embed() const {
  std::vector<Complex> out;
  out.reserve(an.size());
  for (const auto& a : an) out.push_back(a.embed());
  return out;
}

Eigensystem hecke_eigensystem(const SymbolSpace& sp, const DirichletChar& psi, long bound) {
  if (!psi.is_even()) throw Error("weight 2 forms need an even character");
  long N = sp.level();
  size_t n = sp.dim();
  // the line H1 ∩ psi-component ∩ plus part
  Matrix<CycNum> cand;
  for (const auto& h : sp.h1_basis()) {
    Chain c = sp.project(sp.from_rational(h), psi);
    c += sp.star(c);
    cand.push_back(c.coeffs());
  }
  Matrix<CycNum> red = cand;
  auto piv = rref(red);
  if (piv.size() != 1)
    throw Error("plus part of the " + psi.describe() + " component of H1 has dimension " +
                std::to_string(piv.size()) + ", expected 1");
  Chain x0(&sp, red[0]);
  size_t j = piv[0];  // x0_j = 1 after reduction

  // coordinate j of every symbol over a common denominator
  BigInt D = 1;
  for (size_t i = 0; i < sp.num_symbols(); ++i)
    for (auto [k, q] : sp.coords(i))
      if (k == j) D = boost::multiprecision::lcm(D, BigInt(boost::multiprecision::denominator(q)));
  std::vector<long> phi(sp.num_symbols(), 0);
  for (size_t i = 0; i < sp.num_symbols(); ++i)
    for (auto [k, q] : sp.coords(i))
      if (k == j) {
        BigInt v = boost::multiprecision::numerator(q) * (D / boost::multiprecision::denominator(q));
        if (abs(v) > BigInt(1L << 40)) throw Error("symbol coordinates too large for the Hecke sums");
        phi[i] = v.convert_to<long>();
      }

  Eigensystem es;
  es.level = N;
  es.chi = psi;
  es.bound = bound;
  es.primes = primes_up_to(bound);
  for (long p : es.primes) {
    auto hs = heilbronn_merel(p);
    CycNum acc;
    for (size_t i = 0; i < n; ++i) {
      if (x0.coeffs()[i].is_zero()) continue;
      Symbol x = sp.basis_symbol(i);
      long s = 0;
      for (const Mat2& h : hs) {
        Symbol y = sp.act(x, h);
        if (auto k = sp.index(y.u, y.v)) s += phi[*k];
      }
      if (s != 0) acc += x0.coeffs()[i] * CycNum(s);
    }
    CycNum ap = acc.scale(Rational(1) / Rational(D));
    if (N % p != 0 && ap != psi(p) * ap.conj())
      throw Error("a_" + std::to_string(p) + " = " + ap.to_string() + " violates a_p = psi(p) conj(a_p)");
    if (p <= 7 && sp.hecke(p, x0) != ap * x0)
      throw Error("x0 is not an eigenvector of T_" + std::to_string(p));
    es.ap.push_back(ap);
  }
  es.an = extend_coefficients(N, psi, es.primes, es.ap, bound);
  return es;
}

// ---- periods ----

std::optional<Mat2> gamma1_witness(long N, const Cusp& from, const Cusp& to, long bound) {
  if (bound < 0) bound = 10 * N * N;
  Mat2 gf = cusp_matrix(from), gt = cusp_matrix(to);
  Mat2 gfi = gf.inverse();
  std::optional<Mat2> best;
  for (long e : {1L, -1L})
    for (long t = -bound; t <= bound; ++t) {
      Mat2 h = gt * Mat2{e, t, 0, e} * gfi;
      if (mod_l(h.c, N) != 0) continue;
      long a = mod_l(h.a, N), d = mod_l(h.d, N);
      bool ok = (a == mod_l(1, N) && d == mod_l(1, N)) || (a == mod_l(-1, N) && d == mod_l(-1, N));
      if (!ok) continue;
      if (!best || std::labs(h.c) < std::labs(best->c)) best = h;
    }
  return best;
}

Complex qseries_primitive(const Complex& z, const std::vector<Complex>& an) {
  Complex q = e2pii(z), qn = q, acc(0, 0);
  for (size_t n = 1; n < an.size(); ++n) {
    acc += an[n] * qn / Real(n);
    qn *= q;
  }
  return acc;
}

Complex hecke_period(const Mat2& h0, const std::vector<Complex>& an) {
  Mat2 h = h0;
  if (h.c == 0) return Complex(0, 0);
  if (h.c < 0) h = {-h.a, -h.b, -h.c, -h.d};
  Complex z(Real(-h.d) / h.c, Real(1) / h.c);
  Complex hz(Real(h.a) / h.c, Real(1) / h.c);
  return qseries_primitive(hz, an) - qseries_primitive(z, an);
}

const std::vector<Loop>& SymbolSpace::h1_loops() const {
  if (loops_) return *loops_;
  std::vector<Loop> out;
  Matrix<Rational> basis;
  size_t target = h1_rank();
  // loops z -> g z for g in Gamma1(N) by increasing lower-left entry
  for (long c = N_; out.size() < target; c += N_) {
    if (c > 10 * N_ * N_) throw Error("no loop basis of H1 with lower-left entries up to 10 N^2");
    for (long d = 1; d < c && out.size() < target; ++d) {
      long dm = mod_l(d, N_);
      if ((dm != mod_l(1, N_) && dm != mod_l(-1, N_)) || gcd_l(d, c) != 1) continue;
      long a = *inverse_mod(d, c);
      long b = (a * d - 1) / c;
      Chain ch = path(Cusp::infinity(), Cusp::make(a, c));
      std::vector<Rational> v;
      for (const auto& x : ch.coeffs()) v.push_back(x.to_rational());
      Matrix<Rational> probe = basis;
      probe.push_back(v);
      if (rank(probe) == basis.size()) continue;
      basis.push_back(v);
      out.push_back({Mat2{a, b, c, d}, ch});
    }
  }
  loops_ = std::move(out);
  return *loops_;
}

namespace {

long terms_for(long c, int digits) {
  return static_cast<long>(std::ceil(c * digits * std::log(10.0) / (2 * M_PI))) + 10;
}

}  // namespace

std::vector<CycNum> loop_coordinates(const Chain& closed) {
  if (!closed.is_closed()) throw Error("period pairing needs a closed chain");
  const auto& loops = closed.space().h1_loops();
  Matrix<CycNum> vecs;
  for (const auto& l : loops) vecs.push_back(l.chain.coeffs());
  auto c = solve_in_span(vecs, closed.coeffs());
  if (!c) throw Error("closed chain outside the span of the loop basis");
  return *c;
}

long period_terms_needed(const Chain& closed, int digits) {
  auto coef = loop_coordinates(closed);
  const auto& loops = closed.space().h1_loops();
  long c = 0;
  for (size_t k = 0; k < coef.size(); ++k)
    if (!coef[k].is_zero()) c = std::max(c, std::labs(loops[k].g.c));
  return terms_for(c, digits);
}

Complex period_pairing(const Chain& closed, const std::vector<Complex>& an, int digits) {
  auto coef = loop_coordinates(closed);
  const auto& loops = closed.space().h1_loops();
  long need = period_terms_needed(closed, digits);
  if (static_cast<long>(an.size()) <= need)
    throw Error("period pairing needs " + std::to_string(need) + " coefficients, got " +
                std::to_string(an.size() == 0 ? 0 : an.size() - 1));
  Complex acc(0, 0);
  for (size_t k = 0; k < coef.size(); ++k) {
    if (coef[k].is_zero()) continue;
    long m = terms_for(std::labs(loops[k].g.c), digits);
    std::vector<Complex> a(an.begin(), an.begin() + m + 1);
    acc += coef[k].embed() * hecke_period(loops[k].g, a);
  }
  return acc;
}

std::optional<std::pair<long, long>> lattice_coords(const Complex& v, const Complex& b1, const Complex& b2,
                                                    const Real& tol, Real* residual) {
  Real det = re(b1) * im(b2) - re(b2) * im(b1);
  if (det == 0) return std::nullopt;
  Real m = (re(v) * im(b2) - re(b2) * im(v)) / det;
  Real n = (re(b1) * im(v) - re(v) * im(b1)) / det;
  long mi = static_cast<long>(boost::multiprecision::round(m)), ni = static_cast<long>(boost::multiprecision::round(n));
  Real r = absz(v - Real(mi) * b1 - Real(ni) * b2);
  if (residual) *residual = r;
  if (r >= tol) return std::nullopt;
  return std::make_pair(mi, ni);
}

}  // namespace mahlerlab
