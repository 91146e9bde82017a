#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mahlerlab/cyclo.hpp"
#include "mahlerlab/linalg.hpp"

namespace mahlerlab {

struct Mat2 {
  long a = 1, b = 0, c = 0, d = 1;
  long det() const { return a * d - b * c; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 inverse() const { return {d, -b, -c, a}; }  // det 1 only
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

// a/c in lowest terms with c >= 0; infinity is 1/0
struct Cusp {
  long a = 1, c = 0;
  static Cusp make(long a, long c);
  static Cusp infinity() { return {1, 0}; }
  bool is_infinity() const { return c == 0; }
  Cusp apply(const Mat2& g) const;  // g(a/c)
  bool operator==(const Cusp& o) const { return a == o.a && c == o.c; }
  std::string to_string() const;
};

// some matrix in SL2(Z) sending infinity to the cusp
Mat2 cusp_matrix(const Cusp& c);
// class of a cusp under Gamma1(N) (up to sign)
std::pair<long, long> cusp_key(const Cusp& c, long N);
// one representative per Gamma1(N) cusp class, infinity first, then by denominator
std::vector<Cusp> gamma1_cusps(long N);
size_t gamma1_cusp_index(const std::vector<Cusp>& cusps, const Cusp& c, long N);
long gamma1_cusp_width(const Cusp& c, long N);

struct Symbol {
  long u = 0, v = 1;
  bool operator==(const Symbol& o) const { return u == o.u && v == o.v; }
};

// Merel's determinant-n matrices; sum_h xi(x h) realizes T_n on Manin symbols
std::vector<Mat2> heilbronn_merel(long n);

class SymbolSpace;

// Element of relative homology with cyclotomic coefficients, stored in the
// coordinates of the quotient by the Manin relations.
class Chain {
 public:
  Chain() = default;
  Chain(const SymbolSpace* s, std::vector<CycNum> c) : sp_(s), c_(std::move(c)) {}

  const SymbolSpace& space() const { return *sp_; }
  const std::vector<CycNum>& coeffs() const { return c_; }

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain& operator*=(const CycNum& s);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const CycNum& s, Chain a) { return a *= s; }
  Chain operator-() const { return CycNum(-1) * *this; }
  bool operator==(const Chain& o) const;
  bool is_zero() const;

  std::vector<CycNum> boundary() const;  // over cusp classes
  bool is_closed() const;
  std::string to_string() const;

 private:
  const SymbolSpace* sp_ = nullptr;
  std::vector<CycNum> c_;
};

// loop z -> g z, g in Gamma1(N), with its class in H1
struct Loop {
  Mat2 g;
  Chain chain;
};

class SymbolSpace {
 public:
  explicit SymbolSpace(long N);

  long level() const { return N_; }
  size_t num_symbols() const { return syms_.size(); }
  Symbol symbol(size_t i) const { return syms_[i]; }
  std::optional<size_t> index(long u, long v) const;
  Symbol act(Symbol x, const Mat2& g) const;  // right action, reduced mod N

  size_t dim() const { return basis_sym_.size(); }
  const std::vector<std::pair<size_t, Rational>>& coords(size_t sym) const { return coords_[sym]; }
  Symbol basis_symbol(size_t j) const { return syms_[basis_sym_[j]]; }

  // a matrix in SL2(Z) with bottom row congruent to x
  Mat2 lift(Symbol x) const;

  size_t num_cusps() const { return cusp_reps_.size(); }
  size_t cusp_class(const Cusp& c) const;
  const Cusp& cusp_rep(size_t cls) const { return cusp_reps_[cls]; }

  Chain zero() const;
  Chain xi(long u, long v) const;
  Chain from_rational(const std::vector<Rational>& v) const;
  Chain path(const Cusp& from, const Cusp& to) const;  // {from, to}

  // boundary of basis vector j as (cusp class, coefficient)
  const std::vector<std::pair<size_t, long>>& basis_boundary(size_t j) const { return bnd_[j]; }
  const Matrix<Rational>& h1_basis() const { return h1_; }
  size_t h1_rank() const { return h1_.size(); }
  // basis of H1 made of loops with small lower-left entries; built on first use
  const std::vector<Loop>& h1_loops() const;

  Chain star(const Chain& c) const;
  Chain diamond(long d, const Chain& c) const;
  Chain fricke(const Chain& c) const;
  Chain hecke(long p, const Chain& c) const;
  Chain project(const Chain& c, const DirichletChar& psi) const;

  // xi(x) T_p as a sum of symbols
  std::vector<Symbol> hecke_symbols(long p, Symbol x) const;

 private:
  using SparseImage = std::vector<std::vector<std::pair<size_t, Rational>>>;
  Chain apply_images(const SparseImage& img, const Chain& c) const;
  const SparseImage& op_images(const std::string& key, const std::function<Chain(Symbol)>& on_symbol) const;
  size_t cusp_class_or_add(const Cusp& c);

  long N_;
  std::vector<Symbol> syms_;
  std::vector<long> index_;  // N*N table, -1 outside E_N
  std::vector<std::vector<std::pair<size_t, Rational>>> coords_;
  std::vector<size_t> basis_sym_;
  std::map<std::pair<long, long>, size_t> cusp_keys_;
  std::vector<Cusp> cusp_reps_;
  std::vector<std::vector<std::pair<size_t, long>>> bnd_;
  Matrix<Rational> h1_;
  mutable std::map<std::string, SparseImage> op_cache_;
  mutable std::optional<std::vector<Loop>> loops_;
};

// Exact coordinates of `target` in the span of `basis`, if it lies there.
std::optional<std::vector<CycNum>> express(const Chain& target, const std::vector<Chain>& basis);

// -(1/3) sum_x (xi_f(x) + 2 xi_f(x tau)) xi(x); rejects input violating the Manin relations.
Chain merel_cycle(const SymbolSpace& sp, const std::function<CycNum(Symbol)>& xi_f);
// same with xi_f^+(x) = (xi_f(x) + xi_f(x^c)) / 2, x^c = (-u, v)
Chain merel_cycle_minus(const SymbolSpace& sp, const std::function<CycNum(Symbol)>& xi_f);

// Formal plus-symbols of a form with character psi: xi_f^+(x) = sum_k values[x][k] * xi_f^+(unknowns[k]).
struct FormalSymbols {
  std::vector<Symbol> unknowns;
  std::vector<std::vector<CycNum>> values;  // indexed by symbol index
  CycNum value(const SymbolSpace& sp, Symbol x, size_t k) const;
};
FormalSymbols formal_plus_symbols(const SymbolSpace& sp, const DirichletChar& psi, const std::vector<Symbol>& unknowns);

struct RebolledoTable {
  std::vector<Symbol> basis;  // cycles xi(x)^psi spanning the psi-component
  std::vector<std::pair<Symbol, std::vector<CycNum>>> cycles;        // xi(x)^psi in that basis
  FormalSymbols periods;  // xi_f^+(1, v), v != 0, over xi_f^+(1,2), xi_f^+(1,3)
};
RebolledoTable rebolledo_reduce(const SymbolSpace& sp, const DirichletChar& psi);

struct Eigensystem {
  long level = 0;
  DirichletChar chi = DirichletChar::trivial(1);
  long bound = 0;
  std::vector<long> primes;
  std::vector<CycNum> ap;  // parallel to primes
  std::vector<CycNum> an;  // a_0 = 0, a_1 = 1, ..., a_bound
  std::vector<Complex> embed() const;
};

// a_n from a_p by multiplicativity and a_{p^{k+1}} = a_p a_{p^k} - chi(p) p a_{p^{k-1}}
std::vector<CycNum> extend_coefficients(long N, const DirichletChar& chi, const std::vector<long>& primes,
                                        const std::vector<CycNum>& ap, long bound);

// Eigenvalues of T_p (p <= bound) on the one-dimensional space H1 ∩ psi-component ∩ plus part.
Eigensystem hecke_eigensystem(const SymbolSpace& sp, const DirichletChar& psi, long bound);

std::vector<long> primes_up_to(long n);

// g in Gamma1(N) with g(from) = to, minimizing the lower-left entry
std::optional<Mat2> gamma1_witness(long N, const Cusp& from, const Cusp& to, long bound = -1);

// int_z^{hz} 2 pi i f(w) dw = F(hz) - F(z), F = sum a_n/n q^n, at z = (-d + i)/c
Complex hecke_period(const Mat2& h, const std::vector<Complex>& an);
Complex qseries_primitive(const Complex& z, const std::vector<Complex>& an);  // F(z)

// <chain, f> = int_chain 2 pi i f(z) dz for a closed chain, through the loop basis
Complex period_pairing(const Chain& closed, const std::vector<Complex>& an, int digits = kDefaultDigits);
// coordinates of a closed chain in the loop basis sp.h1_loops()
std::vector<CycNum> loop_coordinates(const Chain& closed);
// number of coefficients period_pairing needs for this chain
long period_terms_needed(const Chain& closed, int digits = kDefaultDigits);

// integer (m, n) with v = m b1 + n b2 up to `tol`
std::optional<std::pair<long, long>> lattice_coords(const Complex& v, const Complex& b1, const Complex& b2,
                                                    const Real& tol, Real* residual = nullptr);

}  // namespace mahlerlab
