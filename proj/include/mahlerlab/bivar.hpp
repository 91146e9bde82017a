#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mahlerlab/cyclo.hpp"
#include "mahlerlab/poly1.hpp"

namespace mahlerlab {

enum class Var { X, Y };

class ParseError : public Error {
 public:
  ParseError(const std::string& what, size_t pos) : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

// Laurent polynomial in two variables with integer coefficients.
// Keys are (x exponent, y exponent).
class LaurentPoly2 {
 public:
  using Key = std::pair<int, int>;

  LaurentPoly2() = default;
  explicit LaurentPoly2(std::map<Key, BigInt> terms, std::string x = "x", std::string y = "y");
  static LaurentPoly2 parse(std::string_view text, std::string x = "x", std::string y = "y");
  static LaurentPoly2 constant(long c);
  static LaurentPoly2 monomial(long c, int i, int j);

  const std::map<Key, BigInt>& terms() const { return terms_; }
  const std::string& name(Var v) const { return v == Var::X ? xname_ : yname_; }
  bool is_zero() const { return terms_.empty(); }

  int min_deg(Var v) const;
  int max_deg(Var v) const;

  Complex eval(const Complex& x, const Complex& y) const;
  CycNum eval(const CycNum& x, const CycNum& y) const;  // exact, needs x, y invertible

  // Coefficients in the free variable after fixing `fixed`, ascending from
  // its lowest exponent.
  CPoly slice(Var fixed, const Complex& value) const;
  CPoly y_slice(const Complex& x0) const { return slice(Var::X, x0); }
  // Same, symbolically: entry k is the coefficient of (free var)^(min + k),
  // a Laurent polynomial in the fixed variable stored with the fixed variable in X.
  std::vector<LaurentPoly2> coefficient_polys(Var fixed) const;

  // x^a y^b P(1/x, 1/y), normalized to nonnegative exponents
  LaurentPoly2 reciprocal() const;
  LaurentPoly2 swapped() const;                  // exchange x and y
  LaurentPoly2 shifted_nonnegative() const;      // multiply by a monomial so min degrees are 0
  LaurentPoly2 substitute_inverse(Var v) const;  // v -> 1/v

  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  LaurentPoly2 operator-() const;
  bool operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  std::map<Key, BigInt> terms_;
  std::string xname_ = "x", yname_ = "y";
};

// Res_y(P, Q) as a polynomial in x; both are first shifted to nonnegative exponents.
IntPoly resultant_y(const LaurentPoly2& P, const LaurentPoly2& Q);

struct RootOfUnity {
  long k = 0, n = 1;  // exp(2 pi i k / n)
  CycNum exact() const { return CycNum::zeta(n, k); }
  Complex value() const { return root_of_unity(k, n); }
};

// nearest e^{2 pi i k/n} with n <= max_order, if closer than tol
std::optional<RootOfUnity> snap_root_of_unity(const Complex& z, const Real& tol, long max_order = 60);

struct TorusPoint {
  Complex x, y;
  std::optional<RootOfUnity> x_exact, y_exact;
  bool exact_zero = false;  // P vanishes exactly at the snapped point
  Real residual = 0;        // |P| at the reported point
};

enum class TorusStatus { Nonvanishing, Vanishing, Unresolved };

struct TorusCertificate {
  TorusStatus status = TorusStatus::Unresolved;
  IntPoly resultant;            // Res_y(P, P*), in x
  long arcs = 0;                // arcs certified in the bisection
  Real min_margin = 0;          // smallest |R| - slope bound over certified arcs
  Real grid_min = 0;            // min |P| over the sweep grid
  long grid_size = 0;
  std::vector<TorusPoint> witnesses;
  std::string note;
  bool nonvanishing() const { return status == TorusStatus::Nonvanishing; }
};

TorusCertificate torus_nonvanishing(const LaurentPoly2& P, int digits = kDefaultDigits, int max_depth = 24,
                                    long grid = 256);

// min |P| over an n x n grid on the torus (double precision sweep)
double torus_grid_min(const LaurentPoly2& P, long n);

}  // namespace mahlerlab
