#include <doctest.h>

#include <random>

#include "mahlerlab/bivar.hpp"
#include "test_polys.hpp"

using namespace mahlerlab;

namespace {

// Sylvester determinant of two complex polynomials by Gaussian elimination
Complex numeric_resultant(CPoly p, CPoly q) {
  while (!p.empty() && absz(p.back()) < 1e-30) p.pop_back();
  while (!q.empty() && absz(q.back()) < 1e-30) q.pop_back();
  int m = static_cast<int>(p.size()) - 1, n = static_cast<int>(q.size()) - 1, sz = m + n;
  std::vector<std::vector<Complex>> M(sz, std::vector<Complex>(sz, Complex(0, 0)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) M[r][r + j] = p[m - j];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) M[n + r][r + j] = q[n - j];
  Complex det(1, 0);
  for (int k = 0; k < sz; ++k) {
    int piv = k;
    for (int i = k + 1; i < sz; ++i)
      if (absz(M[i][k]) > absz(M[piv][k])) piv = i;
    if (piv != k) {
      std::swap(M[piv], M[k]);
      det = -det;
    }
    det *= M[k][k];
    if (absz(M[k][k]) == 0) return Complex(0, 0);
    for (int i = k + 1; i < sz; ++i) {
      Complex f = M[i][k] / M[k][k];
      for (int j = k; j < sz; ++j) M[i][j] -= f * M[k][j];
    }
  }
  return det;
}

bool has_witness(const TorusCertificate& c, long kx, long nx, long ky, long ny) {
  for (const auto& w : c.witnesses) {
    if (!w.x_exact || !w.y_exact) continue;
    if (w.x_exact->k == mod_l(kx, nx) && w.x_exact->n == nx && w.y_exact->k == mod_l(ky, ny) && w.y_exact->n == ny)
      return w.exact_zero;
  }
  return false;
}

}  // namespace

TEST_SUITE("bivar") {
  TEST_CASE("parse examples") {
    LaurentPoly2 P = LaurentPoly2::parse(testpolys::P13);
    CHECK(P.terms().size() == 8);
    CHECK(P.terms().at({1, 2}) == -1);
    CHECK(P.terms().at({0, 1}) == -1);
    CHECK(LaurentPoly2::parse("1").terms().size() == 1);
    CHECK(LaurentPoly2::parse(testpolys::P25).terms().size() == 11);
    CHECK(LaurentPoly2::parse("x^-2*y + y^(-1)").terms().at({-2, 1}) == 1);
    CHECK(LaurentPoly2::parse("(x+1)^2 - x^2 - 2*x").to_string() == "1");
    CHECK(LaurentPoly2::parse("H*h - 1", "H", "h").terms().at({1, 1}) == 1);
  }

  TEST_CASE("parse errors carry positions") {
    try {
      LaurentPoly2::parse("x + z");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(LaurentPoly2::parse("x +* y"), ParseError);
    CHECK_THROWS_AS(LaurentPoly2::parse("(x + y"), ParseError);
    CHECK_THROWS_AS(LaurentPoly2::parse("(x + y)^-1"), ParseError);
    CHECK_THROWS_AS(LaurentPoly2::parse(""), ParseError);
  }

  TEST_CASE("serialization round trip") {
    for (const char* s : {testpolys::P13, testpolys::P16, testpolys::P18, testpolys::P25, "x^-1*y^3 - 7", "1+x+y"}) {
      LaurentPoly2 P = LaurentPoly2::parse(s);
      LaurentPoly2 Q = LaurentPoly2::parse(P.to_string());
      CHECK(P == Q);
      CHECK(Q.to_string() == P.to_string());
    }
  }

  TEST_CASE("slices") {
    LaurentPoly2 P = LaurentPoly2::parse(testpolys::P13);
    auto cp = P.coefficient_polys(Var::Y);
    REQUIRE(cp.size() == 4);
    const char* expect[] = {"-y", "-y^2 + 2*y + 1", "y^2 + y - 1", "-y"};
    for (int i = 0; i < 4; ++i) CHECK(cp[i] == LaurentPoly2::parse(expect[i]).swapped());
    CPoly s = P.slice(Var::Y, Complex(1, 0));
    const int at1[] = {-1, 2, 1, -1};
    for (int i = 0; i < 4; ++i) CHECK(absz(s[i] - Complex(at1[i], 0)) < 1e-30);
    CPoly s16 = LaurentPoly2::parse(testpolys::P16).y_slice(Complex(1, 0));
    const int p16[] = {-1, 1, -1, 1};
    REQUIRE(s16.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(absz(s16[i] - Complex(p16[i], 0)) < 1e-30);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int t = 0; t < 20; ++t) {
      Complex x0(u(rng), u(rng)), y0(u(rng), u(rng));
      CPoly sl = P.y_slice(x0);
      Complex v = horner(sl, y0) * pow(y0, P.min_deg(Var::Y));
      CHECK(absz(v - P.eval(x0, y0)) < 1e-28 * (1 + absz(v)));
    }
  }

  TEST_CASE("resultants") {
    LaurentPoly2 L = LaurentPoly2::parse("1+x+y");
    IntPoly r = resultant_y(L, L.reciprocal());
    // Res_y(1+x+y, (x+1)y + x) = x - (x+1)^2
    IntPoly expect{BigInt(-1), BigInt(-1), BigInt(-1)};
    CHECK(r == expect);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (const char* s : {testpolys::P13, testpolys::P16, testpolys::P25}) {
      LaurentPoly2 P = LaurentPoly2::parse(s);
      LaurentPoly2 Q = P.reciprocal();
      IntPoly R = resultant_y(P, Q);
      for (int t = 0; t < 5; ++t) {
        Complex x0(u(rng), u(rng));
        Complex lhs = horner(R, x0);
        // both shifted to nonnegative exponents, as resultant_y does
        Complex rhs = numeric_resultant(P.shifted_nonnegative().y_slice(x0), Q.shifted_nonnegative().y_slice(x0));
        CHECK(absz(lhs - rhs) < 1e-22 * (1 + absz(rhs)));
      }
    }
  }

  TEST_CASE("roots") {
    auto r = polynomial_roots(CPoly{Complex(-1, 0), Complex(-1, 0), Complex(1, 0)});
    Real phi = (1 + sqrt(Real(5))) / 2;
    Real best = 10;
    for (auto& z : r) best = std::min(best, absz(z - Complex(phi, 0)));
    CHECK(best < 1e-30);
    auto c = polynomial_roots(CPoly{Complex(-1, 0), Complex(2, 0), Complex(1, 0), Complex(-1, 0)});
    int inside = 0;
    for (auto& z : c) inside += absz(z) < 1;
    CHECK(inside == 1);
  }

  TEST_CASE("torus certificates") {
    auto c13 = torus_nonvanishing(LaurentPoly2::parse(testpolys::P13));
    CHECK(c13.nonvanishing());
    CHECK(c13.witnesses.empty());
    CHECK(c13.grid_min > 0);

    auto c3 = torus_nonvanishing(LaurentPoly2::parse("1+x+y"));
    CHECK(c3.status == TorusStatus::Vanishing);
    CHECK(c3.witnesses.size() == 2);
    CHECK(has_witness(c3, 1, 3, 2, 3));
    CHECK(has_witness(c3, 2, 3, 1, 3));

    auto c18 = torus_nonvanishing(LaurentPoly2::parse(testpolys::P18));
    CHECK(c18.status == TorusStatus::Vanishing);
    CHECK(c18.witnesses.size() == 6);
    CHECK(has_witness(c18, 0, 1, 0, 1));
    CHECK(has_witness(c18, 0, 1, 1, 2));
    CHECK(has_witness(c18, 1, 2, 0, 1));
    CHECK(has_witness(c18, 1, 2, 1, 2));
    CHECK(has_witness(c18, 1, 3, 1, 6));   // (zeta6^2, zeta6)
    CHECK(has_witness(c18, 2, 3, 5, 6));   // conjugate

    auto c16 = torus_nonvanishing(LaurentPoly2::parse(testpolys::P16));
    CHECK(c16.witnesses.size() == 4);
    CHECK(has_witness(c16, 0, 1, 0, 1));
    CHECK(has_witness(c16, 0, 1, 1, 4));
    CHECK(has_witness(c16, 0, 1, 3, 4));
    CHECK(has_witness(c16, 1, 2, 1, 2));

    auto c25 = torus_nonvanishing(LaurentPoly2::parse(testpolys::P25));
    CHECK(c25.witnesses.size() == 4);
    for (long k = 1; k < 5; ++k) CHECK(has_witness(c25, k, 5, 2 * k + 5, 10));
  }

  TEST_CASE("certificate agrees with a fine torus sweep") {
    LaurentPoly2 P = LaurentPoly2::parse(testpolys::P13);
    double m = torus_grid_min(P, 2048);
    CHECK(m > 0.05);
  }
}
