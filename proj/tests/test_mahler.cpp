#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "mahlerlab/mahler.hpp"
#include "test_polys.hpp"

using namespace mahlerlab;

namespace {

IntPoly random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> c(-5, 5);
  IntPoly p(deg + 1);
  for (auto& a : p) a = c(rng);
  if (p.back() == 0) p.back() = 1;
  return p;
}

// midpoint rule for (1/4pi^2) int int log|P| over an n x n grid, in double
double riemann_mahler(const LaurentPoly2& P, int n) {
  std::vector<std::pair<std::pair<int, int>, double>> t;
  for (const auto& [k, c] : P.terms()) t.push_back({k, c.convert_to<double>()});
  std::vector<std::complex<double>> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = std::polar(1.0, 2 * M_PI * (i + 0.5) / n);
  double acc = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> v = 0;
      for (const auto& [k, c] : t) v += c * std::pow(xs[i], k.first) * std::pow(xs[j], k.second);
      acc += std::log(std::abs(v));
    }
  }
  return acc / (double(n) * n);
}

const LaurentPoly2& P13() {
  static LaurentPoly2 p = LaurentPoly2::parse(testpolys::P13);
  return p;
}

}  // namespace

TEST_SUITE("mahler") {
  TEST_CASE("univariate measures") {
    CHECK(abs(mahler_univariate(IntPoly{BigInt(-2), BigInt(1)}) - log(Real(2))) < 1e-30);
    CHECK(abs(mahler_univariate(IntPoly{BigInt(0), BigInt(1)})) < 1e-30);
    Real phi = (1 + sqrt(Real(5))) / 2;
    CHECK(abs(mahler_univariate(IntPoly{BigInt(-1), BigInt(-1), BigInt(1)}) - log(phi)) < 1e-30);
    CHECK(abs(mahler_univariate(IntPoly{BigInt(-7)}) - log(Real(7))) < 1e-30);
    CHECK_THROWS_AS(mahler_univariate(IntPoly{BigInt(0), BigInt(0)}), Error);
  }

  TEST_CASE("univariate measure is additive on products") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 25; ++t) {
      IntPoly a = random_poly(rng, 1 + t % 5), b = random_poly(rng, 1 + (t * 7) % 6);
      Real lhs = mahler_univariate(mul(a, b));
      Real rhs = mahler_univariate(a) + mahler_univariate(b);
      CHECK(abs(lhs - rhs) < 1e-10);
    }
  }

  TEST_CASE("bivariate measures") {
    CHECK(abs(mahler_bivariate(LaurentPoly2::parse("x")).value) < 1e-30);
    CHECK(abs(mahler_bivariate(LaurentPoly2::parse("3*y^2")).value - log(Real(3))) < 1e-30);
    auto L = LaurentPoly2::parse("1+x+y");
    MahlerResult r = mahler_bivariate(L);
    CHECK(r.converged);
    CHECK(r.breakpoints.size() == 2);
    CHECK(std::abs(r.value.convert_to<double>() - riemann_mahler(L, 4000)) < 1e-4);
  }

  TEST_CASE("measure is invariant under inverting a variable") {
    for (const char* s : {testpolys::P13, testpolys::P16}) {
      LaurentPoly2 P = LaurentPoly2::parse(s);
      Real m = mahler_bivariate(P).value;
      CHECK(abs(mahler_bivariate(P.substitute_inverse(Var::X)).value - m) < 1e-20);
      CHECK(abs(mahler_bivariate(P.substitute_inverse(Var::Y)).value - m) < 1e-20);
      CHECK(abs(mahler_bivariate(P.swapped()).value - m) < 1e-20);
    }
  }

  TEST_CASE("node doubling stays within the error estimate") {
    MahlerResult r = mahler_bivariate(P13());
    REQUIRE(r.converged);
    MahlerOptions o;
    o.start_nodes = 2 * r.nodes;
    o.max_nodes = 4 * r.nodes;
    MahlerResult r2 = mahler_bivariate(P13(), o);
    CHECK(abs(r2.value - r.value) <= r.error_estimate + Real(1e-30));
  }

  TEST_CASE("slice at H = 1 has one root in the disk") {
    // P(1, h) = -1 + 2h + h^2 - h^3
    CPoly sl = P13().slice(Var::Y, Complex(1, 0));
    auto roots = polynomial_roots(sl);
    int inside = 0;
    for (const auto& z : roots) {
      inside += absz(z) < 1;
      CHECK(absz(horner(sl, z)) < 1e-28);
    }
    CHECK(inside == 1);
    // independent count from sign changes of the real cubic: one root in each
    // of (-2,-1), (0,1/2), (1,2)
    auto p = [](double h) { return -1 + 2 * h + h * h - h * h * h; };
    CHECK(p(-2) * p(-1) < 0);
    CHECK(p(0) * p(0.5) < 0);
    CHECK(p(1) * p(2) < 0);
  }

  TEST_CASE("Deninger cycle of the level 13 polynomial") {
    TorusCycleSample s = track_deninger_cycle(P13(), Var::Y);
    CHECK(s.closure_defect < pow10(-15));
    CHECK(s.max_inner_modulus < 1);
    CHECK(s.worst_guard <= 0.5);
    REQUIRE(s.nodes.size() == 16 * 32);
    // conjugation symmetry: the node at 2pi - t carries the conjugate root
    size_t n = s.nodes.size();
    for (size_t i = 0; i < n; ++i) {
      const auto& a = s.nodes[i];
      const auto& b = s.nodes[n - 1 - i];
      CHECK(abs(a.theta + b.theta - 2 * pi()) < 1e-28);
      CHECK(absz(a.h - conjz(b.h)) < 1e-25);
    }
  }

  TEST_CASE("differentials along the cycle") {
    TorusCycleSample s = track_deninger_cycle(P13(), Var::Y);
    RationalDifferential w{LaurentPoly2::parse("(h^2-h)*H-h^3+h^2+2*h-1", "H", "h"),
                           LaurentPoly2::parse("h^4-2*h^3+3*h^2-2*h+1", "H", "h")};
    RationalDifferential hw{LaurentPoly2::parse("h", "H", "h") * w.num, w.den};
    Complex i1 = integrate_along_cycle(s, w), i2 = integrate_along_cycle(s, hw);
    CHECK(abs(re(i1)) < 1e-10);
    CHECK(abs(re(i2)) < 1e-10);
    CHECK(abs(im(i1) + Real(3.21731)) < 1e-4);
    CHECK(abs(im(i2) + Real(1.23275)) < 1e-4);
    // the closure integrand form agrees with the rational form
    Complex i3 = integrate_along_cycle(s, [&](Complex H, Complex h) { return w.num.eval(H, h) / w.den.eval(H, h); });
    CHECK(absz(i3 - i1) < 1e-28);
    // coarser sampling agrees
    TorusCycleSample c = track_deninger_cycle(P13(), Var::Y, 8, 32);
    CHECK(absz(integrate_along_cycle(c, w) - i1) < 1e-15);
  }

  TEST_CASE("eta(h, H) along the cycle gives the Mahler measure") {
    TorusCycleSample s = track_deninger_cycle(P13(), Var::Y);
    Real m = mahler_bivariate(P13()).value;
    // with theta increasing, int eta(h,H) = int log|h| dtheta = -2 pi m(P)
    CHECK(abs(integrate_eta_pair(s) / (2 * pi()) + m) < 1e-10);
  }

  TEST_CASE("tracking rejects a slice with two roots in the disk") {
    // y^2 - 1/4 has no integer form; use 4y^2 - 1 in the inner variable
    CHECK_THROWS_AS(track_deninger_cycle(LaurentPoly2::parse("4*y^2-1+0*x"), Var::X), Error);
  }
}
