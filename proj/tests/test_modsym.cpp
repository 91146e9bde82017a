#include <doctest.h>

#include <random>

#include "mahlerlab/modsym.hpp"

using namespace mahlerlab;

namespace {

const SymbolSpace& space13() {
  static SymbolSpace sp(13);
  return sp;
}

DirichletChar eps13() { return DirichletChar::make(13, {{2, CycNum::zeta(6)}}); }

CycNum z6(long k = 1) { return CycNum::zeta(6, k); }

struct Gammas {
  Chain g1, g2, g3, g4;
};

Gammas gammas13() {
  const auto& sp = space13();
  Chain g1 = sp.xi(1, -5) - sp.xi(2, 5) - sp.xi(1, -2);
  Chain g3 = sp.xi(1, -3) - sp.xi(1, 3);
  return {g1, sp.diamond(2, g1), g3, sp.diamond(2, g3)};
}

// pairwise products of all independent symbols, counted by brute force
long coprime_pairs(long N) {
  long n = 0;
  for (long u = 0; u < N; ++u)
    for (long v = 0; v < N; ++v) n += gcd_l(gcd_l(u, v), N) == 1;
  return n;
}

Chain gamma_plus(const SymbolSpace& sp, const DirichletChar& psi) {
  DirichletChar e3 = eps13().pow(3);
  Chain acc = sp.zero();
  for (long a = 1; a < 13; ++a) acc += e3(a) * sp.project(sp.xi(1, a), psi);
  return acc;
}

}  // namespace

TEST_SUITE("modsym") {
  TEST_CASE("space sizes") {
    const auto& sp = space13();
    CHECK(sp.num_symbols() == 168);
    CHECK(coprime_pairs(13) == 168);
    CHECK(sp.h1_rank() == 4);
    CHECK(sp.num_cusps() == 12);
    CHECK(SymbolSpace(16).h1_rank() == 4);
    CHECK(SymbolSpace(18).h1_rank() == 4);
    SymbolSpace s25(25);
    CHECK(s25.num_symbols() == static_cast<size_t>(coprime_pairs(25)));
    CHECK(s25.h1_rank() == 24);
    SymbolSpace s1(1);
    CHECK(s1.h1_rank() == 0);
    CHECK(s1.num_symbols() == 1);
  }

  TEST_CASE("lifts have the right bottom row") {
    for (long N : {1L, 13L, 16L, 25L}) {
      SymbolSpace sp(N);
      for (size_t i = 0; i < sp.num_symbols(); ++i) {
        Symbol x = sp.symbol(i);
        Mat2 g = sp.lift(x);
        CHECK(g.det() == 1);
        CHECK(mod_l(g.c - x.u, N) == 0);
        CHECK(mod_l(g.d - x.v, N) == 0);
      }
    }
  }

  TEST_CASE("relations hold in the quotient") {
    const auto& sp = space13();
    for (size_t i = 0; i < sp.num_symbols(); ++i) {
      Symbol x = sp.symbol(i);
      CHECK((sp.xi(x.u, x.v) + sp.xi(x.v, -x.u)).is_zero());
      CHECK(sp.xi(x.u, x.v) == sp.xi(-x.u, -x.v));
      CHECK((sp.xi(x.u, x.v) + sp.xi(x.v, -x.u - x.v) + sp.xi(-x.u - x.v, x.u)).is_zero());
    }
  }

  TEST_CASE("paths") {
    const auto& sp = space13();
    Cusp inf = Cusp::infinity();
    CHECK(sp.path(Cusp::make(1, 5), Cusp::make(2, 5)) == sp.xi(1, -5) - sp.xi(2, 5) - sp.xi(1, -2));
    CHECK(sp.path(Cusp::make(0, 1), inf) == sp.xi(0, 1));
    CHECK(sp.path(Cusp::make(1, 3), Cusp::make(-1, 3)) == sp.xi(1, -3) - sp.xi(1, 3));
    CHECK(sp.path(inf, inf).is_zero());
    // boundary of a path is the difference of its end classes
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 40);
    for (int t = 0; t < 40; ++t) {
      Cusp a = Cusp::make(num(rng), den(rng)), b = Cusp::make(num(rng), den(rng));
      auto bd = sp.path(a, b).boundary();
      std::vector<CycNum> expect(sp.num_cusps());
      expect[sp.cusp_class(b)] += CycNum(1);
      expect[sp.cusp_class(a)] -= CycNum(1);
      for (size_t k = 0; k < expect.size(); ++k) CHECK(bd[k] == expect[k]);
      // additivity through a third cusp
      Cusp c = Cusp::make(num(rng), den(rng));
      CHECK(sp.path(a, b) == sp.path(a, c) + sp.path(c, b));
    }
  }

  TEST_CASE("basis cycles and complex conjugation") {
    auto [g1, g2, g3, g4] = gammas13();
    for (const Chain* g : {&g1, &g2, &g3, &g4}) CHECK(g->is_closed());
    const auto& sp = space13();
    CHECK(sp.star(g1) == g1 + g4);
    CHECK(sp.star(g2) == g2 - g3 + g4);
    CHECK(sp.star(g3) == -g3);
    CHECK(sp.star(g4) == -g4);
    // the four cycles span H1
    Matrix<CycNum> m{g1.coeffs(), g2.coeffs(), g3.coeffs(), g4.coeffs()};
    CHECK(rank(m) == 4);
    for (const auto& h : sp.h1_basis()) CHECK(express(sp.from_rational(h), {g1, g2, g3, g4}).has_value());
  }

  TEST_CASE("operator identities") {
    const auto& sp = space13();
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int t = 0; t < 5; ++t) {
      Chain c = sp.zero();
      for (size_t i = 0; i < sp.num_symbols(); i += 7) {
        Symbol x = sp.symbol(i);
        c += CycNum(coef(rng)) * sp.xi(x.u, x.v);
      }
      CHECK(sp.diamond(1, c) == c);
      CHECK(sp.star(sp.star(c)) == c);
      CHECK(sp.diamond(2, sp.diamond(5, c)) == sp.diamond(10, c));
      CHECK(sp.diamond(3, sp.diamond(7, c)) == sp.diamond(7, sp.diamond(3, c)));
      CHECK(sp.fricke(sp.fricke(c)) == c);
      CHECK(sp.star(sp.diamond(2, c)) == sp.diamond(2, sp.star(c)));
    }
  }

  TEST_CASE("Atkin-Lehner") {
    const auto& sp = space13();
    CHECK(sp.fricke(sp.xi(1, 2)) == sp.path(Cusp::make(2, 13), Cusp::infinity()));
    CHECK(sp.fricke(sp.xi(1, 2)) == -sp.xi(0, -6) + sp.xi(1, -6) + sp.xi(0, 1));
    auto [g1, g2, g3, g4] = gammas13();
    CHECK(sp.fricke(g3) == g4 - g3);
  }

  TEST_CASE("isotypic projection") {
    const auto& sp = space13();
    DirichletChar e = eps13();
    Chain c = sp.xi(1, 4) + CycNum(3) * sp.xi(2, 7);
    Chain p = sp.project(c, e);
    CHECK(sp.project(p, e) == p);
    CHECK(sp.diamond(2, p) == z6() * p);
    Chain sum = sp.zero();
    for (const auto& chi : all_characters(13)) {
      Chain q = sp.project(c, chi);
      if (!chi.is_even()) CHECK(q.is_zero());
      sum += q;
    }
    CHECK(sum == c);
  }

  TEST_CASE("gamma_psi plus") {
    const auto& sp = space13();
    for (const DirichletChar& psi : {eps13(), eps13().conj()}) {
      Chain gp = gamma_plus(sp, psi);
      CHECK(gp.is_closed());
      CHECK(!gp.is_zero());
      CycNum two = CycNum(2) - CycNum(4) * psi(2);
      Chain rhs = two * sp.project(sp.xi(1, 2), psi) + sp.project(sp.xi(1, 3), psi) + sp.project(sp.xi(1, -3), psi);
      CHECK(gp == rhs);
      CHECK(sp.star(gp) == gp);
      CHECK(sp.fricke(gp) == psi(2) * gamma_plus(sp, psi.conj()));
    }
  }

  TEST_CASE("theta identity") {
    const auto& sp = space13();
    DirichletChar e = eps13();
    DirichletChar e3 = e.pow(3);
    Chain theta = sp.zero();
    for (long a = 1; a < 13; ++a) theta += e3(a) * sp.path(Cusp::make(a, 13), Cusp::infinity());
    CHECK(sp.fricke(sp.project(theta, e)) == gamma_plus(sp, e.conj()));
  }

  TEST_CASE("Rebolledo reduction") {
    const auto& sp = space13();
    DirichletChar e = eps13();
    auto t = rebolledo_reduce(sp, e);
    CHECK(t.cycles.size() == 14);
    const auto& P = t.periods;
    // coordinates over (1,0), (1,2), (1,3)
    auto is = [&](long v, CycNum c0, CycNum c2, CycNum c3) {
      return P.value(sp, {1, mod_l(v, 13)}, 0) == c0 && P.value(sp, {1, mod_l(v, 13)}, 1) == c2 &&
             P.value(sp, {1, mod_l(v, 13)}, 2) == c3;
    };
    CHECK(is(1, 0, 0, 0));
    CHECK(is(4, 0, 0, CycNum(1) - z6()));
    CHECK(is(5, 0, z6() - CycNum(1), CycNum(1) - z6()));
    CHECK(is(6, 0, z6() - CycNum(1), 0));
    for (long v = 1; v < 13; ++v)
      for (size_t k = 0; k < 3; ++k) CHECK(P.value(sp, {1, v}, k) == P.value(sp, {1, 13 - v}, k));
    // the basis cycles reproduce themselves
    CHECK(t.cycles[1].second == std::vector<CycNum>{1, 0, 0, 0});
    CHECK(t.cycles[4].second == std::vector<CycNum>{0, 0, 1, 0});
  }

  TEST_CASE("Merel cycle") {
    const auto& sp = space13();
    // a random functional on the quotient satisfies the relations
    std::mt19937 rng(21);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::vector<Rational> r(sp.dim());
    for (auto& q : r) q = coef(rng);
    auto f = [&](Symbol x) {
      Rational acc = 0;
      for (auto [j, q] : sp.coords(*sp.index(x.u, x.v))) acc += q * r[j];
      return CycNum(acc);
    };
    Chain g = merel_cycle(sp, f);
    CHECK(g.is_closed());
    CHECK(merel_cycle_minus(sp, f).is_closed());
    // a symbol-wise constant does not satisfy the 2-term relation
    CHECK_THROWS_AS(merel_cycle(sp, [](Symbol) { return CycNum(1); }), Error);
    try {
      merel_cycle(sp, [](Symbol) { return CycNum(1); });
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("sigma") != std::string::npos);
    }

    DirichletChar e = eps13();
    auto P = formal_plus_symbols(sp, e, {{1, 0}, {1, 2}, {1, 3}});
    Chain gm = sp.project(sp.xi(1, -3), e.conj()) - sp.project(sp.xi(1, 3), e.conj());
    std::vector<Chain> parts;
    for (size_t k = 0; k < 3; ++k) parts.push_back(merel_cycle(sp, [&](Symbol x) { return P.value(sp, x, k); }));
    CHECK(parts[0].is_zero());
    auto c2 = express(parts[1], {gm});
    auto c3 = express(parts[2], {gm});
    REQUIRE(c2);
    REQUIRE(c3);
    // gamma^-_{eps-bar} with the sign of gamma_3
    CHECK((*c2)[0] == CycNum(-12));
    CHECK((*c3)[0] == CycNum(4) - CycNum(8) * z6());
  }

  TEST_CASE("Hecke eigenvalues at level 13") {
    const auto& sp = space13();
    auto es = hecke_eigensystem(sp, eps13(), 60);
    // f = f_eps + f_epsbar up to O(q^15)
    const long expect[] = {2, -3, -2, 1, 0, 6, 0, 0, -1, -3, 0, -4, -5, 0};
    for (long n = 1; n <= 14; ++n) CHECK(es.an[n].lift(6).trace() == expect[n - 1]);
    CHECK(es.an[15] == es.an[3] * es.an[5]);
    CHECK(es.an[15].lift(6).trace() == 6);
    CHECK(es.an[1] == CycNum(1));
    CHECK(es.an[2] == CycNum(-1) - z6());
    for (size_t i = 0; i < es.primes.size(); ++i) {
      long p = es.primes[i];
      if (p != 13) CHECK(es.ap[i] == eps13()(p) * es.ap[i].conj());
    }
    // the conjugate character gives the conjugate form
    auto eb = hecke_eigensystem(sp, eps13().conj(), 30);
    for (long n = 1; n <= 30; ++n) CHECK(eb.an[n] == es.an[n].conj());
  }

  TEST_CASE("Hecke operators commute with diamonds") {
    const auto& sp = space13();
    DirichletChar e = eps13();
    for (long p : {2L, 3L, 5L, 7L, 13L}) {
      for (size_t i = 0; i < sp.num_symbols(); i += 11) {
        Symbol x = sp.symbol(i);
        Chain c = sp.project(sp.xi(x.u, x.v), e);
        CHECK(sp.hecke(p, sp.diamond(2, c)) == sp.diamond(2, sp.hecke(p, c)));
        CHECK(sp.hecke(p, sp.diamond(2, c)) == z6() * sp.hecke(p, c));
      }
    }
    auto [g1, g2, g3, g4] = gammas13();
    CHECK(sp.hecke(3, g1).is_closed());
  }

  TEST_CASE("level 25 eigenform") {
    SymbolSpace sp(25);
    DirichletChar e = DirichletChar::make(25, {{2, CycNum::zeta(5)}});
    auto es = hecke_eigensystem(sp, e, 11);
    CycNum z = CycNum::zeta(5);
    CycNum lam = CycNum(2) + z + CycNum(2) * pow(z, 3);  // 2 + z + 2 z^-2
    const long expect[] = {1, 1, -1, -1, -3, 0, 0, 0, -2, 3, 4};
    for (long n = 1; n <= 11; ++n) CHECK((lam * es.an[n]).lift(5).trace() / 5 == expect[n - 1]);
  }

  TEST_CASE("periods") {
    const auto& sp = space13();
    auto es = hecke_eigensystem(sp, eps13(), 800);
    auto an = es.embed();
    auto [g1, g2, g3, g4] = gammas13();
    Complex p3 = period_pairing(g3, an);
    CHECK(period_terms_needed(g3) < 800);
    auto w = gamma1_witness(13, Cusp::make(1, 3), Cusp::make(-1, 3));
    REQUIRE(w);
    CHECK(std::labs(w->c) == 39);
    CHECK(absz(p3 - Complex(1.06759, -2.60094)) < 1e-5);
    // the same period through the explicit loop
    Mat2 h{14, -5, -39, 14};
    CHECK(absz(hecke_period(h, an) - p3) < 1e-25);
    Complex p4 = period_pairing(g4, an);
    CHECK(absz(p4 - Complex(2.78628, -0.37591)) < 1e-5);
    CHECK(absz(p4 - z6().embed() * p3) < 1e-10);
    CHECK(absz(period_pairing(g3 + g4, an) - p3 - p4) < 1e-22);
    // nondegeneracy against the conjugate form
    auto cn = hecke_eigensystem(sp, eps13().conj(), 800).embed();
    Complex det = p3 * period_pairing(g4, cn) - p4 * period_pairing(g3, cn);
    CHECK(absz(det) > 1e-3);
    auto lc = lattice_coords(period_pairing(g4 - g3, an), p3, p4, Real(1e-6));
    REQUIRE(lc);
    CHECK(lc->first == -1);
    CHECK(lc->second == 1);
    CHECK_THROWS_AS(period_pairing(g3, std::vector<Complex>(an.begin(), an.begin() + 20)), Error);
    CHECK_THROWS_AS(period_pairing(sp.xi(1, 0), an), Error);
  }

  TEST_CASE("Heilbronn sets") {
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
      for (const Mat2& h : heilbronn_merel(p)) CHECK(h.det() == p);
    }
    CHECK(heilbronn_merel(2).size() == 4);
  }
}
