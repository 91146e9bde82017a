#include "mahlerlab/mahler.hpp"

#include <algorithm>

namespace mahlerlab {

Real mahler_univariate(const CPoly& coeffs) {
  CPoly p = coeffs;
  while (!p.empty() && p.back() == Complex(0, 0)) p.pop_back();
  if (p.empty()) throw Error("mahler_univariate: zero polynomial");
  Real m = log(absz(p.back()));
  if (p.size() == 1) return m;
  for (const Complex& r : polynomial_roots(p)) {
    Real a = absz(r);
    if (a > 1) m += log(a);
  }
  return m;
}

Real mahler_univariate(const IntPoly& coeffs) { return mahler_univariate(to_complex(coeffs)); }

namespace {

struct Panel {
  Real a, b;
};

// uniform panels, with geometric refinement towards the ends flagged singular
void add_interval(std::vector<Panel>& out, Real a, Real b, bool sing_a, bool sing_b, int panels, int grading) {
  Real d = (b - a) / panels;
  for (int k = 0; k < panels; ++k) {
    Real lo = a + d * k, hi = (k == panels - 1) ? b : a + d * (k + 1);
    bool ga = sing_a && k == 0, gb = sing_b && k == panels - 1;
    if (!ga && !gb) {
      out.push_back({lo, hi});
      continue;
    }
    if (ga && gb) {
      Real mid = (lo + hi) / 2;
      add_interval(out, lo, mid, true, false, 1, grading);
      add_interval(out, mid, hi, false, true, 1, grading);
      continue;
    }
    Real w = hi - lo;
    std::vector<Real> cuts;
    Real f = 1;
    for (int g = 0; g < grading; ++g) {
      f /= 2;
      cuts.push_back(f);
    }
    std::vector<Real> pts{lo};
    if (ga) {
      for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) pts.push_back(lo + w * *it);
    } else {
      for (Real c : cuts) pts.push_back(hi - w * c);
      std::sort(pts.begin(), pts.end());
    }
    pts.push_back(hi);
    for (size_t i = 0; i + 1 < pts.size(); ++i) out.push_back({pts[i], pts[i + 1]});
  }
}

}  // namespace

MahlerResult mahler_bivariate(const LaurentPoly2& P, const MahlerOptions& opt) {
  if (P.is_zero()) throw Error("mahler_bivariate: zero polynomial");
  MahlerResult res;
  if (P.min_deg(Var::Y) == P.max_deg(Var::Y)) {
    // P = y^k g(x)
    std::map<LaurentPoly2::Key, BigInt> t;
    for (const auto& [k, c] : P.terms()) t[{k.first - P.min_deg(Var::X), 0}] = c;
    IntPoly g(P.max_deg(Var::X) - P.min_deg(Var::X) + 1);
    for (const auto& [k, c] : t) g[k.first] = c;
    res.value = mahler_univariate(g);
    res.converged = true;
    return res;
  }
  const Real two_pi = 2 * pi();
  TorusCertificate cert = torus_nonvanishing(P, opt.digits, 24, 0);
  std::vector<Real> bps;
  for (const auto& w : cert.witnesses) {
    Real t = atan2(im(w.x), re(w.x));
    if (t < 0) t += two_pi;
    if (t > two_pi - Real(1e-25)) t = 0;
    bool dup = false;
    for (Real b : bps) dup = dup || abs(b - t) < Real(1e-20);
    if (!dup) bps.push_back(t);
  }
  std::sort(bps.begin(), bps.end());
  res.breakpoints = bps;

  std::vector<Real> ends{0};
  std::vector<bool> sing{!bps.empty() && bps.front() == 0};
  for (Real b : bps) {
    if (b == 0) continue;
    ends.push_back(b);
    sing.push_back(true);
  }
  ends.push_back(two_pi);
  sing.push_back(sing.front());
  std::vector<Panel> mesh;
  for (size_t i = 0; i + 1 < ends.size(); ++i) {
    add_interval(mesh, ends[i], ends[i + 1], sing[i], sing[i + 1], opt.panels, opt.grading);
  }

  auto integrand = [&](const Real& t) { return mahler_univariate(P.y_slice(expi(t))); };
  const Real tol = pow10(-(clamp_digits(opt.digits) - 6));
  Real prev = 0;
  bool have_prev = false;
  for (int n = opt.start_nodes; n <= opt.max_nodes; n *= 2) {
    Real acc = 0;
    for (const Panel& p : mesh) acc += gl_integrate(integrand, p.a, p.b, n);
    acc /= two_pi;
    res.nodes = n;
    if (have_prev) {
      res.error_estimate = abs(acc - prev);
      res.value = acc;
      if (res.error_estimate < tol * std::max(Real(1), abs(acc))) {
        res.converged = true;
        return res;
      }
    }
    prev = acc;
    res.value = acc;
    have_prev = true;
  }
  return res;
}

namespace {

struct Step {
  Complex h;
  std::vector<Complex> roots;
  Real ratio;
};

std::string theta_str(const Real& t) { return fmt(t, 12); }

// roots of Q(H, .) with |H| = 1 and the one nearest to `prev`, if the match is unambiguous
bool match_root(const LaurentPoly2& Q, const Real& theta, const Complex& prev, const std::vector<Complex>& warm,
                Step& out) {
  CPoly sl = Q.y_slice(expi(theta));
  out.roots = polynomial_roots(sl, warm);
  Real d1 = -1, d2 = -1;
  size_t best = 0;
  for (size_t i = 0; i < out.roots.size(); ++i) {
    Real d = absz(out.roots[i] - prev);
    if (d1 < 0 || d < d1) {
      d2 = d1;
      d1 = d;
      best = i;
    } else if (d2 < 0 || d < d2) {
      d2 = d;
    }
  }
  out.h = out.roots[best];
  out.ratio = d2 > 0 ? d1 / d2 : 0;
  return out.roots.size() == 1 || out.ratio <= Real(0.5);
}

void check_unique(const Step& s, const Real& theta) {
  int inside = 0;
  for (const auto& r : s.roots) inside += absz(r) < 1;
  if (inside != 1 || !(absz(s.h) < 1)) {
    throw Error("track_deninger_cycle: " + std::to_string(inside) + " roots inside the unit disk at theta=" +
                theta_str(theta));
  }
}

}  // namespace

TorusCycleSample track_deninger_cycle(const LaurentPoly2& P, Var outer, int panels, int order, int digits) {
  (void)digits;
  LaurentPoly2 Q = outer == Var::X ? P : P.swapped();
  if (Q.min_deg(Var::Y) == Q.max_deg(Var::Y)) throw Error("track_deninger_cycle: P does not involve the inner variable");
  TorusCycleSample s;
  s.outer = outer;
  s.panels = panels;
  s.order = order;
  const Real two_pi = 2 * pi();

  std::vector<std::pair<Real, Real>> grid;  // (theta, weight)
  const GaussRule& r = gauss_legendre(order);
  for (int k = 0; k < panels; ++k) {
    Real a = two_pi * k / panels, b = two_pi * (k + 1) / panels;
    Real c = (a + b) / 2, hw = (b - a) / 2;
    for (int i = 0; i < order; ++i) grid.push_back({c + hw * r.x[i], hw * r.w[i]});
  }
  std::sort(grid.begin(), grid.end());

  Step cur;
  cur.roots = polynomial_roots(Q.y_slice(Complex(1, 0)));
  {
    int inside = 0;
    for (const auto& z : cur.roots) {
      if (absz(z) < 1) {
        ++inside;
        cur.h = z;
      }
    }
    if (inside != 1) {
      throw Error("track_deninger_cycle: " + std::to_string(inside) + " roots inside the unit disk at theta=0");
    }
  }
  const Complex h0 = cur.h;
  Real theta = 0;
  const Real min_step = Real(1e-14);

  auto advance = [&](const Real& target) {
    while (theta < target) {
      Real step = target - theta;
      while (true) {
        Step nxt;
        Real t = theta + step;
        if (t > target) t = target;
        bool ok = match_root(Q, t, cur.h, cur.roots, nxt);
        if (ok) {
          check_unique(nxt, t);
          s.worst_guard = std::max(s.worst_guard, nxt.ratio);
          cur = nxt;
          theta = t;
          break;
        }
        step /= 2;
        if (step < min_step) throw Error("track_deninger_cycle: root matching failed near theta=" + theta_str(theta));
      }
    }
  };

  for (const auto& [t, w] : grid) {
    advance(t);
    s.nodes.push_back({t, w, expi(t), cur.h});
    s.max_inner_modulus = std::max(s.max_inner_modulus, absz(cur.h));
  }
  advance(two_pi);
  s.closure_defect = absz(cur.h - h0);
  return s;
}

Complex integrate_along_cycle(const TorusCycleSample& s, const std::function<Complex(Complex, Complex)>& R) {
  Complex acc(0, 0);
  for (const auto& n : s.nodes) acc += R(n.H, n.h) * Complex(0, 1) * n.H * n.weight;
  return acc;
}

Complex integrate_along_cycle(const TorusCycleSample& s, const RationalDifferential& w, Real pole_tol) {
  Complex acc(0, 0);
  for (size_t i = 0; i < s.nodes.size(); ++i) {
    const auto& n = s.nodes[i];
    Complex den = w.den.eval(n.H, n.h);
    if (absz(den) < pole_tol) throw Error("integrate_along_cycle: denominator vanishes near node " + std::to_string(i));
    acc += w.num.eval(n.H, n.h) / den * Complex(0, 1) * n.H * n.weight;
  }
  return acc;
}

Real integrate_eta_pair(const TorusCycleSample& s) {
  // |H| = 1 on the sample, so only log|h| darg H survives
  Real acc = 0;
  for (const auto& n : s.nodes) acc += log(absz(n.h)) * n.weight;
  return acc;
}

}  // namespace mahlerlab
