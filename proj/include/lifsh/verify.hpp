#pragma once

// Named verification suites.  Each check compares two independent evaluation
// routes of one quantity and returns a VerifyReport; suites are plain vectors
// of reports.  Random points come from fixed seeds, so every run checks the
// same points.

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lifsh/complex_expansion.hpp"
#include "lifsh/core.hpp"
#include "lifsh/feynman_integral.hpp"
#include "lifsh/hyper_core.hpp"
#include "lifsh/multivar_hyper.hpp"
#include "lifsh/oracle.hpp"

namespace lifsh::verify {

using Reports = std::vector<VerifyReport>;

namespace detail {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double operator()(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline void append(Reports& out, const Reports& more) { out.insert(out.end(), more.begin(), more.end()); }

// A failed evaluation is a failed check, never a skipped one.
inline VerifyReport failed(std::string name, const std::string& why, double tol) {
  VerifyReport r;
  r.name = std::move(name);
  r.abs_dev = std::numeric_limits<double>::infinity();
  r.rel_dev = std::numeric_limits<double>::infinity();
  r.tol = tol;
  r.pass = false;
  r.note = why;
  return r;
}

template <class F>
void check(Reports& out, const std::string& name, double tol, const std::string& lhs_route, const std::string& rhs_route,
           F&& f) {
  try {
    const auto [lhs, rhs] = f();
    out.push_back(make_report(name, lhs, rhs, tol, lhs_route, rhs_route));
  } catch (const std::exception& e) {
    out.push_back(failed(name, e.what(), tol));
  }
}

inline std::pair<Complex, Complex> pair_of(double a, double b) { return {Complex(a, 0.0), Complex(b, 0.0)}; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Inner integrals J_D

// Appell-F1 form against the elementary closed forms at D = 1, 2, 3.
inline Reports inner_closed_forms(double tol = 1e-8, int configs = 10) {
  Reports out;
  detail::Sampler rnd(101);
  for (int d = 1; d <= 3; ++d) {
    for (int i = 0; i < configs; ++i) {
      const double p = rnd(0.05, 3.0);
      const MassPair k{rnd(0.1, 2.5), rnd(0.1, 2.5)};
      const std::string name = "J" + std::to_string(d) + " F1 form p=" + detail::fmt(p) + " k=(" +
                                detail::fmt(k.kappa1) + "," + detail::fmt(k.kappa2) + ")";
      detail::check(out, name, tol, "inner_jd_f1", "inner_j" + std::to_string(d),
                    [&] {
                      const double closed = d == 1 ? inner_j1(p, k) : d == 2 ? inner_j2(p, k) : inner_j3(p, k);
                      return detail::pair_of(inner_jd_f1(d, p, k), closed);
                    });
    }
  }
  return out;
}

// Appell-F1 form against the root-parametrized F1 form at D = 1, 1.5, 2.
inline Reports inner_kss(double tol = 1e-7, int configs = 10) {
  Reports out;
  detail::Sampler rnd(202);
  for (double d : {1.0, 1.5, 2.0}) {
    for (int i = 0; i < configs; ++i) {
      const double p = rnd(0.05, 3.0);
      const MassPair k{rnd(0.1, 2.5), rnd(0.1, 2.5)};
      const std::string name = "J_D roots D=" + detail::fmt(d) + " p=" + detail::fmt(p) + " k=(" +
                                detail::fmt(k.kappa1) + "," + detail::fmt(k.kappa2) + ")";
      detail::check(out, name, tol, "inner_jd_f1", "inner_jd_kss",
                    [&] { return detail::pair_of(inner_jd_f1(d, p, k), inner_jd_kss(d, p, k)); });
    }
  }
  return out;
}

// Closed forms against direct quadrature of the defining x-integral.
inline Reports inner_quadrature(double tol = 1e-8, int configs = 10) {
  Reports out;
  detail::Sampler rnd(303);
  QuadratureSpec spec;
  spec.abs_tol = 1e-14;
  spec.rel_tol = std::min(1e-10, 0.01 * tol);
  for (int d = 1; d <= 3; ++d) {
    for (int i = 0; i < configs; ++i) {
      const double p = rnd(0.05, 3.0);
      const MassPair k{rnd(0.1, 2.5), rnd(0.1, 2.5)};
      const std::string name = "J" + std::to_string(d) + " quadrature p=" + detail::fmt(p) + " k=(" +
                                detail::fmt(k.kappa1) + "," + detail::fmt(k.kappa2) + ")";
      detail::check(out, name, tol, "closed form", "quad_jd", [&] {
        const double closed = d == 1 ? inner_j1(p, k) : d == 2 ? inner_j2(p, k) : inner_j3(p, k);
        return detail::pair_of(closed, quad_jd(d, p, k, spec).real());
      });
    }
  }
  return out;
}

inline Reports inner_integrals(double tol) {
  Reports out = inner_closed_forms(tol);
  detail::append(out, inner_kss(tol));
  detail::append(out, inner_quadrature(tol));
  return out;
}

// ---------------------------------------------------------------------------
// Main result

// Reduced function against the integer-m closed forms on a 4x4 grid in [0.3, 3]^2.
inline Reports integer_m_forms(double tol = 1e-8) {
  Reports out;
  const double grid[] = {0.3, 1.2, 2.1, 3.0};
  using Closed = double (*)(double, double);
  const std::pair<int, Closed> forms[] = {
      {2, special_m2}, {3, special_m3}, {4, special_m4}, {5, special_m5}, {6, special_m6}};
  for (const auto& [m, closed] : forms) {
    for (double p : grid) {
      for (double q : grid) {
        const std::string name = "m=" + std::to_string(m) + " p=" + detail::fmt(p) + " q=" + detail::fmt(q);
        detail::check(out, name, tol, "i1m_hat", "special_m" + std::to_string(m), [&] {
          return detail::pair_of(i1m_hat({static_cast<double>(m), p, q}), closed(p, q));
        });
      }
    }
  }
  return out;
}

// The Gamma(-e) form against C1 times the reduced function.
inline Reports gamma_form(double tol = 1e-10) {
  Reports out;
  for (double m : {2.5, 3.3, 4.7, 5.6}) {
    for (double p : {0.4, 1.7}) {
      for (double q : {0.6, 2.2}) {
        const std::string name = "I = C1 I^ m=" + detail::fmt(m) + " p=" + detail::fmt(p) + " q=" + detail::fmt(q);
        detail::check(out, name, tol, "i1m", "c1*i1m_hat", [&] {
          return detail::pair_of(i1m({m, p, q}), c1_constant(0.5 * m - 1.0) * i1m_hat({m, p, q}));
        });
      }
    }
  }
  return out;
}

// Horn-function representation against the Gauss-function form.
inline Reports horn_representation(double tol = 1e-7) {
  Reports out;
  const double q = 1.3;
  for (double m : {2.5, 3.0, 3.5, 4.5, 5.0}) {
    for (double u : {0.2, 0.5, 1.0}) {
      const double p = u * q * q;
      const std::string name = "H4 form m=" + detail::fmt(m) + " p/q^2=" + detail::fmt(u);
      detail::check(out, name, tol, "i1m_via_h4", "i1m",
                    [&] { return detail::pair_of(i1m_via_h4({m, p, q}).real(), i1m({m, p, q})); });
    }
  }
  return out;
}

inline Reports main_result(double tol) {
  Reports out = integer_m_forms(tol);
  detail::append(out, gamma_form(tol));
  detail::append(out, horn_representation(tol));
  return out;
}

// ---------------------------------------------------------------------------
// Special cases and limits

// Richardson extrapolation of f(h) -> f(0) for an error expansion in h^2.
template <class F>
double extrapolate_h2(F&& f, double h) {
  return (4.0 * f(0.5 * h) - f(h)) / 3.0;
}

// Axis values against the reduced function extrapolated to p -> 0 and q -> 0.
inline Reports axis_limits(double tol = 1e-5) {
  Reports out;
  for (double e : {0.4, 0.5, 1.5}) {
    const double m = 2.0 * e + 2.0;
    const double p = 0.7;
    const double q = 1.1;
    detail::check(out, "q->0 eps_hat=" + detail::fmt(e), tol, "extrapolated i1m_hat", "i1m_q_axis", [&] {
      const double lim = extrapolate_h2([&](double h) { return i1m_hat({m, p, h}); }, 1e-2);
      return detail::pair_of(lim, i1m_q_axis(m, p));
    });
    detail::check(out, "p->0 eps_hat=" + detail::fmt(e), tol, "extrapolated i1m_hat", "i1m_p_axis", [&] {
      const double lim = extrapolate_h2([&](double h) { return i1m_hat({m, h, q}); }, 1e-3);
      return detail::pair_of(lim, i1m_p_axis(m, q));
    });
  }
  return out;
}

// Residue of I_{1,6-2eps} at eps -> 0: C1(2-eps) I^ against 1/(512 pi^3 eps).
inline Reports m6_pole(double tol = 1e-2) {
  Reports out;
  const double eps = 1e-3;
  detail::check(out, "m=6 pole coefficient eps=1e-3", tol, "c1*i1m_hat", "1/(512 pi^3 eps)", [&] {
    const double m = 6.0 - 2.0 * eps;
    return detail::pair_of(c1_constant(2.0 - eps) * i1m_hat({m, 1.0, 1.0}), 1.0 / (512.0 * kPi * kPi * kPi * eps));
  });
  return out;
}

// The explicit m = 1 and m = 4 points.
inline Reports explicit_points(double tol = 1e-12) {
  Reports out;
  for (double q : {0.5, 1.0, 2.0}) {
    detail::check(out, "I31 = I3m(m=1) q=" + detail::fmt(q), tol, "i31_closed", "i3m",
                  [&] { return detail::pair_of(i31_closed(q), i3m(1.0, 1.0, q)); });
    detail::check(out, "I14 = C1 I^_{1,4} q=" + detail::fmt(q), tol, "i14_closed", "c1*special_m4",
                  [&] { return detail::pair_of(i14_closed(q), c1_constant(1.0) * special_m4(1.0, q)); });
  }
  return out;
}

// Limit checks carry their own accuracy floor: extrapolation to the axes is
// good to about 1e-7 and the pole coefficient to O(eps).
inline Reports special_cases(double tol) {
  Reports out = integer_m_forms(tol);
  detail::append(out, explicit_points(tol));
  detail::append(out, axis_limits(std::max(tol, 1e-5)));
  detail::append(out, m6_pole(std::max(tol, 1e-2)));
  return out;
}

// ---------------------------------------------------------------------------
// Real and imaginary parts of 2F1

struct ComplexSample {
  double a, b, c;
  CartesianArg z;
};

// Points with |z| <= 0.8 and x > 0.05; parameters a, b in [0.1, 1.5], c in [1.1, 2.5].
inline std::vector<ComplexSample> complex_samples(int n, std::uint64_t seed, bool (*keep)(const CartesianArg&) = nullptr) {
  std::vector<ComplexSample> out;
  detail::Sampler rnd(seed);
  while (static_cast<int>(out.size()) < n) {
    const double r = 0.8 * std::sqrt(rnd(0.0, 1.0));
    const double phi = rnd(-kPi, kPi);
    const CartesianArg z(r * std::cos(phi), r * std::sin(phi));
    const ComplexSample s{rnd(0.1, 1.5), rnd(0.1, 1.5), rnd(1.1, 2.5), z};
    if (!(z.x > 0.05)) continue;
    if (keep && !keep(z)) continue;
    out.push_back(s);
  }
  return out;
}

inline std::string sample_name(const char* what, const ComplexSample& s) {
  return std::string(what) + " (a,b,c)=(" + detail::fmt(s.a) + "," + detail::fmt(s.b) + "," + detail::fmt(s.c) +
         ") z=" + detail::fmt(s.z.x) + (s.z.y < 0 ? "" : "+") + detail::fmt(s.z.y) + "i";
}

inline bool laplace_domain(const CartesianArg& z) { return z.x > 0.0 && z.mod2 < z.x; }

// Polar, Gauss-coefficient, Clausen-coefficient and Laplace routes against eval_2f1.
inline Reports complex_routes(double tol = 1e-8, double laplace_tol = 1e-6, int n = 30) {
  Reports out;
  for (const auto& s : complex_samples(n, 404)) {
    auto f = [&] { return eval_2f1(s.a, s.b, s.c, s.z.complex()).value; };
    detail::check(out, sample_name("polar", s), tol, "re_im_polar", "eval_2f1", [&] {
      const auto [x, y] = re_im_polar(s.a, s.b, s.c, s.z);
      return std::pair{Complex(x, y), f()};
    });
    detail::check(out, sample_name("gauss series", s), tol, "re/im_2f1_gauss_series", "eval_2f1", [&] {
      return std::pair{Complex(re_2f1_gauss_series(s.a, s.b, s.c, s.z).value,
                               im_2f1_gauss_series(s.a, s.b, s.c, s.z).value),
                       f()};
    });
    if (clausen_series_converges(s.z)) {
      detail::check(out, sample_name("clausen series", s), tol, "re/im_2f1_3f2_series", "eval_2f1", [&] {
        return std::pair{Complex(re_2f1_3f2_series(s.a, s.b, s.c, s.z).value,
                                 im_2f1_3f2_series(s.a, s.b, s.c, s.z).value),
                         f()};
      });
    }
    if (laplace_domain(s.z)) {
      detail::check(out, sample_name("laplace", s), laplace_tol, "re/im_2f1_laplace", "eval_2f1", [&] {
        return std::pair{Complex(re_2f1_laplace(s.a, s.b, s.c, s.z).value, im_2f1_laplace(s.a, s.b, s.c, s.z).value),
                         f()};
      });
    }
  }
  return out;
}

// The Clausen-coefficient route on points drawn inside its own convergence domain.
inline Reports clausen_routes(double tol = 1e-8, int n = 30) {
  Reports out;
  for (const auto& s : complex_samples(n, 505, [](const CartesianArg& z) { return clausen_series_converges(z); })) {
    detail::check(out, sample_name("clausen series", s), tol, "re/im_2f1_3f2_series", "re_im_polar", [&] {
      const auto [x, y] = re_im_polar(s.a, s.b, s.c, s.z);
      return std::pair{
          Complex(re_2f1_3f2_series(s.a, s.b, s.c, s.z).value, im_2f1_3f2_series(s.a, s.b, s.c, s.z).value),
          Complex(x, y)};
    });
  }
  return out;
}

inline Reports complex_expansion(double tol) {
  Reports out = complex_routes(tol, std::max(tol, 1e-6));
  detail::append(out, clausen_routes(tol));
  return out;
}

// ---------------------------------------------------------------------------
// Horn-function bridges

// Closed forms of H4 at gamma = 1/2, 3/2 (both signs) against its double series,
// on points -x, y with 2 sqrt x + |y| < 0.9.
inline Reports h4_closed_forms(double tol = 1e-9, int n = 20) {
  Reports out;
  detail::Sampler rnd(606);
  for (int i = 0; i < n; ++i) {
    double x, y;
    do {
      x = rnd(0.001, 0.2);
      y = rnd(-0.8, 0.8);
    } while (!(2.0 * std::sqrt(x) + std::abs(y) < 0.9));
    const double al = rnd(0.3, 2.5);
    const double be = rnd(0.3, 2.5);
    const double de = rnd(0.6, 3.0);
    const std::string pt = " (al,be,de)=(" + detail::fmt(al) + "," + detail::fmt(be) + "," + detail::fmt(de) +
                           ") x=" + detail::fmt(x) + " y=" + detail::fmt(y);
    for (int sign : {1, -1}) {
      const std::string sg = sign > 0 ? " sign=+" : " sign=-";
      detail::check(out, "H4 gamma=1/2" + sg + pt, tol, "h4_gamma_half", "h4_double_series", [&] {
        return detail::pair_of(h4_gamma_half(al, be, de, x, y, sign),
                               h4_double_series(al, be, 0.5, de, Complex(-x, 0.0), Complex(y, 0.0)).real());
      });
      detail::check(out, "H4 gamma=3/2" + sg + pt, tol, "h4_gamma_three_half", "h4_double_series", [&] {
        return detail::pair_of(h4_gamma_three_half(al, be, de, x, y, sign),
                               h4_double_series(al, be, 1.5, de, Complex(-x, 0.0), Complex(y, 0.0)).real());
      });
    }
  }
  return out;
}

// Real and imaginary parts of 2F1(a, 1; c; z) through H4 against eval_2f1.  The
// points keep the H4 arguments inside the double-series domain, so the two
// sides share no evaluation route.
inline Reports b1_bridges(double tol = 1e-9, int n = 10) {
  Reports out;
  detail::Sampler rnd(707);
  for (int i = 0; i < n; ++i) {
    CartesianArg z;
    do {
      z = CartesianArg(rnd(0.15, 0.6), rnd(-0.25, 0.25));
    } while (!(std::abs(z.y / z.x) + z.mod2 / z.x < 0.9));
    const double a = rnd(0.2, 1.8);
    const double c = rnd(1.1, 2.8);
    const std::string name = "2F1(a,1;c;z) via H4 a=" + detail::fmt(a) + " c=" + detail::fmt(c) + " z=" +
                             detail::fmt(z.x) + (z.y < 0 ? "" : "+") + detail::fmt(z.y) + "i";
    detail::check(out, name, tol, "re/im_2f1_b1_h4", "eval_2f1", [&] {
      return std::pair{Complex(re_2f1_b1_h4(a, c, z), im_2f1_b1_h4(a, c, z)), eval_2f1(a, 1.0, c, z.complex()).value};
    });
  }
  return out;
}

// Re z^a 2F1(a, b; c; z) through H4 against the principal power times eval_2f1.
inline Reports za_bridge(double tol = 1e-9, int n = 5) {
  Reports out;
  detail::Sampler rnd(808);
  for (int i = 0; i < n; ++i) {
    CartesianArg z;
    do {
      z = CartesianArg(rnd(0.15, 0.6), rnd(-0.25, 0.25));
    } while (!(std::abs(z.y / z.x) + z.mod2 / z.x < 0.9));
    const double a = rnd(0.2, 1.5), b = rnd(0.2, 1.5), c = rnd(1.1, 2.8);
    detail::check(out, "Re z^a 2F1 via H4 z=" + detail::fmt(z.x) + "+" + detail::fmt(z.y) + "i", tol, "re_za_2f1_h4",
                  "z^a eval_2f1", [&] {
                    const Complex lhs = principal_pow(z.complex(), a) * eval_2f1(a, b, c, z.complex()).value;
                    return detail::pair_of(re_za_2f1_h4(a, b, c, z), lhs.real());
                  });
  }
  return out;
}

// Double series, single series in t, single series in s, the F2 form and the
// F4 form of H4 on their shared domain (s >= 0 small, |t| <= 0.3).
inline Reports h4_representations(double tol = 1e-9, int n = 10) {
  Reports out;
  detail::Sampler rnd(909);
  for (int i = 0; i < n; ++i) {
    const double s = rnd(0.002, 0.03);
    const double t = rnd(-0.3, 0.3);
    const double al = rnd(0.3, 2.0), be = rnd(0.3, 2.0), ga = rnd(0.6, 2.5), de = rnd(0.6, 2.5);
    const Complex cs(s, 0.0), ct(t, 0.0);
    const std::string pt = " s=" + detail::fmt(s) + " t=" + detail::fmt(t);
    auto dbl = [&](double g) { return h4_double_series(al, be, g, de, cs, ct).value; };
    detail::check(out, "H4 single series in t" + pt, tol, "h4_single_series", "h4_double_series",
                  [&] { return std::pair{h4_single_series(al, be, ga, de, cs, ct).value, dbl(ga)}; });
    detail::check(out, "H4 single series in s" + pt, tol, "h4_dx_series", "h4_double_series",
                  [&] { return std::pair{h4_dx_series(al, be, ga, de, cs, ct).value, dbl(ga)}; });
    detail::check(out, "H4 via F2" + pt, tol, "h4_via_f2", "h4_single_series", [&] {
      return std::pair{h4_via_f2(al, be, ga, de, s, ct).value, h4_single_series(al, be, ga, de, cs, ct).value};
    });
    detail::check(out, "H4 via F4" + pt, tol, "h4_via_f4", "h4_double_series",
                  [&] { return std::pair{h4_via_f4(al, be, de, s, ct).value, dbl(al - be + 1.0)}; });
  }
  return out;
}

inline Reports horn_bridges(double tol) {
  Reports out = h4_closed_forms(tol);
  detail::append(out, b1_bridges(tol));
  detail::append(out, za_bridge(tol));
  detail::append(out, h4_representations(tol));
  return out;
}

// ---------------------------------------------------------------------------
// F1 quadratic transformation

// Both sides at a = 1 on configurations where both are evaluable.  Draws that
// neither route can evaluate are redrawn; the count is recorded in the note.
inline Reports f1_transform(double tol = 1e-8, int n = 10) {
  Reports out;
  detail::Sampler rnd(1010);
  int redrawn = 0;
  while (static_cast<int>(out.size()) < n) {
    const double b = rnd(0.3, 1.8);
    const double x = rnd(0.1, 1.5);
    const double y = rnd(-0.5 * x, 1.5);
    std::pair<SeriesResult, SeriesResult> sides;
    try {
      sides = f1_quadratic_transform_pair(1.0, b, x, y);
    } catch (const DomainError&) {
      ++redrawn;
      continue;
    }
    auto r = make_report("F1 quadratic transform b=" + detail::fmt(b) + " x=" + detail::fmt(x) + " y=" +
                             detail::fmt(y),
                         sides.first.value, sides.second.value, tol, "F1(1/r-,1/r+)", "F1(-1/(x+y)^2,...)");
    out.push_back(r);
  }
  if (!out.empty()) out.front().note = "inadmissible draws: " + std::to_string(redrawn);
  return out;
}

// ---------------------------------------------------------------------------
// Quadrature oracle

inline Reports oracle_main(double tol = 1e-6) {
  Reports out;
  const std::pair<double, double> pts[] = {{0.5, 0.5}, {1.0, 1.0}, {0.7, 1.3}, {2.0, 0.8}, {0.3, 2.0}};
  for (int m : {3, 4, 5}) {
    for (const auto& [p, q] : pts) {
      detail::check(out, "quad_i1m m=" + std::to_string(m) + " p=" + detail::fmt(p) + " q=" + detail::fmt(q), tol,
                    "quad_i1m", "c1*i1m_hat", [&] {
                      const double e = 0.5 * m - 1.0;
                      return detail::pair_of(quad_i1m(m, p, q).real(), c1_constant(e) * i1m_hat({double(m), p, q}));
                    });
    }
  }
  return out;
}

inline Reports oracle_m1(double tol = 1e-6) {
  Reports out;
  for (double q : {0.5, 1.0, 2.0}) {
    detail::check(out, "I21 q=" + detail::fmt(q), tol, "i21_closed", "quad_idm_m1",
                  [&] { return detail::pair_of(i21_closed(q), quad_idm_m1(2, 1.0, q).real()); });
    detail::check(out, "I31 q=" + detail::fmt(q), tol, "i31_closed", "quad_idm_m1",
                  [&] { return detail::pair_of(i31_closed(q), quad_idm_m1(3, 1.0, q).real()); });
  }
  return out;
}

inline Reports oracle(double tol) {
  Reports out = oracle_main(tol);
  detail::append(out, oracle_m1(tol));
  detail::append(out, inner_quadrature(tol, 5));
  return out;
}

// ---------------------------------------------------------------------------
// Properties on randomized grids

inline Reports properties(double tol = 1e-9) {
  Reports out;
  detail::Sampler rnd(1111);
  // Positivity of the reduced function.
  for (int i = 0; i < 50; ++i) {
    const double m = rnd(2.01, 5.99), p = rnd(0.01, 10.0), q = rnd(0.01, 10.0);
    const std::string name = "positivity m=" + detail::fmt(m) + " p=" + detail::fmt(p) + " q=" + detail::fmt(q);
    try {
      const double v = i1m_hat({m, p, q});
      VerifyReport r = make_report(name, v, v, tol, "i1m_hat", "> 0");
      r.pass = v > 0.0 && std::isfinite(v);
      out.push_back(r);
    } catch (const std::exception& e) {
      out.push_back(detail::failed(name, e.what(), tol));
    }
  }
  // Homogeneity I(l p, sqrt(l) q) = l^{-2+e} I(p, q).
  for (int i = 0; i < 50; ++i) {
    const double m = rnd(2.1, 5.9), p = rnd(0.1, 3.0), q = rnd(0.1, 3.0), l = rnd(0.5, 3.0);
    detail::check(out, "homogeneity m=" + detail::fmt(m) + " lambda=" + detail::fmt(l), tol, "i1m(l p, sqrt(l) q)",
                  "l^{e-2} i1m(p,q)", [&] {
                    return detail::pair_of(i1m({m, l * p, std::sqrt(l) * q}),
                                           std::pow(l, 0.5 * m - 3.0) * i1m({m, p, q}));
                  });
  }
  // Mass symmetry of J_D.
  for (int i = 0; i < 40; ++i) {
    const double d = i % 4 == 0 ? 1.0 : i % 4 == 1 ? 2.0 : i % 4 == 2 ? 3.0 : rnd(0.5, 3.5);
    const double p = rnd(0.05, 3.0);
    const MassPair k{rnd(0.1, 2.5), rnd(0.1, 2.5)};
    const MassPair swapped{k.kappa2, k.kappa1};
    detail::check(out, "mass symmetry D=" + detail::fmt(d), tol, "J_D(k1,k2)", "J_D(k2,k1)", [&] {
      if (d == 1.0) return detail::pair_of(inner_j1(p, k), inner_j1(p, swapped));
      if (d == 2.0) return detail::pair_of(inner_j2(p, k), inner_j2(p, swapped));
      if (d == 3.0) return detail::pair_of(inner_j3(p, k), inner_j3(p, swapped));
      return detail::pair_of(inner_jd_f1(d, p, k), inner_jd_f1(d, p, swapped));
    });
  }
  // Conjugation symmetry of 2F1.
  for (int i = 0; i < 30; ++i) {
    const double a = rnd(-1.5, 2.5), b = rnd(-1.5, 2.5), c = rnd(0.3, 3.0);
    const double r = rnd(0.0, 0.95), phi = rnd(-kPi, kPi);
    const Complex z = std::polar(r, phi);
    detail::check(out, "conjugation z=" + detail::fmt(z.real()) + "+" + detail::fmt(z.imag()) + "i", tol,
                  "2F1(conj z)", "conj 2F1(z)", [&] {
                    return std::pair{eval_2f1(a, b, c, std::conj(z)).value, std::conj(eval_2f1(a, b, c, z).value)};
                  });
  }
  // X even and Y odd under y -> -y.
  for (int i = 0; i < 30; ++i) {
    const double a = rnd(0.1, 1.5), b = rnd(0.1, 1.5), c = rnd(1.1, 2.5);
    const double x = rnd(0.05, 0.55), y = rnd(0.05, 0.55);
    const CartesianArg up(x, y), down(x, -y);
    detail::check(out, "y-parity z=" + detail::fmt(x) + "+-" + detail::fmt(y) + "i", tol, "X(z) - iY(z)",
                  "X(conj z) + iY(conj z)", [&] {
                    const double xu = re_2f1_gauss_series(a, b, c, up).value;
                    const double yu = im_2f1_gauss_series(a, b, c, up).value;
                    const double xd = re_2f1_gauss_series(a, b, c, down).value;
                    const double yd = im_2f1_gauss_series(a, b, c, down).value;
                    return std::pair{Complex(xu, -yu), Complex(xd, yd)};
                  });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Registry used by the command-line front end.

inline const std::map<std::string, std::function<Reports(double)>>& suites() {
  static const std::map<std::string, std::function<Reports(double)>> table = {
      {"inner-integrals", inner_integrals}, {"main-result", main_result},   {"special-cases", special_cases},
      {"complex-expansion", complex_expansion}, {"horn-bridges", horn_bridges}, {"f1-transform", [](double t) { return f1_transform(t); }},
      {"oracle", oracle},                  {"properties", properties},
  };
  return table;
}

}  // namespace lifsh::verify
