#pragma once

// Two-variable hypergeometric functions: Appell F1, F2, F4 and Horn H4.
//
//   F1(a;b,b';c;x,y)     = sum (a)_{k+n} (b)_k (b')_n / (c)_{k+n}      x^k/k! y^n/n!   |x|,|y| < 1
//   F2(a;b,b';c,c';x,y)  = sum (a)_{k+n} (b)_k (b')_n / ((c)_k (c')_n) x^k/k! y^n/n!   |x|+|y| < 1
//   F4(a,b;c,c';x,y)     = sum (a)_{k+n} (b)_{k+n} / ((c)_k (c')_n)    x^k/k! y^n/n!   sqrt|x|+sqrt|y| < 1
//   H4(al,be;ga,de;x,y)  = sum (al)_{2k+n} (be)_n / ((ga)_k (de)_n)    x^k/k! y^n/n!   2 sqrt|x|+|y| < 1
//
// Double series are summed over anti-diagonals k+n = N.  Every term is
// reached by multiplying term ratios (down the k = 0.. column for row starts,
// along each row in n), so no Pochhammer product is ever formed explicitly.

#include <cmath>
#include <utility>
#include <vector>

#include "lifsh/acceleration.hpp"
#include "lifsh/core.hpp"
#include "lifsh/hyper_core.hpp"
#include "lifsh/quadrature.hpp"

namespace lifsh {

struct AppellPoint {
  Complex x;
  Complex y;
};

inline bool in_f1_domain(const AppellPoint& p) { return std::abs(p.x) < 1.0 && std::abs(p.y) < 1.0; }
inline bool in_f2_domain(const AppellPoint& p) { return std::abs(p.x) + std::abs(p.y) < 1.0; }
inline bool in_f4_domain(const AppellPoint& p) {
  return std::sqrt(std::abs(p.x)) + std::sqrt(std::abs(p.y)) < 1.0;
}
inline bool in_h4_domain(const AppellPoint& p) { return 2.0 * std::sqrt(std::abs(p.x)) + std::abs(p.y) < 1.0; }

namespace detail {

// Anti-diagonal summation of a double series with T(0,0) = 1.
//   row_start(k)  = T(k+1, 0) / T(k, 0)
//   row_step(k,n) = T(k, n+1) / T(k, n)
// Converged once three consecutive diagonals have sum |T| <= tol |S|.
template <class RowStart, class RowStep>
SeriesResult sum_double_series(RowStart&& row_start, RowStep&& row_step, double tol) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  tol = std::max(tol, eps);
  const auto max_diag = static_cast<std::size_t>(std::sqrt(2.0 * static_cast<double>(term_cap())));

  std::vector<Complex> diag{Complex(1.0, 0.0)};  // diag[k] = T(k, N-k)
  Complex sum{1.0, 0.0};
  double abs_sum = 1.0;
  double prev_block = 1.0;
  int quiet = 0;
  std::size_t terms = 1;
  for (std::size_t n_diag = 1; n_diag <= max_diag; ++n_diag) {
    const Complex next_start = diag.back() * row_start(n_diag - 1);
    for (std::size_t k = 0; k < diag.size(); ++k) {
      diag[k] *= row_step(k, n_diag - 1 - k);
    }
    diag.push_back(next_start);
    Complex block{0.0, 0.0};
    double block_abs = 0.0;
    for (const Complex& t : diag) {
      block += t;
      block_abs += std::abs(t);
    }
    terms += diag.size();
    sum += block;
    abs_sum += block_abs;
    if (!is_finite(sum)) throw NoConvergence("double series overflowed");
    if (block_abs <= tol * std::abs(sum)) {
      if (++quiet >= 3) {
        const double rho = prev_block > 0.0 ? block_abs / prev_block : 0.0;
        const double tail = rho < 1.0 ? block_abs * rho / (1.0 - rho) : block_abs;
        SeriesResult out;
        out.value = sum;
        out.abs_err = tail + 8.0 * eps * abs_sum;
        out.terms_used = terms;
        out.converged = true;
        return out;
      }
    } else {
      quiet = 0;
    }
    prev_block = block_abs;
  }
  throw NoConvergence("double series: diagonal cap reached");
}

inline void require_not_pole(double c, const char* what) {
  if (is_nonpositive_integer(c)) throw PoleError(what);
}

}  // namespace detail

// F1 by its double series; requires |x| < 1 and |y| < 1.
inline SeriesResult f1_series(double a, double b, double bp, double c, Complex x, Complex y,
                              double tol = kDefaultTol) {
  detail::require_not_pole(c, "F1: c is a non-positive integer");
  if (!in_f1_domain({x, y})) throw DomainError("F1 series: need |x| < 1 and |y| < 1");
  return detail::sum_double_series(
      [&](std::size_t k) {
        const double dk = static_cast<double>(k);
        return x * ((a + dk) * (b + dk) / ((c + dk) * (dk + 1.0)));
      },
      [&](std::size_t k, std::size_t n) {
        const double dk = static_cast<double>(k);
        const double dn = static_cast<double>(n);
        return y * ((a + dk + dn) * (bp + dn) / ((c + dk + dn) * (dn + 1.0)));
      },
      tol);
}

// F1 by the Euler integral
//   Gamma(c)/(Gamma(a)Gamma(c-a)) int_0^1 u^{a-1}(1-u)^{c-a-1}(1-ux)^{-b}(1-uy)^{-b'} du,
// valid for c > a > 0 with x, y off the cut [1, inf).
inline SeriesResult f1_euler_integral(double a, double b, double bp, double c, Complex x, Complex y) {
  if (!(c > a && a > 0.0)) throw DomainError("F1 Euler integral: need c > a > 0");
  auto on_cut = [](Complex v) { return v.imag() == 0.0 && v.real() >= 1.0; };
  if (on_cut(x) || on_cut(y)) throw DomainError("F1 Euler integral: integrand pole on [0, 1]");
  const double norm = std::exp(std::lgamma(c) - std::lgamma(a) - std::lgamma(c - a));
  auto integrand = [&](double u, double left, double right) {
    const double w = std::pow(left, a - 1.0) * std::pow(right, c - a - 1.0);
    return w * principal_pow(1.0 - u * x, -b) * principal_pow(1.0 - u * y, -bp);
  };
  const auto re = quad::tanh_sinh([&](double u, double l, double r) { return integrand(u, l, r).real(); }, 0.0, 1.0);
  const auto im = quad::tanh_sinh([&](double u, double l, double r) { return integrand(u, l, r).imag(); }, 0.0, 1.0);
  SeriesResult out;
  out.value = norm * Complex(re.value, im.value);
  out.abs_err = norm * (re.abs_err + im.abs_err);
  out.converged = true;
  return out;
}

// Appell F1: the binomial product when c = a; double series inside |x|,|y| < 1;
// else the Euler integral when c > a > 0.
inline SeriesResult eval_f1(double a, double b, double bp, double c, Complex x, Complex y, double tol = kDefaultTol) {
  detail::require_not_pole(c, "F1: c is a non-positive integer");
  if (c == a) {
    // The Pochhammer ratio (a)_{k+n}/(c)_{k+n} is 1: the series factorizes into two binomials.
    SeriesResult out;
    out.value = principal_pow(1.0 - x, -b) * principal_pow(1.0 - y, -bp);
    out.abs_err = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
    out.terms_used = 1;
    out.converged = true;
    return out;
  }
  const double reach = std::max(std::abs(x), std::abs(y));
  const bool integral_ok = c > a && a > 0.0;
  if (reach < 1.0 && (reach <= 0.95 || !integral_ok)) return f1_series(a, b, bp, c, x, y, tol);
  if (integral_ok) return f1_euler_integral(a, b, bp, c, x, y);
  throw DomainError("F1: outside the series domain and the Euler integral needs c > a > 0");
}

// Appell F2 inside |x| + |y| < 1.
inline SeriesResult eval_f2(double a, double b, double bp, double c, double cp, Complex x, Complex y,
                            double tol = kDefaultTol) {
  detail::require_not_pole(c, "F2: c is a non-positive integer");
  detail::require_not_pole(cp, "F2: c' is a non-positive integer");
  if (!in_f2_domain({x, y})) throw DomainError("F2: need |x| + |y| < 1");
  return detail::sum_double_series(
      [&](std::size_t k) {
        const double dk = static_cast<double>(k);
        return x * ((a + dk) * (b + dk) / ((c + dk) * (dk + 1.0)));
      },
      [&](std::size_t k, std::size_t n) {
        const double dk = static_cast<double>(k);
        const double dn = static_cast<double>(n);
        return y * ((a + dk + dn) * (bp + dn) / ((cp + dn) * (dn + 1.0)));
      },
      tol);
}

// Appell F4 inside sqrt|x| + sqrt|y| < 1.
inline SeriesResult eval_f4(double a, double b, double c, double cp, Complex x, Complex y, double tol = kDefaultTol) {
  detail::require_not_pole(c, "F4: c is a non-positive integer");
  detail::require_not_pole(cp, "F4: c' is a non-positive integer");
  if (!in_f4_domain({x, y})) throw DomainError("F4: need sqrt|x| + sqrt|y| < 1");
  return detail::sum_double_series(
      [&](std::size_t k) {
        const double dk = static_cast<double>(k);
        return x * ((a + dk) * (b + dk) / ((c + dk) * (dk + 1.0)));
      },
      [&](std::size_t k, std::size_t n) {
        const double dk = static_cast<double>(k);
        const double dn = static_cast<double>(n);
        return y * ((a + dk + dn) * (b + dk + dn) / ((cp + dn) * (dn + 1.0)));
      },
      tol);
}

// H4 by its double series, 2 sqrt|x| + |y| < 1.
inline SeriesResult h4_double_series(double alpha, double beta, double gamma, double delta, Complex x, Complex y,
                                     double tol = kDefaultTol) {
  detail::require_not_pole(gamma, "H4: gamma is a non-positive integer");
  detail::require_not_pole(delta, "H4: delta is a non-positive integer");
  if (!in_h4_domain({x, y})) throw DomainError("H4 double series: need 2 sqrt|x| + |y| < 1");
  return detail::sum_double_series(
      [&](std::size_t k) {
        const double dk = static_cast<double>(k);
        return x * ((alpha + 2.0 * dk) * (alpha + 2.0 * dk + 1.0) / ((gamma + dk) * (dk + 1.0)));
      },
      [&](std::size_t k, std::size_t n) {
        const double dk = static_cast<double>(k);
        const double dn = static_cast<double>(n);
        return y * ((alpha + 2.0 * dk + dn) * (beta + dn) / ((delta + dn) * (dn + 1.0)));
      },
      tol);
}

// H4 as a single series in t with Gauss-function coefficients:
//   H4 = sum_n (al)_n (be)_n / (de)_n  2F1((n+al)/2, (n+al+1)/2; ga; 4s) t^n / n!.
// |t| < 1 is summed directly; |t| = 1 goes through Euler summation and is
// accepted only when at least ten digits stabilize.
inline SeriesResult h4_single_series(double alpha, double beta, double gamma, double delta, Complex s, Complex t,
                                     double tol = kDefaultTol) {
  detail::require_not_pole(gamma, "H4: gamma is a non-positive integer");
  detail::require_not_pole(delta, "H4: delta is a non-positive integer");
  const double mt = std::abs(t);
  if (mt > 1.0 + 1e-12) throw DomainError("H4 single series: need |t| <= 1");
  const Complex four_s = 4.0 * s;

  // coef_n = (al)_n (be)_n / ((de)_n n!) t^n, advanced by its ratio.
  Complex coef{1.0, 0.0};
  std::size_t next = 0;
  auto term = [&](std::size_t n) {
    while (next < n) {
      const double dn = static_cast<double>(next);
      coef *= t * ((alpha + dn) * (beta + dn) / ((delta + dn) * (dn + 1.0)));
      ++next;
    }
    if (coef == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    const double dn = static_cast<double>(n);
    return coef * eval_2f1(0.5 * (dn + alpha), 0.5 * (dn + alpha + 1.0), gamma, four_s, tol).value;
  };

  if (mt >= 1.0 - 1e-12) {
    AccelerationOptions opt;
    opt.tol = std::max(tol, 1e-14);
    return euler_summation(term, opt);
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const std::size_t cap = term_cap();
  Complex sum{0.0, 0.0};
  double abs_sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  int quiet = 0;
  for (std::size_t n = 0; n < cap; ++n) {
    const Complex tn = term(n);
    sum += tn;
    abs_sum += std::abs(tn);
    if (!is_finite(sum)) throw NoConvergence("H4 single series overflowed");
    const double a = std::abs(tn);
    if (coef == Complex(0.0, 0.0) || (a <= std::max(tol, eps) * std::abs(sum) && a <= prev)) {
      if (coef == Complex(0.0, 0.0) || ++quiet >= 3) {
        SeriesResult out;
        out.value = sum;
        const double rho = prev > 0.0 && std::isfinite(prev) ? std::min(a / prev, 0.999) : 0.0;
        out.abs_err = a * rho / (1.0 - rho) + 8.0 * eps * abs_sum;
        out.terms_used = n + 1;
        out.converged = true;
        return out;
      }
    } else {
      quiet = 0;
    }
    prev = a;
  }
  throw NoConvergence("H4 single series: term cap reached");
}

// H4 as a single series in s with Gauss-function coefficients:
//   H4 = sum_n (al)_{2n} / (ga)_n  2F1(al+2n, be; de; t) s^n / n!.
inline SeriesResult h4_dx_series(double alpha, double beta, double gamma, double delta, Complex s, Complex t,
                                 double tol = kDefaultTol) {
  detail::require_not_pole(gamma, "H4: gamma is a non-positive integer");
  detail::require_not_pole(delta, "H4: delta is a non-positive integer");
  if (std::abs(t) >= 1.0) throw DomainError("H4 (DX) series: need |t| < 1");
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const std::size_t cap = term_cap();
  Complex coef{1.0, 0.0};
  Complex sum{0.0, 0.0};
  double abs_sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  int quiet = 0;
  for (std::size_t n = 0; n < cap; ++n) {
    const double dn = static_cast<double>(n);
    const Complex tn = coef == Complex(0.0, 0.0) ? coef : coef * eval_2f1(alpha + 2.0 * dn, beta, delta, t, tol).value;
    sum += tn;
    abs_sum += std::abs(tn);
    if (!is_finite(sum)) throw NoConvergence("H4 (DX) series overflowed");
    const double a = std::abs(tn);
    if (coef == Complex(0.0, 0.0) || (a <= std::max(tol, eps) * std::abs(sum) && a <= prev)) {
      if (coef == Complex(0.0, 0.0) || ++quiet >= 3) {
        SeriesResult out;
        out.value = sum;
        const double rho = prev > 0.0 && std::isfinite(prev) ? std::min(a / prev, 0.999) : 0.0;
        out.abs_err = a * rho / (1.0 - rho) + 8.0 * eps * abs_sum;
        out.terms_used = n + 1;
        out.converged = true;
        return out;
      }
    } else {
      quiet = 0;
    }
    prev = a;
    coef *= s * ((alpha + 2.0 * dn) * (alpha + 2.0 * dn + 1.0) / ((gamma + dn) * (dn + 1.0)));
  }
  throw NoConvergence("H4 (DX) series: term cap reached");
}

namespace detail {

// Closed forms of H4 at gamma = 1/2 and gamma = 3/2 for a negative real first
// argument -x (x > 0) and real y:
//   H4(al,be;1/2,de;-x,y) = Re (1 +- 2i sqrt x)^{-al} 2F1(al,be;de; y/(1 +- 2i sqrt x))
//   H4(al,be;3/2,de;-x,y) = -+ Im (1 +- 2i sqrt x)^{1-al} 2F1(al-1,be;de; y/(1 +- 2i sqrt x)) / (2(al-1) sqrt x)
inline double h4_gamma_half_closed(double alpha, double beta, double delta, double x, double y, int sign,
                                   double tol = kDefaultTol) {
  if (!(x > 0.0)) throw DomainError("H4 gamma=1/2 closed form: need x > 0");
  const Complex w(1.0, 2.0 * sign * std::sqrt(x));
  return (principal_pow(w, -alpha) * eval_2f1(alpha, beta, delta, y / w, tol).value).real();
}

inline double h4_gamma_three_half_closed(double alpha, double beta, double delta, double x, double y, int sign,
                                         double tol = kDefaultTol) {
  if (!(x > 0.0)) throw DomainError("H4 gamma=3/2 closed form: need x > 0");
  if (alpha == 1.0) throw DomainError("H4 gamma=3/2 closed form: alpha = 1 is not covered");
  const double rx = std::sqrt(x);
  const Complex w(1.0, 2.0 * sign * rx);
  const double im = (principal_pow(w, 1.0 - alpha) * eval_2f1(alpha - 1.0, beta, delta, y / w, tol).value).imag();
  return -sign * im / (2.0 * (alpha - 1.0) * rx);
}

}  // namespace detail

// Horn H4.  Routes: double series inside 2 sqrt|x| + |y| < 1; the gamma = 1/2
// or 3/2 closed forms for real x < 0 and real y; otherwise the single series
// in y (|y| <= 1).
inline SeriesResult eval_h4(double alpha, double beta, double gamma, double delta, Complex x, Complex y,
                            double tol = kDefaultTol) {
  detail::require_not_pole(gamma, "H4: gamma is a non-positive integer");
  detail::require_not_pole(delta, "H4: delta is a non-positive integer");
  if (2.0 * std::sqrt(std::abs(x)) + std::abs(y) < 0.95) return h4_double_series(alpha, beta, gamma, delta, x, y, tol);
  const bool real_args = x.imag() == 0.0 && y.imag() == 0.0 && x.real() < 0.0;
  if (real_args && (gamma == 0.5 || (gamma == 1.5 && alpha != 1.0))) {
    SeriesResult out;
    out.value = gamma == 0.5 ? detail::h4_gamma_half_closed(alpha, beta, delta, -x.real(), y.real(), 1, tol)
                             : detail::h4_gamma_three_half_closed(alpha, beta, delta, -x.real(), y.real(), 1, tol);
    out.abs_err = 1e-14 * std::abs(out.value);
    out.converged = true;
    return out;
  }
  if (std::abs(y) <= 1.0) return h4_single_series(alpha, beta, gamma, delta, x, y, tol);
  if (in_h4_domain({x, y})) return h4_double_series(alpha, beta, gamma, delta, x, y, tol);
  throw DomainError("H4: no evaluation route for this point");
}

// H4 through Appell F2:
//   H4(al,be;ga,de;s,t) = (1+2 sqrt s)^{-al} F2(al,be,ga-1/2; de,2ga-1; t/(1+2 sqrt s), 4 sqrt s/(1+2 sqrt s)).
inline SeriesResult h4_via_f2(double alpha, double beta, double gamma, double delta, double s, Complex t,
                              double tol = kDefaultTol) {
  if (!(s >= 0.0)) throw DomainError("H4 via F2: need real s >= 0");
  const double rs = std::sqrt(s);
  const double d = 1.0 + 2.0 * rs;
  auto f = eval_f2(alpha, beta, gamma - 0.5, delta, 2.0 * gamma - 1.0, t / d, Complex(4.0 * rs / d, 0.0), tol);
  return detail::scaled(f, std::pow(d, -alpha));
}

// H4 with gamma = al - be + 1 through Appell F4:
//   H4(al,be;al-be+1,de;s,t) = ((1+r)/2)^{-al} F4(al,be;de,al-be+1; 2t/(1+r), (1-r)/(1+r)),  r = sqrt(1-4s).
inline SeriesResult h4_via_f4(double alpha, double beta, double delta, double s, Complex t, double tol = kDefaultTol) {
  if (!(s < 0.25)) throw DomainError("H4 via F4: need real s < 1/4");
  const double r = std::sqrt(1.0 - 4.0 * s);
  auto f = eval_f4(alpha, beta, delta, alpha - beta + 1.0, 2.0 * t / (1.0 + r), Complex((1.0 - r) / (1.0 + r), 0.0), tol);
  return detail::scaled(f, std::pow(0.5 * (1.0 + r), -alpha));
}

// Both sides of the quadratic transformation
//   F1(a; b, b; 2a; 1/r_-, 1/r_+) = ((x+y)/(2x))^{-2b} F1(b; a, b-a+1/2; a+1/2; -1/(x+y)^2, ((x-y)/(x+y))^2),
//   r_-+ = (1 + y^2 - x^2 +- sqrt(Delta))/2,  Delta = (1 + y^2 - x^2)^2 + 4x^2,
// each evaluated independently (series where convergent, else Euler integral).
inline std::pair<SeriesResult, SeriesResult> f1_quadratic_transform_pair(double a, double b, double x, double y,
                                                                          double tol = kDefaultTol) {
  if (!(x > 0.0) || !(x + y > 0.0)) throw DomainError("F1 quadratic transform: need x > 0 and x + y > 0");
  const double B = 1.0 + y * y - x * x;
  const double sq = std::sqrt(B * B + 4.0 * x * x);
  // r_big r_small = -x^2; recover the smaller root from the product.
  const double r_big = B >= 0.0 ? 0.5 * (B + sq) : 0.5 * (B - sq);
  const double r_small = -x * x / r_big;
  const auto lhs = eval_f1(a, b, b, 2.0 * a, Complex(1.0 / r_small, 0.0), Complex(1.0 / r_big, 0.0), tol);
  const double u = (x - y) / (x + y);
  auto rhs = eval_f1(b, a, b - a + 0.5, a + 0.5, Complex(-1.0 / ((x + y) * (x + y)), 0.0), Complex(u * u, 0.0), tol);
  rhs = detail::scaled(rhs, std::pow((x + y) / (2.0 * x), -2.0 * b));
  return {lhs, rhs};
}

}  // namespace lifsh
