#pragma once

// Real part X and imaginary part Y of 2F1(a, b; c; z) for real parameters and
// z = x + iy, by several independent representations, and the Horn H4
// identities built on them.
//
//   polar       X + iY = sum (a)_k (b)_k / ((c)_k k!) |z|^k e^{ik phi}
//   Gauss       series in s = |z|^2/x with 2F1(.,.;1/2 or 3/2; -y^2/x^2) coefficients
//   Clausen     series in -y^2/x^2 with 3F2(.; s) coefficients
//   Laplace     1 + |z|^2 ab/c int_0^inf e^{-xt} (cos, sin)(yt) 2F2(a+1,b+1;c+1,2;|z|^2 t) dt

#include <cmath>
#include <limits>
#include <utility>

#include "lifsh/core.hpp"
#include "lifsh/hyper_core.hpp"
#include "lifsh/multivar_hyper.hpp"
#include "lifsh/quadrature.hpp"

namespace lifsh {

struct CartesianArg {
  double x = 0.0;
  double y = 0.0;
  double mod2 = 0.0;
  double phi = 0.0;

  CartesianArg() = default;
  CartesianArg(double re, double im) : x(re), y(im), mod2(re * re + im * im), phi(std::atan2(im, re)) {}
  explicit CartesianArg(Complex z) : CartesianArg(z.real(), z.imag()) {}

  Complex complex() const { return {x, y}; }
  double modulus() const { return std::sqrt(mod2); }
};

// A real component with its error estimate.  precision_loss is set when the
// summed terms are more than 1e3 times larger than the result.
struct PartResult {
  double value = 0.0;
  double abs_err = 0.0;
  std::size_t terms_used = 0;
  bool precision_loss = false;
};

inline constexpr double kPrecisionLossRatio = 1e3;

namespace detail {

inline void require_unit_disk(double a, double b, double c, const CartesianArg& z, const char* who) {
  if (is_nonpositive_integer(c)) throw PoleError(std::string(who) + ": c is a non-positive integer");
  if (!std::isfinite(z.x) || !std::isfinite(z.y)) throw DomainError(std::string(who) + ": non-finite argument");
  if (z.mod2 > 1.0) throw DomainError(std::string(who) + ": need |z| <= 1");
  if (z.mod2 == 1.0 && !(c - a - b > 0.0)) throw DomainError(std::string(who) + ": |z| = 1 needs c - a - b > 0");
}

struct ComponentTerm {
  double term;      // contribution of index k
  double envelope;  // bound on |term| that does not vanish accidentally
  double rho;       // bound on the envelope ratio beyond k (>= 1 if unknown)
};

// Sums a real series term by term.  Stops when the envelope and its tail fall
// below tol |S| three times in a row.  power_excess > 0 enables an algebraic
// tail bound env (k+1)/power_excess for series on |z| = 1.
template <class Step>
PartResult sum_component(Step&& step, double tol, double power_excess = 0.0) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  tol = std::max(tol, eps);
  const std::size_t cap = term_cap();
  double sum = 0.0;
  double abs_sum = 0.0;
  int quiet = 0;
  for (std::size_t k = 0; k < cap; ++k) {
    const ComponentTerm t = step(k);
    sum += t.term;
    abs_sum += std::abs(t.term);
    if (!std::isfinite(sum)) throw NoConvergence("component series overflowed");
    double tail = std::numeric_limits<double>::infinity();
    if (t.rho < 1.0) tail = t.envelope * t.rho / (1.0 - t.rho);
    if (power_excess > 0.0) tail = std::min(tail, t.envelope * static_cast<double>(k + 1) / power_excess);
    const double scale = std::max(std::abs(sum), std::numeric_limits<double>::min());
    if (k > 0 && t.envelope <= tol * scale && tail <= tol * scale) {
      if (++quiet >= 3) {
        PartResult out;
        out.value = sum;
        out.abs_err = tail + 4.0 * eps * abs_sum;
        out.terms_used = k + 1;
        out.precision_loss = abs_sum > kPrecisionLossRatio * std::abs(sum);
        return out;
      }
    } else {
      quiet = 0;
    }
  }
  throw NoConvergence("component series: term cap reached");
}

inline double unit_power_excess(double a, double b, double c, const CartesianArg& z) {
  return z.mod2 == 1.0 ? c - a - b : 0.0;
}

// Terms A_k s^k f_k of the Gauss-coefficient series, where A_k is built by
// its ratio (a+k)(b+k)/((c+k)(k+1)) and s = |z|^2/x.
template <class Inner>
PartResult gauss_coefficient_series(double a, double b, double c, double s, double r, Inner&& inner,
                                    double env_scale, double tol, double power_excess) {
  double coef = 1.0;  // A_k s^k
  double abs_coef = 1.0;
  return sum_component(
      [&](std::size_t k) {
        if (k > 0) {
          const double dk = static_cast<double>(k - 1);
          const double ratio = (a + dk) * (b + dk) / ((c + dk) * (dk + 1.0));
          coef *= ratio * s;
          abs_coef *= std::abs(ratio) * r;
        }
        const double dk = static_cast<double>(k);
        const double next = std::abs((a + dk) * (b + dk) / ((c + dk) * (dk + 1.0))) * r;
        return ComponentTerm{coef * inner(k), abs_coef * env_scale, std::max(next, r)};
      },
      tol, power_excess);
}

}  // namespace detail

// Reference evaluation from the polar form z = |z| e^{i phi}.
inline std::pair<double, double> re_im_polar(double a, double b, double c, const CartesianArg& z,
                                             double tol = kDefaultTol) {
  detail::require_unit_disk(a, b, c, z, "re_im_polar");
  const double r = z.modulus();
  const double excess = detail::unit_power_excess(a, b, c, z);
  auto part = [&](auto trig) {
    return detail::gauss_coefficient_series(
        a, b, c, r, r, [&](std::size_t k) { return trig(static_cast<double>(k) * z.phi); }, 1.0, tol, excess);
  };
  const double re = part([](double t) { return std::cos(t); }).value;
  const double im = z.y == 0.0 ? 0.0 : part([](double t) { return std::sin(t); }).value;
  return {re, im};
}

// Series in powers of s = |z|^2/x whose coefficients
//   2F1(k/2, (k+1)/2; 1/2; -t^2) = Re (1 + it)^{-k},
//   2F1((k+2)/2, (k+3)/2; 3/2; -t^2) = Im (1 - it)^{-(k+1)} / ((k+1) t),   t = y/x,
// are taken in closed form.  When |y| > |x| the series is expanded around
// w = iz instead: conj(z)^k = i^k conj(w)^k, so X and Y pick up the phase i^k.
namespace detail {

inline PartResult gauss_series_rotated(double a, double b, double c, const CartesianArg& z, bool imaginary,
                                       double tol) {
  const double xr = -z.y;  // w = iz = -y + ix
  const double yr = z.x;
  const double s = z.mod2 / xr;
  const double t = yr / xr;
  const Complex one_it(1.0, t);
  auto inner = [&](std::size_t k) {
    static constexpr Complex phase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex v = phase[k % 4] * principal_pow(one_it, -static_cast<double>(k));
    return imaginary ? -v.imag() : v.real();
  };
  const double env = 1.0;  // |s^k (1+it)^{-k}| = |z|^k, folded into r below
  return gauss_coefficient_series(a, b, c, s, std::abs(s) / std::abs(one_it), inner, env, tol,
                                  unit_power_excess(a, b, c, z));
}

}  // namespace detail

inline PartResult re_2f1_gauss_series(double a, double b, double c, const CartesianArg& z, double tol = kDefaultTol) {
  detail::require_unit_disk(a, b, c, z, "re_2f1_gauss_series");
  if (z.x == 0.0 && z.y == 0.0) return {1.0, 0.0, 1, false};
  if (std::abs(z.y) > std::abs(z.x)) return detail::gauss_series_rotated(a, b, c, z, false, tol);
  const double s = z.mod2 / z.x;
  const double t = z.y / z.x;
  const Complex one_it(1.0, t);
  auto inner = [&](std::size_t k) {
    if (t == 0.0) return 1.0;
    return principal_pow(one_it, -static_cast<double>(k)).real();
  };
  return detail::gauss_coefficient_series(a, b, c, s, z.modulus(), inner, 1.0, tol,
                                          detail::unit_power_excess(a, b, c, z));
}

inline PartResult im_2f1_gauss_series(double a, double b, double c, const CartesianArg& z, double tol = kDefaultTol) {
  detail::require_unit_disk(a, b, c, z, "im_2f1_gauss_series");
  if (z.y == 0.0) return {0.0, 0.0, 1, false};
  if (std::abs(z.y) > std::abs(z.x)) return detail::gauss_series_rotated(a, b, c, z, true, tol);
  const double s = z.mod2 / z.x;
  const double t = z.y / z.x;
  const Complex one_mit(1.0, -t);
  const double pre = z.y * (z.mod2 / (z.x * z.x)) * (a * b / c);
  if (pre == 0.0) return {0.0, 0.0, 1, false};
  auto inner = [&](std::size_t k) {
    const double k1 = static_cast<double>(k + 1);
    return principal_pow(one_mit, -k1).imag() / (k1 * t);
  };
  // |s^k (1-it)^{-(k+1)}| = |z|^k / |1 - it|
  auto part = detail::gauss_coefficient_series(a + 1.0, b + 1.0, c + 1.0, s, z.modulus(), inner,
                                               1.0 / std::abs(one_mit), tol, detail::unit_power_excess(a, b, c, z));
  part.value *= pre;
  part.abs_err *= std::abs(pre);
  return part;
}

// Convergence test of the Clausen-coefficient series: the coefficients
// 3F2(a+1, b+1, 2k+1; c+1, 2; s) grow like (1-s)^{-2k}, so the outer series in
// -t^2 needs |t| < 1 - s besides |s| < 1.
inline bool clausen_series_converges(const CartesianArg& z) {
  if (z.x == 0.0) return false;
  const double s = z.mod2 / z.x;
  const double t = z.y / z.x;
  return std::abs(s) < 1.0 && std::abs(t) < 1.0 - s;
}

namespace detail {

inline PartResult clausen_series(double a, double b, double c, const CartesianArg& z, bool imaginary, double tol) {
  if (is_nonpositive_integer(c)) throw PoleError("Clausen series: c is a non-positive integer");
  if (!clausen_series_converges(z)) {
    throw DomainError("Clausen series: need |z|^2/|x| < 1 and |y/x| < 1 - |z|^2/x");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  tol = std::max(tol, eps);
  const double s = z.mod2 / z.x;
  const double mt2 = -(z.y * z.y) / (z.x * z.x);
  const double shift = imaginary ? 2.0 : 1.0;
  const std::size_t cap = term_cap();
  double power = 1.0;
  double sum = 0.0;
  double abs_sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  int quiet = 0;
  for (std::size_t k = 0; k < cap; ++k) {
    const double top = 2.0 * static_cast<double>(k) + shift;
    const auto f = eval_pfq({{a + 1.0, b + 1.0, top}, {c + 1.0, 2.0}}, Complex(s, 0.0), tol);
    const double term = f.value.real() * power;
    sum += term;
    abs_sum += std::abs(term);
    if (!std::isfinite(sum)) throw NoConvergence("Clausen series overflowed");
    const double at = std::abs(term);
    const double rho = std::isfinite(prev) && prev > 0.0 ? std::min(at / prev, 0.999) : 0.999;
    const double tail = at * rho / (1.0 - rho);
    const double scale = std::max(std::abs(sum), std::numeric_limits<double>::min());
    if (at <= tol * scale && tail <= tol * scale) {
      if (++quiet >= 3) {
        PartResult out;
        out.value = sum;
        out.abs_err = tail + 4.0 * eps * abs_sum;
        out.terms_used = k + 1;
        out.precision_loss = abs_sum > kPrecisionLossRatio * std::abs(sum);
        return out;
      }
    } else {
      quiet = 0;
    }
    prev = at;
    power *= mt2;
    if (power == 0.0) {
      PartResult out{sum, 4.0 * eps * abs_sum, k + 1, abs_sum > kPrecisionLossRatio * std::abs(sum)};
      return out;
    }
  }
  throw NoConvergence("Clausen series: term cap reached");
}

}  // namespace detail

inline PartResult re_2f1_3f2_series(double a, double b, double c, const CartesianArg& z, double tol = kDefaultTol) {
  detail::require_unit_disk(a, b, c, z, "re_2f1_3f2_series");
  if (z.x == 0.0) throw DomainError("re_2f1_3f2_series: need x != 0");
  const double pre = (z.mod2 / z.x) * (a * b / c);
  if (pre == 0.0) return {1.0, 0.0, 1, false};
  auto part = detail::clausen_series(a, b, c, z, false, tol);
  part.value = 1.0 + pre * part.value;
  part.abs_err *= std::abs(pre);
  return part;
}

inline PartResult im_2f1_3f2_series(double a, double b, double c, const CartesianArg& z, double tol = kDefaultTol) {
  detail::require_unit_disk(a, b, c, z, "im_2f1_3f2_series");
  if (z.x == 0.0) throw DomainError("im_2f1_3f2_series: need x != 0");
  const double pre = z.y * (z.mod2 / (z.x * z.x)) * (a * b / c);
  if (pre == 0.0) return {0.0, 0.0, 1, false};
  auto part = detail::clausen_series(a, b, c, z, true, tol);
  part.value *= pre;
  part.abs_err *= std::abs(pre);
  return part;
}

namespace detail {

// e^{-shift} 2F2(a1, a2; b1, b2; w) for w >= 0.  Terms are carried as
// mantissa * e^{offset} with the offset renormalized whenever the mantissa
// drifts far from 1, so neither e^{-shift} nor the peak terms leave binary64
// range.
inline double damped_2f2(double a1, double a2, double b1, double b2, double w, double shift) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (w == 0.0) return std::exp(-shift);
  double offset = -shift;
  double term = 1.0;
  double sum = 1.0;
  int quiet = 0;
  for (std::size_t n = 0; n < term_cap(); ++n) {
    const double dn = static_cast<double>(n);
    term *= w * (a1 + dn) * (a2 + dn) / ((b1 + dn) * (b2 + dn) * (dn + 1.0));
    if (term == 0.0) break;
    sum += term;
    const double mag = std::abs(term);
    if (mag > 1e100 || mag < 1e-100) {
      const double lm = std::log(mag);
      term /= mag;
      sum *= std::exp(-lm);
      offset += lm;
    }
    if (dn > w && std::abs(term) <= eps * std::abs(sum)) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    if (n + 1 == term_cap()) throw NoConvergence("2F2: term cap reached");
  }
  return sum * std::exp(offset);
}

inline PartResult laplace_component(double a, double b, double c, const CartesianArg& z, bool imaginary, double tol) {
  detail::require_unit_disk(a, b, c, z, imaginary ? "im_2f1_laplace" : "re_2f1_laplace");
  if (!(z.x > 0.0) || !(z.mod2 < z.x)) throw DomainError("Laplace representation: need x > 0 and |z|^2 < x");
  const double pre = z.mod2 * a * b / c;
  if (pre == 0.0 || (imaginary && z.y == 0.0)) return {imaginary ? 0.0 : 1.0, 0.0, 1, false};
  tol = std::max(tol, 1e-13);

  const double decay = z.x - z.mod2;
  const double growth_power = a + b - c - 1.0;  // 2F2(w) ~ e^w w^{a+b-c-1}
  auto envelope = [&](double t) { return std::abs(damped_2f2(a + 1.0, b + 1.0, c + 1.0, 2.0, z.mod2 * t, z.x * t)); };
  auto integrand = [&](double t) {
    const double trig = imaginary ? std::sin(z.y * t) : std::cos(z.y * t);
    return trig * damped_2f2(a + 1.0, b + 1.0, c + 1.0, 2.0, z.mod2 * t, z.x * t);
  };

  const double panel = std::min(8.0, 2.0 / decay);
  constexpr std::size_t kMaxPanels = 200000;
  double total = 0.0;
  double err = 0.0;
  double l1 = 0.0;
  std::size_t evaluations = 0;
  for (std::size_t j = 0; j < kMaxPanels; ++j) {
    const double lo = panel * static_cast<double>(j);
    const double hi = lo + panel;
    quad::Tolerance qt;
    qt.abs_tol = 0.05 * tol * std::max(std::abs(total), 1e-3 * l1 + std::numeric_limits<double>::min());
    qt.rel_tol = 0.05 * tol;
    const auto piece = quad::adaptive_gk(integrand, lo, hi, qt);
    total += piece.value;
    err += piece.abs_err;
    l1 += std::abs(piece.value);
    evaluations += 31;
    const double eff = decay - std::max(growth_power, 0.0) / hi;
    if (eff > 0.0) {
      const double tail = envelope(hi) / eff;
      if (tail <= 0.1 * tol * std::max(std::abs(total), std::numeric_limits<double>::min()) ||
          std::abs(pre) * tail <= 0.1 * tol * std::abs(imaginary ? pre * total : 1.0 + pre * total)) {
        PartResult out;
        out.value = imaginary ? pre * total : 1.0 + pre * total;
        out.abs_err = std::abs(pre) * (err + tail);
        out.terms_used = evaluations;
        return out;
      }
    }
  }
  throw QuadratureError("Laplace representation: tail bound not reached");
}

}  // namespace detail

inline PartResult re_2f1_laplace(double a, double b, double c, const CartesianArg& z, double tol = 1e-12) {
  return detail::laplace_component(a, b, c, z, false, tol);
}

inline PartResult im_2f1_laplace(double a, double b, double c, const CartesianArg& z, double tol = 1e-12) {
  return detail::laplace_component(a, b, c, z, true, tol);
}

// H4(al, be; 1/2, de; -x, y) = Re (1 +- 2i sqrt x)^{-al} 2F1(al, be; de; y/(1 +- 2i sqrt x)).
inline double h4_gamma_half(double alpha, double beta, double delta, double x, double y, int sign,
                            double tol = kDefaultTol) {
  if (sign != 1 && sign != -1) throw DomainError("h4_gamma_half: sign must be +1 or -1");
  return detail::h4_gamma_half_closed(alpha, beta, delta, x, y, sign, tol);
}

// H4(al, be; 3/2, de; -x, y) = -+ Im (1 +- 2i sqrt x)^{1-al} 2F1(al-1, be; de; y/(1 +- 2i sqrt x)) / (2(al-1) sqrt x).
inline double h4_gamma_three_half(double alpha, double beta, double delta, double x, double y, int sign,
                                  double tol = kDefaultTol) {
  if (sign != 1 && sign != -1) throw DomainError("h4_gamma_three_half: sign must be +1 or -1");
  return detail::h4_gamma_three_half_closed(alpha, beta, delta, x, y, sign, tol);
}

// Re 2F1(a, 1; c; z) = 1 + (a/c)(|z|^2/x) H4(1, a+1; 1/2, c+1; -y^2/(4x^2), |z|^2/x).
inline double re_2f1_b1_h4(double a, double c, const CartesianArg& z, double tol = kDefaultTol) {
  if (z.x == 0.0) throw DomainError("re_2f1_b1_h4: need x != 0");
  const double s = z.mod2 / z.x;
  const double u = -(z.y * z.y) / (4.0 * z.x * z.x);
  const auto h = eval_h4(1.0, a + 1.0, 0.5, c + 1.0, Complex(u, 0.0), Complex(s, 0.0), tol);
  return 1.0 + (a / c) * s * h.value.real();
}

// Im 2F1(a, 1; c; z) = (a/c)(y |z|^2/x^2) H4(2, a+1; 3/2, c+1; -y^2/(4x^2), |z|^2/x).
inline double im_2f1_b1_h4(double a, double c, const CartesianArg& z, double tol = kDefaultTol) {
  if (z.x == 0.0) throw DomainError("im_2f1_b1_h4: need x != 0");
  if (z.y == 0.0) return 0.0;
  const double s = z.mod2 / z.x;
  const double u = -(z.y * z.y) / (4.0 * z.x * z.x);
  const auto h = eval_h4(2.0, a + 1.0, 1.5, c + 1.0, Complex(u, 0.0), Complex(s, 0.0), tol);
  return (a / c) * (z.y * z.mod2 / (z.x * z.x)) * h.value.real();
}

// Re z^a 2F1(a, b; c; z) = (|z|^2/x)^a H4(a, b; 1/2, c; -y^2/(4x^2), |z|^2/x) for x > 0.
inline double re_za_2f1_h4(double a, double b, double c, const CartesianArg& z, double tol = kDefaultTol) {
  if (!(z.x > 0.0)) throw DomainError("re_za_2f1_h4: need x > 0");
  const double s = z.mod2 / z.x;
  const double u = -(z.y * z.y) / (4.0 * z.x * z.x);
  const auto h = eval_h4(a, b, 0.5, c, Complex(u, 0.0), Complex(s, 0.0), tol);
  return std::pow(s, a) * h.value.real();
}

}  // namespace lifsh
