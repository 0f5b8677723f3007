#pragma once

// The anisotropic two-denominator integral
//   I_{D,m}(p, q) = int d^D x d^m y / (2 pi)^{D+m}  1/((x - p/2)^2 + (y - q/2)^4)  1/((x + p/2)^2 + (y + q/2)^4)
// and its one-loop inner integral
//   J_D(p; k1, k2) = int d^D x / (2 pi)^D  1/((x - p/2)^2 + k1^2)  1/((x + p/2)^2 + k2^2).
//
// At D = 1 the parameter e = m/2 - 1 lies in (0, 2) and the reduced function
// I^ = I / C1(e) is analytic in e; with z = q^2 - 2ip and y = -q^2/z,
//   I^(p, q) = Im z^{e-1} 2F1(1, 1-e; 1+e; y) / (2 (1-e) p).

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/digamma.hpp>

#include "lifsh/core.hpp"
#include "lifsh/hyper_core.hpp"
#include "lifsh/multivar_hyper.hpp"

namespace lifsh {

struct IntegralPoint {
  double m = 3.0;
  double p = 1.0;
  double q = 1.0;

  double eps_hat() const { return 0.5 * m - 1.0; }
};

struct MassPair {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
};

// C1(e) = 16^{-e} pi^{-1-e} Gamma(2-e) / e, for e in (0, 2).
inline double c1_constant(double e) {
  if (!(e > 0.0 && e < 2.0)) throw DomainError("c1_constant: need 0 < eps_hat < 2");
  return std::pow(16.0, -e) * std::pow(kPi, -1.0 - e) * std::tgamma(2.0 - e) / e;
}

// gamma_D = (4 pi)^{-D/2} Gamma(2 - D/2).
inline double gamma_d(double d) {
  if (is_nonpositive_integer(2.0 - 0.5 * d)) throw PoleError("gamma_D: pole of Gamma(2 - D/2)");
  return std::pow(4.0 * kPi, -0.5 * d) * std::tgamma(2.0 - 0.5 * d);
}

// ---------------------------------------------------------------------------
// Inner integrals

inline double inner_j1(double p, const MassPair& k) {
  if (!(k.kappa1 > 0.0 && k.kappa2 > 0.0)) throw DomainError("inner_j1: need kappa1, kappa2 > 0");
  const double s = k.kappa1 + k.kappa2;
  return s / (2.0 * k.kappa1 * k.kappa2 * (p * p + s * s));
}

// J2 = ln((A + sqrt Delta)/(2 k1 k2)) / (2 pi sqrt Delta),  A = p^2 + k1^2 + k2^2,
// Delta = ((k1+k2)^2 + p^2)((k2-k1)^2 + p^2) = A^2 - 4 k1^2 k2^2.
// With s = sqrt(Delta)/A the logarithm equals atanh(s), and atanh(s)/s keeps
// the Delta -> 0 limit (p = 0, k1 = k2) regular.
inline double inner_j2(double p, const MassPair& k) {
  if (!(k.kappa1 > 0.0 && k.kappa2 > 0.0)) throw DomainError("inner_j2: need kappa1, kappa2 > 0");
  // J2 is homogeneous of degree -2; work in units of the largest scale.
  const double scale = std::max({p, k.kappa1, k.kappa2});
  if (scale != 1.0) {
    const double r = 1.0 / scale;
    return inner_j2(p * r, MassPair{k.kappa1 * r, k.kappa2 * r}) * r * r;
  }
  const double k1 = k.kappa1;
  const double k2 = k.kappa2;
  const double A = p * p + k1 * k1 + k2 * k2;
  const double delta = ((k1 + k2) * (k1 + k2) + p * p) * ((k2 - k1) * (k2 - k1) + p * p);
  const double sd = std::sqrt(delta);
  const double s = sd / A;
  if (s > 0.5) return (std::log(A + sd) - std::log(2.0 * k1) - std::log(k2)) / (2.0 * kPi * sd);
  double ratio;  // atanh(s)/s
  if (s < 1e-4) {
    const double s2 = s * s;
    ratio = 1.0 + s2 / 3.0 + s2 * s2 / 5.0;
  } else {
    ratio = std::atanh(s) / s;
  }
  return ratio / (2.0 * kPi * A);
}

// J3 = arctan(p/(k1+k2)) / (4 pi p).
inline double inner_j3(double p, const MassPair& k) {
  if (k.kappa1 < 0.0 || k.kappa2 < 0.0) throw DomainError("inner_j3: masses must be non-negative");
  const double s = k.kappa1 + k.kappa2;
  if (!(s > 0.0) && !(p > 0.0)) throw DomainError("inner_j3: need p > 0 or kappa1 + kappa2 > 0");
  if (s == 0.0) return 1.0 / (8.0 * p);
  if (p < 1e-4 * s) {
    const double u2 = (p / s) * (p / s);
    return (1.0 - u2 / 3.0 + u2 * u2 / 5.0) / (4.0 * kPi * s);
  }
  return std::atan2(p, s) / (4.0 * kPi * p);
}

// J_D = gamma_D ((k1+k2)/2)^{D-4} F1(2-D/2; 1, 3/2-D/2; 3/2; -p^2/(k1+k2)^2, (k2-k1)^2/(k1+k2)^2).
inline double inner_jd_f1(double d, double p, const MassPair& k, double tol = kDefaultTol) {
  if (!(d > 0.0 && d < 4.0)) {
    if (d == 4.0) throw PoleError("inner_jd_f1: D = 4");
    throw DomainError("inner_jd_f1: need 0 < D < 4");
  }
  if (k.kappa1 < 0.0 || k.kappa2 < 0.0 || !(k.kappa1 + k.kappa2 > 0.0)) {
    throw DomainError("inner_jd_f1: need non-negative masses with kappa1 + kappa2 > 0");
  }
  const double s = k.kappa1 + k.kappa2;
  const double x = -(p / s) * (p / s);
  const double u = (k.kappa2 - k.kappa1) / s;
  const auto f = eval_f1(2.0 - 0.5 * d, 1.0, 1.5 - 0.5 * d, 1.5, Complex(x, 0.0), Complex(u * u, 0.0), tol);
  return gamma_d(d) * std::pow(0.5 * s, d - 4.0) * f.value.real();
}

// One massless line: J_D(p; 0, k) = gamma_D k^{D-4} 2F1(2-D/2, 1; D/2; -p^2/k^2) / (D/2 - 1).
inline double inner_jd_zero_mass(double d, double p, double kappa, double tol = kDefaultTol) {
  if (!(kappa > 0.0)) throw DomainError("inner_jd_zero_mass: need kappa > 0");
  if (!(d > 0.0 && d < 4.0)) throw DomainError("inner_jd_zero_mass: need 0 < D < 4");
  if (d == 2.0) throw PoleError("inner_jd_zero_mass: D = 2 (logarithmic divergence)");
  const double t = p / kappa;
  const auto f = eval_2f1(2.0 - 0.5 * d, 1.0, 0.5 * d, Complex(-t * t, 0.0), tol);
  return gamma_d(d) * std::pow(kappa, d - 4.0) * f.value.real() / (0.5 * d - 1.0);
}

// J_D = gamma_D k1^{D-4} F1(1; 2-D/2, 2-D/2; 2; 1/r_-, 1/r_+),
// r_-+ = (p^2 + k2^2 - k1^2 -+ sqrt Delta)/(2 p^2),  Delta = (p^2 + k2^2 - k1^2)^2 + 4 k1^2 p^2.
// r_- r_+ = -k1^2/p^2: the root of smaller modulus is recovered from the product.
inline double inner_jd_kss(double d, double p, const MassPair& k, double tol = kDefaultTol) {
  if (!(k.kappa1 > 0.0)) throw DomainError("inner_jd_kss: need kappa1 > 0");
  if (!(p > 0.0)) throw DomainError("inner_jd_kss: need p > 0");
  if (!(d > 0.0 && d < 4.0)) throw DomainError("inner_jd_kss: need 0 < D < 4");
  const double p2 = p * p;
  const double B = p2 + k.kappa2 * k.kappa2 - k.kappa1 * k.kappa1;
  const double sd = std::hypot(B, 2.0 * k.kappa1 * p);
  double r_minus;
  double r_plus;
  if (B >= 0.0) {
    r_plus = (B + sd) / (2.0 * p2);
    r_minus = -(k.kappa1 * k.kappa1 / p2) / r_plus;
  } else {
    r_minus = (B - sd) / (2.0 * p2);
    r_plus = -(k.kappa1 * k.kappa1 / p2) / r_minus;
  }
  const double b = 2.0 - 0.5 * d;
  const auto f = eval_f1(1.0, b, b, 2.0, Complex(1.0 / r_minus, 0.0), Complex(1.0 / r_plus, 0.0), tol);
  return gamma_d(d) * std::pow(k.kappa1, d - 4.0) * f.value.real();
}

// ---------------------------------------------------------------------------
// Axis values of the reduced function

// I^(p, 0) = (2p)^{-2+e} cos(pi e/2)/(1-e), written as (pi/2) sinc(pi (1-e)/2).
inline double i1m_q_axis(double m, double p) {
  const double e = 0.5 * m - 1.0;
  if (!(e >= 0.0 && e <= 2.0)) throw DomainError("i1m_q_axis: need 2 <= m <= 6");
  if (!(p > 0.0)) throw DomainError("i1m_q_axis: need p > 0");
  return std::pow(2.0 * p, e - 2.0) * 0.5 * kPi * sinc(0.5 * kPi * (1.0 - e));
}

// I^(0, q) = q^{-4+2e} g(e) / (2(1-e)),  g(e) = e - sqrt(pi) Gamma(e+1)/Gamma(e-1/2).
// g(1) = 0; near e = 1 the quotient g(e)/(1-e) is replaced by -g'((1+e)/2), with
// g'(t) = 1 - sqrt(pi) Gamma(t+1)/Gamma(t-1/2) (psi(t+1) - psi(t-1/2)); the limit is ln 2.
inline double i1m_p_axis(double m, double q) {
  const double e = 0.5 * m - 1.0;
  if (!(e >= 0.0 && e <= 2.0)) throw DomainError("i1m_p_axis: need 2 <= m <= 6");
  if (!(q > 0.0)) throw DomainError("i1m_p_axis: need q > 0");
  const double sqrt_pi = std::sqrt(kPi);
  double reduced;
  if (std::abs(e - 1.0) < 1e-4) {
    const double t = 0.5 * (1.0 + e);
    const double g_prime = 1.0 - sqrt_pi * std::tgamma(t + 1.0) / std::tgamma(t - 0.5) *
                                     (boost::math::digamma(t + 1.0) - boost::math::digamma(t - 0.5));
    reduced = -0.5 * g_prime;
  } else {
    const double g = e - sqrt_pi * std::tgamma(e + 1.0) * rgamma(e - 0.5);
    reduced = g / (2.0 * (1.0 - e));
  }
  return std::pow(q, 2.0 * e - 4.0) * reduced;
}

// ---------------------------------------------------------------------------
// Main result

namespace detail {

inline void check_point(const IntegralPoint& pt, double e_lo, double e_hi, const char* who) {
  const double e = pt.eps_hat();
  if (!(e >= e_lo && e <= e_hi)) throw DomainError(std::string(who) + ": m outside the validity window");
  if (!(pt.p >= 0.0) || !(pt.q >= 0.0)) throw DomainError(std::string(who) + ": need p, q >= 0");
  if (pt.p == 0.0 && pt.q == 0.0) throw DomainError(std::string(who) + ": p and q both zero");
}

inline constexpr double kM4Window = 0.05;

// Im z^{e-1} 2F1(1, 1-e; 1+e; y) / (1-e), evaluated without the 0/0 at e = 1
// inside the window: with al = 1 - e,
//   z^{-al} 2F1(1, al; 2-al; y) / al = z^{-al}/al + z^{-al} y 2F1(al+1, 1; 3-al; y)/(2-al),
//   Im z^{-al}/al = -|z|^{-al} phi sinc(al phi),  phi = Arg z.
inline double reduced_bracket(double e, Complex z, double tol) {
  const Complex y = -z.real() / z;  // -q^2/z with q^2 = Re z
  if (std::abs(e - 1.0) < kM4Window) {
    const double al = 1.0 - e;
    const double phi = std::arg(z);
    const double first = -std::pow(std::abs(z), -al) * phi * sinc(al * phi);
    const auto f = eval_2f1(al + 1.0, 1.0, 3.0 - al, y, tol);
    const double second = (principal_pow(z, -al) * y * f.value).imag() / (2.0 - al);
    return first + second;
  }
  const auto f = eval_2f1(1.0, 1.0 - e, 1.0 + e, y, tol);
  return (principal_pow(z, e - 1.0) * f.value).imag() / (1.0 - e);
}

}  // namespace detail

// Reduced function I^ = I/C1 for 2 <= m <= 6 (the endpoints are the m = 2 and
// m = 6 limits of the same expression).
inline double i1m_hat(const IntegralPoint& pt, double tol = kDefaultTol) {
  detail::check_point(pt, 0.0, 2.0, "i1m_hat");
  if (pt.p == 0.0) return i1m_p_axis(pt.m, pt.q);
  if (pt.q == 0.0) return i1m_q_axis(pt.m, pt.p);
  const Complex z(pt.q * pt.q, -2.0 * pt.p);
  return detail::reduced_bracket(pt.eps_hat(), z, tol) / (2.0 * pt.p);
}

// I_{1,m}(p, q) for 2 < m < 6.  Away from m = 4 this is the Gamma(-e) form
//   -(1/p) Gamma(-e)/(2^{1+4e} pi^{1+e}) Im z^{e-1} 2F1(1, 1-e; 1+e; y);
// near m = 4 and on the axes it is C1 I^.
inline double i1m(const IntegralPoint& pt, double tol = kDefaultTol) {
  detail::check_point(pt, 0.0, 2.0, "i1m");
  const double e = pt.eps_hat();
  if (!(e > 0.0 && e < 2.0)) throw DomainError("i1m: need 2 < m < 6");
  if (pt.p == 0.0 || pt.q == 0.0 || std::abs(e - 1.0) < detail::kM4Window) return c1_constant(e) * i1m_hat(pt, tol);
  const Complex z(pt.q * pt.q, -2.0 * pt.p);
  const Complex y = -(pt.q * pt.q) / z;
  const auto f = eval_2f1(1.0, 1.0 - e, 1.0 + e, y, tol);
  const double im = (principal_pow(z, e - 1.0) * f.value).imag();
  return -std::tgamma(-e) / (std::pow(2.0, 1.0 + 4.0 * e) * std::pow(kPi, 1.0 + e)) * im / pt.p;
}

// ---------------------------------------------------------------------------
// Closed forms at integer m

namespace detail {
inline void require_positive(double p, double q, const char* who) {
  if (!(p > 0.0 && q > 0.0)) throw DomainError(std::string(who) + ": need p > 0 and q > 0");
}
}  // namespace detail

inline double special_m2(double p, double q) {
  detail::require_positive(p, q, "special_m2");
  return 0.25 / (p * p + q * q * q * q);
}

// I^_{1,3} = -ln[(q^2 S + p^2 - p q sqrt2 sqrt(S + q^2))/(p^2 + q^4)] / (4pq),  S = sqrt(4p^2 + q^4).
// The bracket minus one is [4 p^2 q^2/(S + q^2) - p q sqrt2 sqrt(S + q^2)]/(p^2 + q^4).
inline double special_m3(double p, double q) {
  detail::require_positive(p, q, "special_m3");
  const double q2 = q * q;
  const double S = std::sqrt(4.0 * p * p + q2 * q2);
  const double delta = (4.0 * p * p * q2 / (S + q2) - p * q * std::sqrt(2.0) * std::sqrt(S + q2)) / (p * p + q2 * q2);
  return -std::log1p(delta) / (4.0 * p * q);
}

// I^_{1,4} = [ (p/q^2) ln((p^2 + q^4)/(p^2 + q^4/4)) + arctan(2p^3/(q^2 (3p^2 + q^4))) ] / (2p).
inline double special_m4(double p, double q) {
  detail::require_positive(p, q, "special_m4");
  const double q2 = q * q;
  const double q4 = q2 * q2;
  const double p2 = p * p;
  const double log_term = (p / q2) * std::log1p(0.75 * q4 / (p2 + 0.25 * q4));
  return (log_term + std::atan2(2.0 * p2 * p, q2 * (3.0 * p2 + q4))) / (2.0 * p);
}

// I^_{1,5} = -(3/(4q)) Re[ sqrt(zeta) - (1/u)(1 - ui)^2 ln((sqrt(zeta) + i)/(sqrt(zeta) - i)) ],
// u = p/q^2, zeta = 1 - 2ui.
inline double special_m5(double p, double q) {
  detail::require_positive(p, q, "special_m5");
  const double u = p / (q * q);
  const Complex zeta(1.0, -2.0 * u);
  const Complex rz = std::sqrt(zeta);
  const Complex i(0.0, 1.0);
  const Complex one_mui(1.0, -u);
  const Complex bracket = rz - (one_mui * one_mui / u) * std::log((rz + i) / (rz - i));
  return -0.75 / q * bracket.real();
}

inline double special_m6(double p, double q) {
  detail::require_positive(p, q, "special_m6");
  return 1.0;
}

// ---------------------------------------------------------------------------
// Horn-function representation
//   I_{1,m}(p, q) = C1 q^{-4+2e} H4(2-e, 1; 3/2, 1+e; -p^2/q^4, -1),
// with the H4 value taken from its single series in the second argument; at
// t = -1 that series is summed with Euler acceleration.
inline SeriesResult i1m_via_h4(const IntegralPoint& pt, double tol = kDefaultTol) {
  detail::check_point(pt, 0.0, 2.0, "i1m_via_h4");
  const double e = pt.eps_hat();
  if (!(e > 0.0 && e < 2.0)) throw DomainError("i1m_via_h4: need 2 < m < 6");
  if (!(pt.q > 0.0)) throw DomainError("i1m_via_h4: need q > 0");
  const double u = pt.p / (pt.q * pt.q);
  auto h = h4_single_series(2.0 - e, 1.0, 1.5, 1.0 + e, Complex(-u * u, 0.0), Complex(-1.0, 0.0), tol);
  return detail::scaled(h, c1_constant(e) * std::pow(pt.q, 2.0 * e - 4.0));
}

// ---------------------------------------------------------------------------
// D = 3 and the explicit m = 1 points

// I_{3,m}(p, q) = 8 (16 pi)^{-e3} Gamma(2-e3) (4p^2 + q^4)^{-1+e3/2} 2F1(1-e3/2, e3/2; 3/2; 4p^2/(4p^2+q^4)),
// e3 = m/2 + 1 in [1, 2).
inline double i3m(double m, double p, double q, double tol = kDefaultTol) {
  const double e3 = 0.5 * m + 1.0;
  if (!(e3 >= 1.0 && e3 < 2.0)) throw DomainError("i3m: need 0 <= m < 2");
  if (!(p >= 0.0 && q >= 0.0) || (p == 0.0 && q == 0.0)) throw DomainError("i3m: need p, q >= 0, not both zero");
  const double r = 4.0 * p * p + q * q * q * q;
  const double w = 4.0 * p * p / r;
  const auto f = eval_2f1(1.0 - 0.5 * e3, 0.5 * e3, 1.5, Complex(w, 0.0), tol);
  return 8.0 * std::pow(16.0 * kPi, -e3) * std::tgamma(2.0 - e3) * std::pow(r, -1.0 + 0.5 * e3) * f.value.real();
}

// I_{2,1}(1, q) = w^{1/4}/(4 sqrt2) 2F1(1/4, 1/4; 1; w),  w = 4/((1+q^4)^2 (4+q^4)).
inline double i21_closed(double q, double tol = kDefaultTol) {
  if (!(q >= 0.0)) throw DomainError("i21_closed: need q >= 0");
  const double q4 = q * q * q * q;
  const double w = 4.0 / ((1.0 + q4) * (1.0 + q4) * (4.0 + q4));
  const auto f = eval_2f1(0.25, 0.25, 1.0, Complex(w, 0.0), tol);
  return std::pow(w, 0.25) / (4.0 * std::sqrt(2.0)) * f.value.real();
}

// I_{3,1}(1, q) = sqrt(sqrt(4+q^4) - q^2)/(8 pi sqrt2) = q^{-1}/(4 pi sqrt2 sqrt(sqrt(1+4/q^4) + 1)).
inline double i31_closed(double q) {
  if (!(q >= 0.0)) throw DomainError("i31_closed: need q >= 0");
  const double q2 = q * q;
  if (q <= 1.0) return std::sqrt(std::sqrt(4.0 + q2 * q2) - q2) / (8.0 * kPi * std::sqrt(2.0));
  return 1.0 / (q * 4.0 * kPi * std::sqrt(2.0) * std::sqrt(std::sqrt(1.0 + 4.0 / (q2 * q2)) + 1.0));
}

// I_{1,4}(1, q) = [arctan(2/(q^2 (3+q^4))) + q^{-2} ln((1+q^4)/(1+q^4/4))] / (32 pi^2).
inline double i14_closed(double q) {
  if (!(q >= 0.0)) throw DomainError("i14_closed: need q >= 0");
  const double q2 = q * q;
  const double q4 = q2 * q2;
  const double at = std::atan2(2.0, q2 * (3.0 + q4));
  const double lg = q == 0.0 ? 0.0 : std::log1p(0.75 * q4 / (1.0 + 0.25 * q4)) / q2;
  return (at + lg) / (32.0 * kPi * kPi);
}

}  // namespace lifsh
