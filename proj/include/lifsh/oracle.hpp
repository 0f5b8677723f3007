#pragma once

// Brute-force quadrature of the defining momentum integrals.  Only the
// integrands are used here: the inner integral J_D over x, the y-space
// integral of the D = 1 integrand J_1, and the m = 1 y-integral of J_2, J_3.

#include <cmath>

#include "lifsh/core.hpp"
#include "lifsh/feynman_integral.hpp"
#include "lifsh/quadrature.hpp"

namespace lifsh {

enum class RadialStrategy { VariableTransform, ExplicitCutoff };

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  std::size_t max_subdivisions = 2000;
  RadialStrategy radial = RadialStrategy::VariableTransform;
};

namespace detail {

inline quad::Tolerance to_tolerance(const QuadratureSpec& spec, double tighten = 1.0) {
  quad::Tolerance t;
  t.abs_tol = spec.abs_tol * tighten;
  t.rel_tol = spec.rel_tol * tighten;
  t.max_subdivisions = spec.max_subdivisions;
  return t;
}

inline SeriesResult to_result(double value, double err) {
  SeriesResult out;
  out.value = Complex(value, 0.0);
  out.abs_err = err;
  out.converged = true;
  return out;
}

// int_start^inf g(r) dr.  VariableTransform maps r = start + t/(1-t) onto
// [0, 1); ExplicitCutoff integrates doubling panels until two consecutive
// panels are negligible and charges the last one to the error as a tail bound.
template <class G>
quad::Estimate radial_integral(G&& g, double start, const QuadratureSpec& spec, double tighten = 1.0) {
  const auto tol = to_tolerance(spec, tighten);
  if (spec.radial == RadialStrategy::VariableTransform) {
    auto h = [&](double t) {
      if (t >= 1.0) return 0.0;
      const double u = 1.0 - t;
      return g(start + t / u) / (u * u);
    };
    return quad::adaptive_gk(h, 0.0, 1.0, tol);
  }
  double lo = start;
  double width = std::max(1.0, start);
  quad::Estimate total;
  int small = 0;
  for (int panel = 0; panel < 200; ++panel) {
    const auto piece = quad::adaptive_gk(g, lo, lo + width, tol);
    total.value += piece.value;
    total.abs_err += piece.abs_err;
    const double target = std::max(tol.abs_tol, tol.rel_tol * std::abs(total.value));
    if (std::abs(piece.value) <= target) {
      if (++small >= 2) {
        total.abs_err += std::abs(piece.value);
        return total;
      }
    } else {
      small = 0;
    }
    lo += width;
    width *= 2.0;
  }
  throw QuadratureError("radial_integral: explicit cutoff did not reach a negligible tail");
}

}  // namespace detail

// J_D(p; k1, k2) for D in {1, 2, 3} by direct quadrature over x.
inline SeriesResult quad_jd(int d, double p, const MassPair& k, const QuadratureSpec& spec = {}) {
  if (d < 1 || d > 3) throw DomainError("quad_jd: D must be 1, 2 or 3");
  if (k.kappa1 < 0.0 || k.kappa2 < 0.0) throw DomainError("quad_jd: masses must be non-negative");
  if (d < 3 && !(k.kappa1 > 0.0 && k.kappa2 > 0.0)) throw DomainError("quad_jd: need kappa1, kappa2 > 0 for D < 3");
  if (d == 3 && !(k.kappa1 + k.kappa2 > 0.0)) throw DomainError("quad_jd: need kappa1 + kappa2 > 0");
  const double k1s = k.kappa1 * k.kappa1;
  const double k2s = k.kappa2 * k.kappa2;
  const double h = 0.5 * p;
  // Squared distances to -p/2 and +p/2 of a point at radius r, angle c = cos(theta) to p.
  auto denom = [&](double r, double c) {
    const double a = r * r + h * h;
    const double b = r * p * c;
    return 1.0 / ((a - b + k1s) * (a + b + k2s));
  };

  if (d == 1) {
    // x = tan(u) over u in (-pi/2, pi/2).
    auto f = [&](double u) {
      const double x = std::tan(u);
      const double sec2 = 1.0 + x * x;
      return sec2 / (((x - h) * (x - h) + k1s) * ((x + h) * (x + h) + k2s));
    };
    const auto est = quad::adaptive_gk(f, -0.5 * kPi, 0.5 * kPi, detail::to_tolerance(spec));
    return detail::to_result(est.value / (2.0 * kPi), est.abs_err / (2.0 * kPi));
  }

  const auto inner_tol = detail::to_tolerance(spec, 1e-2);
  if (d == 2) {
    // int r dr int_0^{2 pi} dtheta, the angular range folded onto [0, pi].
    auto radial = [&](double r) {
      auto ang = [&](double t) { return denom(r, std::cos(t)); };
      return 2.0 * r * quad::adaptive_gk(ang, 0.0, kPi, inner_tol).value;
    };
    const auto est = detail::radial_integral(radial, 0.0, spec);
    const double norm = 1.0 / (4.0 * kPi * kPi);
    return detail::to_result(est.value * norm, est.abs_err * norm);
  }
  // D = 3: int r^2 dr int_{-1}^{1} dc 2 pi.
  auto radial = [&](double r) {
    auto ang = [&](double c) { return denom(r, c); };
    return 2.0 * kPi * r * r * quad::adaptive_gk(ang, -1.0, 1.0, inner_tol).value;
  };
  const auto est = detail::radial_integral(radial, 0.0, spec);
  const double norm = 1.0 / (8.0 * kPi * kPi * kPi);
  return detail::to_result(est.value * norm, est.abs_err * norm);
}

// I_{1,m}(p, q) for m in {3, 4, 5} as the y-space integral of J_1:
//   S(m) int_0^inf y^{m-1} dy int_0^pi sin^{m-2}(theta) J_1(p; k1, k2) dtheta,
//   k1 = |y - q/2|^2, k2 = |y + q/2|^2,  S(m) = [2 pi^{(m-1)/2}/Gamma((m-1)/2)] / (2 pi)^m.
// theta -> pi - theta swaps k1 and k2, so the angular range is folded onto
// [0, pi/2].  k1 vanishes at y = q/2, theta = 0: both the radial split point
// and the angular endpoint there use double-exponential quadrature.
inline SeriesResult quad_i1m(int m, double p, double q, const QuadratureSpec& spec = {}) {
  if (m < 3 || m > 5) throw DomainError("quad_i1m: m must be 3, 4 or 5");
  if (!(p > 0.0 && q > 0.0)) throw DomainError("quad_i1m: need p > 0 and q > 0");
  const double half_q = 0.5 * q;
  const double inner_rel = std::max(1e-13, spec.rel_tol * 1e-3);
  const double outer_rel = std::max(1e-12, spec.rel_tol * 1e-2);

  // Angular integral at radius y, with d = |y - q/2| passed exactly.  It grows
  // like log(1/d) as d -> 0, so the shell d < 1e-30 q contributes below
  // 1e-28 of the total and is dropped.
  auto angular = [&](double y, double d) {
    if (d < 1e-30 * q) return 0.0;
    auto f = [&](double theta, double left, double right) {
      (void)right;
      const double s = std::sin(0.5 * left);
      const double k1 = d * d + 2.0 * y * q * s * s;
      const double k2 = y * y + y * q * std::cos(theta) + half_q * half_q;
      const double sum = k1 + k2;
      const double j1 = sum / (2.0 * k1 * k2 * (p * p + sum * sum));
      return std::pow(std::sin(theta), m - 2) * j1;
    };
    return quad::tanh_sinh(f, 0.0, 0.5 * kPi, inner_rel).value;
  };
  auto weight = [&](double y) { return std::pow(y, m - 1); };

  // [0, q/2]: y = left, d = right.
  const auto near = quad::tanh_sinh(
      [&](double y, double left, double right) {
        (void)left;
        return weight(y) * angular(y, right);
      },
      0.0, half_q, outer_rel);
  // [q/2, inf): y = q/2 + t/(1-t) with t in [0, 1).
  const auto far = quad::tanh_sinh(
      [&](double t, double left, double right) {
        (void)t;
        if (!(right * right > 0.0)) return 0.0;
        const double d = left / right;
        const double y = half_q + d;
        if (d > 1e30 * (1.0 + q)) return 0.0;  // the integrand falls like y^{m-7}
        return weight(y) * angular(y, d) / (right * right);
      },
      0.0, 1.0, outer_rel);

  const double sm = 2.0 * std::pow(kPi, 0.5 * (m - 1)) / std::tgamma(0.5 * (m - 1)) / std::pow(2.0 * kPi, m);
  const double norm = 2.0 * sm;
  const double value = norm * (near.value + far.value);
  const double err = norm * (near.abs_err + far.abs_err);
  if (!(err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value)))) {
    throw QuadratureError("quad_i1m: error bound above the requested tolerance");
  }
  return detail::to_result(value, err);
}

// I_{D,1}(p, q), D in {2, 3}:  int dy/(2 pi) J_D(p; (y - q/2)^2, (y + q/2)^2),
// folded onto y >= 0 by the y -> -y symmetry and split at y = q/2 where the
// first mass vanishes.
inline SeriesResult quad_idm_m1(int d, double p, double q, const QuadratureSpec& spec = {}) {
  if (d != 2 && d != 3) throw DomainError("quad_idm_m1: D must be 2 or 3");
  if (!(p > 0.0) || !(q >= 0.0)) throw DomainError("quad_idm_m1: need p > 0 and q >= 0");
  const double half_q = 0.5 * q;
  const double rel = std::max(1e-13, spec.rel_tol * 1e-2);
  auto jd = [&](double dist_minus, double y) {
    const MassPair k{dist_minus * dist_minus, (y + half_q) * (y + half_q)};
    // The underflow and overflow regions carry negligible measure.
    if (!(k.kappa1 * k.kappa2 > 0.0) || !std::isfinite(k.kappa2)) return 0.0;
    return d == 2 ? inner_j2(p, k) : inner_j3(p, k);
  };
  quad::Estimate near{0.0, 0.0};
  if (q > 0.0) {
    near = quad::tanh_sinh(
        [&](double y, double left, double right) {
          (void)left;
          return jd(right, y);
        },
        0.0, half_q, rel);
  }
  const auto far = quad::tanh_sinh(
      [&](double t, double left, double right) {
        (void)t;
        if (!(right * right > 0.0)) return 0.0;
        const double dist = left / right;
        return jd(dist, half_q + dist) / (right * right);
      },
      0.0, 1.0, rel);
  const double norm = 2.0 / (2.0 * kPi);
  const double value = norm * (near.value + far.value);
  const double err = norm * (near.abs_err + far.abs_err);
  if (!(err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value)))) {
    throw QuadratureError("quad_idm_m1: error bound above the requested tolerance");
  }
  return detail::to_result(value, err);
}

}  // namespace lifsh
