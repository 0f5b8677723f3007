#pragma once

// Reentrant one-dimensional quadrature kernels.  Each call owns its
// workspace; no state is shared between calls.

#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "lifsh/core.hpp"

namespace lifsh::quad {

struct Estimate {
  double value = 0.0;
  double abs_err = 0.0;
};

struct Tolerance {
  double abs_tol = 1e-13;
  double rel_tol = 1e-11;
  std::size_t max_subdivisions = 2000;
};

// Globally adaptive Gauss-Kronrod (G15/K31) on [a, b]: the interval with the
// largest |K - G| is bisected until the summed error meets the tolerance.
template <class F>
Estimate adaptive_gk(F&& f, double a, double b, const Tolerance& tol = {}) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  struct Piece {
    double a, b, value, err;
    bool operator<(const Piece& o) const { return err < o.err; }
  };
  auto rule = [&](double lo, double hi) {
    double err = 0.0;
    const double v = Rule::integrate(f, lo, hi, 0, 0.0, &err);
    return Piece{lo, hi, v, err};
  };
  if (a == b) return {};
  std::priority_queue<Piece> heap;
  Piece first = rule(a, b);
  double total = first.value;
  double total_err = first.err;
  heap.push(first);
  for (std::size_t n = 1;; ++n) {
    if (!std::isfinite(total)) throw QuadratureError("adaptive_gk: non-finite integrand");
    if (total_err <= std::max(tol.abs_tol, tol.rel_tol * std::abs(total))) break;
    if (n >= tol.max_subdivisions) throw QuadratureError("adaptive_gk: subdivision limit reached");
    const Piece worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) throw QuadratureError("adaptive_gk: interval underflow");
    const Piece left = rule(worst.a, mid);
    const Piece right = rule(mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
  }
  // Recompute the total from the pieces to shed accumulated update rounding.
  double sum = 0.0;
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().err;
    heap.pop();
  }
  return {sum, err};
}

// Double-exponential (tanh-sinh) quadrature on a finite [a, b] for integrands
// with endpoint singularities.  f(x, left, right) receives the distances
// x - a and b - x, the one near an endpoint being exact.
template <class F>
Estimate tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-12) {
  if (!(b > a)) throw DomainError("tanh_sinh: empty or reversed interval");
  boost::math::quadrature::tanh_sinh<double> integrator(15);
  // Boost passes xc = -(x - a) on the left half and b - x on the right half.
  auto g = [&](double x, double xc) {
    if (xc < 0.0) return f(x, -xc, b - x);
    return f(x, x - a, xc);
  };
  double err = 0.0;
  double l1 = 0.0;
  double v = 0.0;
  try {
    v = integrator.integrate(g, a, b, rel_tol, &err, &l1);
  } catch (const std::exception& e) {
    throw QuadratureError(std::string("tanh_sinh: ") + e.what());
  }
  if (!std::isfinite(v)) throw QuadratureError("tanh_sinh: non-finite result");
  if (err > std::max(1e3 * rel_tol * l1, 1e-300)) throw QuadratureError("tanh_sinh: tolerance not met");
  return {v, err};
}

}  // namespace lifsh::quad
