#pragma once

// Euler summation of slowly convergent, alternating or oscillating series.
//
// The K-fold Euler mean of the partial sums,
//   E_K(N) = 2^-K sum_j C(K, j) S_{N-K+j},
// damps an error component r^n e^{i n theta} by |(1 + r e^{i theta})/2|^K,
// so sign-alternating tails (theta = pi) are suppressed geometrically while
// ordinary convergent tails are never amplified.  The estimate is recomputed
// with N doubling until two successive values agree, or until the plain
// partial sums have themselves settled over the last N/2 terms.

#include <cmath>
#include <cstddef>
#include <vector>

#include "lifsh/core.hpp"

namespace lifsh {

struct AccelerationOptions {
  double tol = 1e-14;             // target relative agreement of successive estimates
  double accept_digits = 10.0;    // minimum stabilized digits for a result to be returned
  std::size_t min_terms = 32;
  std::size_t max_terms = 1u << 14;
};

namespace detail {

inline Complex euler_mean(const std::vector<Complex>& partial, std::size_t n, std::size_t k) {
  // Weights 2^-k C(k, j) evaluated in log space to stay finite for large k.
  const double lk = std::lgamma(static_cast<double>(k) + 1.0) - static_cast<double>(k) * std::log(2.0);
  Complex acc{0.0, 0.0};
  for (std::size_t j = 0; j <= k; ++j) {
    const double lw = lk - std::lgamma(static_cast<double>(j) + 1.0) - std::lgamma(static_cast<double>(k - j) + 1.0);
    acc += std::exp(lw) * partial[n - k + j];
  }
  return acc;
}

}  // namespace detail

// Sums term(0) + term(1) + ... with Euler-mean acceleration.
template <class TermFn>
SeriesResult euler_summation(TermFn&& term, const AccelerationOptions& opt = {}) {
  std::vector<Complex> partial;
  partial.reserve(opt.max_terms);
  Complex s{0.0, 0.0};
  auto extend = [&](std::size_t upto) {
    while (partial.size() < upto) {
      s += term(partial.size());
      if (!is_finite(s)) throw NoConvergence("euler_summation: partial sums overflowed");
      partial.push_back(s);
    }
  };

  std::size_t n = std::max<std::size_t>(opt.min_terms, 4);
  extend(n);
  Complex prev = detail::euler_mean(partial, n - 1, (n - 1) / 2);
  double diff = std::numeric_limits<double>::infinity();
  Complex cur = prev;
  // Spread of the partial sums S_{n/2} .. S_{n-1} around the last one.
  auto settled = [&]() {
    double spread = 0.0;
    for (std::size_t j = n / 2; j < n; ++j) spread = std::max(spread, std::abs(partial[j] - partial[n - 1]));
    return spread;
  };
  while (2 * n <= opt.max_terms) {
    n *= 2;
    extend(n);
    if (const double spread = settled(); spread <= opt.tol * std::abs(partial[n - 1])) {
      SeriesResult out;
      out.value = partial[n - 1];
      out.abs_err = spread;
      out.terms_used = n;
      out.converged = true;
      return out;
    }
    cur = detail::euler_mean(partial, n - 1, (n - 1) / 2);
    diff = std::abs(cur - prev);
    if (diff <= opt.tol * std::abs(cur)) break;
    prev = cur;
  }
  SeriesResult out;
  out.value = cur;
  out.abs_err = diff;
  out.terms_used = n;
  out.converged = diff <= opt.tol * std::abs(cur);
  if (!(diff <= std::pow(10.0, -opt.accept_digits) * std::abs(cur))) {
    throw NoConvergence("euler_summation: fewer than the required digits stabilized");
  }
  return out;
}

}  // namespace lifsh
