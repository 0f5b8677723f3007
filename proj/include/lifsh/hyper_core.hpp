#pragma once

// Scalar special-function kernel: Gamma, Pochhammer, generalized
// hypergeometric series pFq with real parameters and complex argument, and
// the Gauss function 2F1 with the linear transformations needed to keep the
// summation inside |z| <= 0.8.
//
// Branch convention: every fractional power introduced by a transformation is
// the principal one, w^s = exp(s Log w) with Arg w in (-pi, pi].

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lifsh/core.hpp"

namespace lifsh {

struct HyperParams {
  std::vector<double> numerators;
  std::vector<double> denominators;
};

// Rising factorial (lambda)_n with (lambda)_0 = 1, including (0)_0 = 1.
// Returns std::nullopt when the product overflows binary64.
inline std::optional<double> pochhammer(double lambda, unsigned n) {
  double r = 1.0;
  for (unsigned k = 0; k < n; ++k) {
    r *= lambda + k;
    if (!std::isfinite(r)) return std::nullopt;
    if (r == 0.0) return 0.0;
  }
  return r;
}

// Gamma function on the real line.  Poles at 0, -1, -2, ... raise PoleError.
inline double gamma_real(double x) {
  if (is_nonpositive_integer(x)) throw PoleError("gamma_real: pole at non-positive integer");
  return std::tgamma(x);
}

// 1/Gamma(x); exactly zero at the poles of Gamma.
inline double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

namespace detail {

// Plain summation of sum_n prod(a_j)_n / prod(b_k)_n z^n / n! by the term
// ratio recurrence.  The caller has validated convergence.  Stops when both
// the latest term and the tail estimate fall below tol*|S| three times in a
// row; `limit_ratio` is |z| when r = s+1 (ratio tends to |z|) and 0 when r <= s.
inline SeriesResult sum_series(std::span<const double> num, std::span<const double> den, Complex z,
                               double tol, double limit_ratio) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  tol = std::max(tol, eps);
  const std::size_t cap = term_cap();

  SeriesResult out;
  Complex sum{1.0, 0.0};
  Complex term{1.0, 0.0};
  double abs_sum = 1.0;
  int quiet = 0;
  if (z == Complex(0.0, 0.0)) {
    out.value = sum;
    out.terms_used = 1;
    out.converged = true;
    return out;
  }
  for (std::size_t n = 0; n < cap; ++n) {
    const double dn = static_cast<double>(n);
    double ratio = 1.0 / (dn + 1.0);
    for (double a : num) ratio *= a + dn;
    for (double b : den) ratio /= b + dn;
    term *= ratio * z;
    if (term == Complex(0.0, 0.0)) {
      // A numerator parameter hit a non-positive integer: the series terminated.
      out.value = sum;
      out.abs_err = 4.0 * eps * abs_sum;
      out.terms_used = n + 1;
      out.converged = true;
      return out;
    }
    sum += term;
    abs_sum += std::abs(term);
    if (!is_finite(sum)) throw NoConvergence("pFq: partial sum overflowed");

    const double t = std::abs(term);
    const double rho = std::max(std::abs(ratio) * std::abs(z), limit_ratio);
    const double tail = rho < 1.0 ? t * rho / (1.0 - rho) : std::numeric_limits<double>::infinity();
    const double scale = std::abs(sum);
    if (t <= tol * scale && tail <= tol * scale) {
      if (++quiet >= 3) {
        out.value = sum;
        out.abs_err = tail + 4.0 * eps * abs_sum;
        out.terms_used = n + 2;
        out.converged = true;
        return out;
      }
    } else {
      quiet = 0;
    }
  }
  throw NoConvergence("pFq: term cap reached");
}

inline bool any_nonpositive_integer(std::span<const double> xs) {
  return std::any_of(xs.begin(), xs.end(), [](double a) { return is_nonpositive_integer(a); });
}

}  // namespace detail

// Generalized hypergeometric series rFs(a; b; z) by direct summation.
// For r = s+1 requires |z| < 1, or |z| = 1 with sum(b) - sum(a) > 0; for
// r <= s any finite z; terminating series are always evaluable.
inline SeriesResult eval_pfq(const HyperParams& params, Complex z, double tol = kDefaultTol) {
  for (double b : params.denominators) {
    if (is_nonpositive_integer(b)) throw PoleError("eval_pfq: denominator parameter is a non-positive integer");
  }
  if (!is_finite(z)) throw DomainError("eval_pfq: non-finite argument");
  const std::size_t r = params.numerators.size();
  const std::size_t s = params.denominators.size();
  const bool polynomial = detail::any_nonpositive_integer(params.numerators);
  double limit_ratio = 0.0;
  if (!polynomial && z != Complex(0.0, 0.0)) {
    if (r == s + 1) {
      const double m = std::abs(z);
      if (m > 1.0) throw DomainError("eval_pfq: |z| > 1 for r = s+1");
      if (m == 1.0) {
        double excess = 0.0;
        for (double b : params.denominators) excess += b;
        for (double a : params.numerators) excess -= a;
        if (!(excess > 0.0)) throw DomainError("eval_pfq: |z| = 1 requires sum(b) - sum(a) > 0");
      }
      limit_ratio = m;
    } else if (r > s + 1) {
      throw DomainError("eval_pfq: divergent series (r > s+1)");
    }
  }
  return detail::sum_series(params.numerators, params.denominators, z, tol, limit_ratio);
}

namespace detail {

inline SeriesResult direct_2f1(double a, double b, double c, Complex z, double tol) {
  const std::array<double, 2> num{a, b};
  const std::array<double, 1> den{c};
  const bool poly = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  return sum_series(num, den, z, tol, poly ? 0.0 : std::abs(z));
}

inline SeriesResult scaled(SeriesResult r, Complex factor) {
  r.value *= factor;
  r.abs_err *= std::abs(factor);
  return r;
}

inline constexpr double kDirectRadius = 0.8;
// Minimum distance of c-a-b from an integer for the 1-z connection formula;
// closer values cancel two nearly-infinite Gamma ratios.
inline constexpr double kConnectionGap = 0.01;

inline double distance_to_integer(double x) { return std::abs(x - std::round(x)); }

// 2F1 around z = 1:
//   F(a,b;c;z) = A F(a,b;a+b-c+1;1-z) + B (1-z)^{c-a-b} F(c-a,c-b;c-a-b+1;1-z).
inline SeriesResult connection_1mz(double a, double b, double c, Complex z, double tol) {
  const double s = c - a - b;
  const double gc = std::tgamma(c);
  const double A = gc * std::tgamma(s) * rgamma(c - a) * rgamma(c - b);
  const double B = gc * std::tgamma(-s) * rgamma(a) * rgamma(b);
  const Complex w = 1.0 - z;
  SeriesResult out;
  std::size_t terms = 0;
  Complex value{0.0, 0.0};
  double err = 0.0;
  if (A != 0.0) {
    const auto f = direct_2f1(a, b, 1.0 - s, w, tol);
    value += A * f.value;
    err += std::abs(A) * f.abs_err;
    terms += f.terms_used;
  }
  if (B != 0.0) {
    const auto g = direct_2f1(c - a, c - b, 1.0 + s, w, tol);
    const Complex pre = B * principal_pow(w, s);
    value += pre * g.value;
    err += std::abs(pre) * g.abs_err;
    terms += g.terms_used;
  }
  if (!is_finite(value)) throw NoConvergence("eval_2f1: connection formula overflowed");
  out.value = value;
  out.abs_err = err + 4.0 * std::numeric_limits<double>::epsilon() * (std::abs(A) + std::abs(B));
  out.terms_used = terms;
  out.converged = true;
  return out;
}

// Evaluation of 2F1 when the caller already knows |z| <= 1.
inline SeriesResult hyp2f1_unit_disk(double a, double b, double c, Complex z, double tol) {
  const double m = std::abs(z);
  if (m <= kDirectRadius) return direct_2f1(a, b, c, z, tol);
  const double s = c - a - b;
  if (z == Complex(1.0, 0.0)) {
    if (!(s > 0.0)) throw DomainError("eval_2f1: z = 1 requires c - a - b > 0");
    SeriesResult out;
    out.value = std::tgamma(c) * std::tgamma(s) * rgamma(c - a) * rgamma(c - b);
    out.abs_err = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
    out.terms_used = 1;
    out.converged = true;
    return out;
  }
  if (std::abs(1.0 - z) <= kDirectRadius && distance_to_integer(s) >= kConnectionGap) {
    return connection_1mz(a, b, c, z, tol);
  }
  // Euler: F = (1-z)^{c-a-b} F(c-a, c-b; c; z); better-decaying terms when c-a-b < 0.
  if (s < 0.0 || is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b)) {
    const auto f = direct_2f1(c - a, c - b, c, z, tol);
    return scaled(f, principal_pow(1.0 - z, s));
  }
  if (m == 1.0 && !(s > 0.0)) throw DomainError("eval_2f1: |z| = 1 requires c - a - b > 0");
  return direct_2f1(a, b, c, z, tol);
}

// Direct summation of 2F1 at a real argument in a wider floating type R.
// Used when binary64 summation cancels: large parameters at negative z give
// terms far above the sum.  Returns nullopt when R still lacks the digits.
template <class R>
std::optional<double> wide_2f1_real(double a, double b, double c, double z, double tol) {
  const R ra(a), rb(b), rc(c), rz(z);
  R sum(1), term(1), abs_sum(1);
  const R eps = std::numeric_limits<R>::epsilon();
  const R target(std::max(tol, std::numeric_limits<double>::epsilon()) * 1e-2);
  const std::size_t cap = term_cap();
  int quiet = 0;
  for (std::size_t n = 0; n < cap; ++n) {
    const R dn(static_cast<double>(n));
    const R ratio = (ra + dn) * (rb + dn) / ((rc + dn) * (dn + 1)) * rz;
    term *= ratio;
    if (term == 0) break;
    sum += term;
    abs_sum += abs(term);
    if (abs(term) <= target * abs(sum) && abs(ratio) < 1) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    if (n + 1 == cap) throw NoConvergence("pFq: term cap reached");
  }
  if (!(abs_sum * eps * 16 <= target * abs(sum))) return std::nullopt;
  return static_cast<double>(sum);
}

// log10 of the largest term of the 2F1 series at real z, from the term ratios.
inline double log10_peak_term(double a, double b, double c, double z) {
  double lt = 0.0, peak = 0.0;
  const std::size_t cap = term_cap();
  for (std::size_t n = 0; n < cap; ++n) {
    const double dn = static_cast<double>(n);
    const double ratio = std::abs((a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z);
    if (ratio == 0.0) break;
    lt += std::log10(ratio);
    peak = std::max(peak, lt);
    if (ratio < 1.0 && lt < peak - 20.0) break;
  }
  return peak;
}

// Real-argument 2F1 with cancellation-free accuracy: the series (direct or
// its Pfaff image) is summed with enough decimal digits to absorb its
// largest term, widening once more if the first pass still falls short.
inline std::optional<SeriesResult> wide_2f1(double a, double b, double c, double z, double tol) {
  namespace mp = boost::multiprecision;
  double pre = 1.0;
  double bb = b, zz = z;
  if (std::abs(z) > kDirectRadius) {
    const double w = z / (z - 1.0);
    if (!(z < 0.0) || std::abs(w) > kDirectRadius) return std::nullopt;
    pre = std::pow(1.0 - z, -a);
    bb = c - b;
    zz = w;
  }
  const double need = log10_peak_term(a, bb, c, zz) + 24.0;
  std::optional<double> v;
  if (need <= 30.0) v = wide_2f1_real<mp::number<mp::cpp_bin_float<30>>>(a, bb, c, zz, tol);
  if (!v && need <= 60.0) v = wide_2f1_real<mp::number<mp::cpp_bin_float<60>>>(a, bb, c, zz, tol);
  if (!v && need <= 120.0) v = wide_2f1_real<mp::number<mp::cpp_bin_float<120>>>(a, bb, c, zz, tol);
  if (!v && need <= 240.0) v = wide_2f1_real<mp::number<mp::cpp_bin_float<240>>>(a, bb, c, zz, tol);
  if (!v && need <= 480.0) v = wide_2f1_real<mp::number<mp::cpp_bin_float<480>>>(a, bb, c, zz, tol);
  if (!v) return std::nullopt;
  SeriesResult out;
  out.value = Complex(pre * *v, 0.0);
  out.abs_err = std::max(tol, 4.0 * std::numeric_limits<double>::epsilon()) * std::abs(out.value);
  out.converged = true;
  return out;
}

// Loss of significance in a binary64 result, measured against the bound it carries.
inline bool cancelled(const SeriesResult& r) {
  return !(r.abs_err <= 1e3 * std::numeric_limits<double>::epsilon() * std::abs(r.value));
}

inline SeriesResult eval_2f1_double(double a, double b, double c, Complex z, double tol) {
  if (is_nonpositive_integer(c)) throw PoleError("eval_2f1: c is a non-positive integer");
  if (!is_finite(z)) throw DomainError("eval_2f1: non-finite argument");
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) return detail::direct_2f1(a, b, c, z, tol);
  const double m = std::abs(z);
  if (m <= detail::kDirectRadius) return detail::direct_2f1(a, b, c, z, tol);

  const bool at_one = z == Complex(1.0, 0.0);
  const Complex w = at_one ? Complex(0.0, 0.0) : z / (z - 1.0);
  const double mw = at_one ? std::numeric_limits<double>::infinity() : std::abs(w);

  // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; w) = (1-z)^{-b} F(c-a, b; c; w).
  auto pfaff = [&]() {
    const bool use_b = is_nonpositive_integer(c - a) && !is_nonpositive_integer(c - b);
    if (use_b) return detail::scaled(detail::hyp2f1_unit_disk(c - a, b, c, w, tol), principal_pow(1.0 - z, -b));
    return detail::scaled(detail::hyp2f1_unit_disk(a, c - b, c, w, tol), principal_pow(1.0 - z, -a));
  };

  if (mw <= detail::kDirectRadius) return pfaff();
  if (m <= 1.0) {
    if (at_one || (std::abs(1.0 - z) <= detail::kDirectRadius &&
                   detail::distance_to_integer(c - a - b) >= detail::kConnectionGap)) {
      return detail::hyp2f1_unit_disk(a, b, c, z, tol);
    }
    if (mw < m) return pfaff();
    return detail::hyp2f1_unit_disk(a, b, c, z, tol);
  }
  if (mw < 1.0) return pfaff();
  throw DomainError("eval_2f1: |z| >= 1 and Pfaff image outside the unit disk");
}

}  // namespace detail

// Gauss hypergeometric function 2F1(a, b; c; z), principal branch.
//
// Route: direct series for |z| <= 0.8; Pfaff z -> z/(z-1) when that lands in
// the same disk; the 1-z connection formula near z = 1; Euler's transformation
// or plain summation as a fallback inside the unit disk.  |z| >= 1 is accepted
// when the series terminates or when the Pfaff image lies inside the disk
// (Re z < 1/2).  A real-argument result that lost more than three digits to
// cancellation is recomputed in wider arithmetic.
inline SeriesResult eval_2f1(double a, double b, double c, Complex z, double tol = kDefaultTol) {
  const bool real_arg = z.imag() == 0.0 && std::isfinite(z.real());
  const bool polynomial = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (!real_arg || polynomial || is_nonpositive_integer(c)) return detail::eval_2f1_double(a, b, c, z, tol);
  try {
    auto r = detail::eval_2f1_double(a, b, c, z, tol);
    if (!detail::cancelled(r)) return r;
    if (auto w = detail::wide_2f1(a, b, c, z.real(), tol)) return *w;
    return r;
  } catch (const NoConvergence&) {
    if (auto w = detail::wide_2f1(a, b, c, z.real(), tol)) return *w;
    throw;
  }
}

}  // namespace lifsh
