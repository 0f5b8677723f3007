#pragma once

// Shared value types, error types and evaluation settings.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace lifsh {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Raised when an argument lies outside every implemented evaluation route.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a parameter hits a Gamma-function pole (c in Z_0^-, D = 4, ...).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Raised when a series or quadrature exhausts its budget without meeting tol.
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public NoConvergence {
 public:
  using NoConvergence::NoConvergence;
};

// Result of every series evaluator.  converged == true implies abs_err is
// within the requested tolerance and the term cap was not reached.
struct SeriesResult {
  Complex value{0.0, 0.0};
  double abs_err = 0.0;
  std::size_t terms_used = 0;
  bool converged = false;

  double real() const { return value.real(); }
  double imag() const { return value.imag(); }
};

// Outcome of comparing two evaluations of the same quantity.
struct VerifyReport {
  std::string name;
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::pair<std::string, std::string> route_labels;
  std::string note;
};

// pass <=> abs_dev <= tol or rel_dev <= tol.
inline VerifyReport make_report(std::string name, Complex lhs, Complex rhs, double tol, std::string lhs_route,
                                std::string rhs_route) {
  VerifyReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_dev = std::abs(lhs - rhs);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  r.rel_dev = scale > 0.0 ? r.abs_dev / scale : 0.0;
  r.tol = tol;
  r.pass = std::isfinite(r.abs_dev) && (r.abs_dev <= tol || r.rel_dev <= tol);
  r.route_labels = {std::move(lhs_route), std::move(rhs_route)};
  return r;
}

inline constexpr std::size_t kDefaultTermCap = 1'000'000;
inline constexpr double kDefaultTol = 1e-15;

// Series term cap.  LIFSH_MAX_TERMS overrides the default; read on every call
// so that tests and the CLI can adjust it without global state.
inline std::size_t term_cap() {
  if (const char* env = std::getenv("LIFSH_MAX_TERMS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultTermCap;
}

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// True when x is a non-positive integer (within a relative 1e-14 window).
inline bool is_nonpositive_integer(double x) {
  if (x > 0.5) return false;
  const double r = std::round(x);
  return std::abs(x - r) <= 1e-14 * std::max(1.0, std::abs(x));
}

inline bool is_integer(double x) {
  const double r = std::round(x);
  return std::abs(x - r) <= 1e-14 * std::max(1.0, std::abs(x));
}

// sin(x)/x with the removable point handled.
inline double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

// Principal power w^s = exp(s Log w), Arg w in (-pi, pi].
inline Complex principal_pow(Complex w, double s) {
  if (w == Complex(0.0, 0.0)) {
    if (s > 0.0) return {0.0, 0.0};
    if (s == 0.0) return {1.0, 0.0};
    throw DomainError("principal_pow: zero base with non-positive exponent");
  }
  return std::exp(s * std::log(w));
}

}  // namespace lifsh
