#pragma once

// Function registry and grid parsing for the command-line front end.

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lifsh/lifsh.hpp"

namespace lifsh::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Params = std::map<std::string, double>;

struct Evaluation {
  Complex value{0.0, 0.0};
  double abs_err = 0.0;
  std::string route;
};

struct FunctionSpec {
  std::vector<std::string> params;
  std::function<Evaluation(const Params&, double tol)> eval;
};

// start:stop:step, inclusive of stop up to rounding.  A single number is a
// one-point grid; stop < start gives an empty grid.
inline std::vector<double> parse_grid(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw UsageError("not a number: '" + s + "'");
    return v;
  };
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) return {number(text)};
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos) {
    throw UsageError("grid must be start:stop:step: '" + text + "'");
  }
  const double start = number(text.substr(0, c1));
  const double stop = number(text.substr(c1 + 1, c2 - c1 - 1));
  const double step = number(text.substr(c2 + 1));
  if (!(step > 0.0)) throw UsageError("grid step must be positive: '" + text + "'");
  std::vector<double> out;
  if (stop < start) return out;
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

namespace detail {

inline double get(const Params& p, const std::string& key) { return p.at(key); }

inline Evaluation real_value(double v, std::string route, double err = 0.0) {
  return {Complex(v, 0.0), err, std::move(route)};
}

inline Evaluation series(const SeriesResult& r, std::string route) { return {r.value, r.abs_err, std::move(route)}; }

inline Evaluation part_pair(const PartResult& re, const PartResult& im, std::string route) {
  return {Complex(re.value, im.value), re.abs_err + im.abs_err, std::move(route)};
}

inline IntegralPoint point(const Params& p) { return {get(p, "m"), get(p, "p"), get(p, "q")}; }

inline MassPair masses(const Params& p) { return {get(p, "k1"), get(p, "k2")}; }

inline int integer_param(const Params& p, const std::string& key) {
  const double v = get(p, key);
  if (!is_integer(v)) throw DomainError("--" + key + " must be an integer here");
  return static_cast<int>(std::lround(v));
}

inline CartesianArg zarg(const Params& p) { return CartesianArg(get(p, "zre"), get(p, "zim")); }

}  // namespace detail

// Every evaluable function.  H4 takes (alpha, beta, gamma, delta) as
// (--a, --b, --c, --cp); two-variable functions take --xre/--xim/--yre/--yim.
inline const std::map<std::string, FunctionSpec>& registry() {
  using namespace detail;
  static const std::map<std::string, FunctionSpec> table = {
      {"i1m", {{"m", "p", "q"}, [](const Params& p, double tol) { return real_value(i1m(point(p), tol), "gauss-form"); }}},
      {"i1m_hat",
       {{"m", "p", "q"}, [](const Params& p, double tol) { return real_value(i1m_hat(point(p), tol), "reduced-gauss-form"); }}},
      {"i1m_via_h4",
       {{"m", "p", "q"}, [](const Params& p, double tol) { return series(i1m_via_h4(point(p), tol), "horn-h4-series"); }}},
      {"i1m_q_axis", {{"m", "p"}, [](const Params& p, double) { return real_value(i1m_q_axis(get(p, "m"), get(p, "p")), "axis"); }}},
      {"i1m_p_axis", {{"m", "q"}, [](const Params& p, double) { return real_value(i1m_p_axis(get(p, "m"), get(p, "q")), "axis"); }}},
      {"c1_constant", {{"m"}, [](const Params& p, double) { return real_value(c1_constant(0.5 * get(p, "m") - 1.0), "gamma"); }}},
      {"special_m2", {{"p", "q"}, [](const Params& p, double) { return real_value(special_m2(get(p, "p"), get(p, "q")), "closed-form"); }}},
      {"special_m3", {{"p", "q"}, [](const Params& p, double) { return real_value(special_m3(get(p, "p"), get(p, "q")), "closed-form"); }}},
      {"special_m4", {{"p", "q"}, [](const Params& p, double) { return real_value(special_m4(get(p, "p"), get(p, "q")), "closed-form"); }}},
      {"special_m5", {{"p", "q"}, [](const Params& p, double) { return real_value(special_m5(get(p, "p"), get(p, "q")), "closed-form"); }}},
      {"special_m6", {{"p", "q"}, [](const Params& p, double) { return real_value(special_m6(get(p, "p"), get(p, "q")), "closed-form"); }}},
      {"i3m",
       {{"m", "p", "q"},
        [](const Params& p, double tol) { return real_value(i3m(get(p, "m"), get(p, "p"), get(p, "q"), tol), "gauss-form"); }}},
      {"i21_closed", {{"q"}, [](const Params& p, double tol) { return real_value(i21_closed(get(p, "q"), tol), "closed-form"); }}},
      {"i31_closed", {{"q"}, [](const Params& p, double) { return real_value(i31_closed(get(p, "q")), "closed-form"); }}},
      {"i14_closed", {{"q"}, [](const Params& p, double) { return real_value(i14_closed(get(p, "q")), "closed-form"); }}},
      {"inner_j1", {{"p", "k1", "k2"}, [](const Params& p, double) { return real_value(inner_j1(get(p, "p"), masses(p)), "closed-form"); }}},
      {"inner_j2", {{"p", "k1", "k2"}, [](const Params& p, double) { return real_value(inner_j2(get(p, "p"), masses(p)), "closed-form"); }}},
      {"inner_j3", {{"p", "k1", "k2"}, [](const Params& p, double) { return real_value(inner_j3(get(p, "p"), masses(p)), "closed-form"); }}},
      {"inner_jd_f1",
       {{"d", "p", "k1", "k2"},
        [](const Params& p, double tol) { return real_value(inner_jd_f1(get(p, "d"), get(p, "p"), masses(p), tol), "appell-f1"); }}},
      {"inner_jd_kss",
       {{"d", "p", "k1", "k2"},
        [](const Params& p, double tol) { return real_value(inner_jd_kss(get(p, "d"), get(p, "p"), masses(p), tol), "appell-f1-roots"); }}},
      {"inner_jd_zero_mass",
       {{"d", "p", "k2"},
        [](const Params& p, double tol) {
          return real_value(inner_jd_zero_mass(get(p, "d"), get(p, "p"), get(p, "k2"), tol), "gauss-2f1");
        }}},
      {"eval_2f1",
       {{"a", "b", "c", "zre", "zim"},
        [](const Params& p, double tol) {
          return series(eval_2f1(get(p, "a"), get(p, "b"), get(p, "c"), Complex(get(p, "zre"), get(p, "zim")), tol), "gauss-series");
        }}},
      {"eval_f1",
       {{"a", "b", "bp", "c", "xre", "xim", "yre", "yim"},
        [](const Params& p, double tol) {
          return series(eval_f1(get(p, "a"), get(p, "b"), get(p, "bp"), get(p, "c"), Complex(get(p, "xre"), get(p, "xim")),
                                Complex(get(p, "yre"), get(p, "yim")), tol),
                        "appell-f1");
        }}},
      {"eval_f2",
       {{"a", "b", "bp", "c", "cp", "xre", "xim", "yre", "yim"},
        [](const Params& p, double tol) {
          return series(eval_f2(get(p, "a"), get(p, "b"), get(p, "bp"), get(p, "c"), get(p, "cp"),
                                Complex(get(p, "xre"), get(p, "xim")), Complex(get(p, "yre"), get(p, "yim")), tol),
                        "double-series");
        }}},
      {"eval_f4",
       {{"a", "b", "c", "cp", "xre", "xim", "yre", "yim"},
        [](const Params& p, double tol) {
          return series(eval_f4(get(p, "a"), get(p, "b"), get(p, "c"), get(p, "cp"), Complex(get(p, "xre"), get(p, "xim")),
                                Complex(get(p, "yre"), get(p, "yim")), tol),
                        "double-series");
        }}},
      {"eval_h4",
       {{"a", "b", "c", "cp", "xre", "xim", "yre", "yim"},
        [](const Params& p, double tol) {
          return series(eval_h4(get(p, "a"), get(p, "b"), get(p, "c"), get(p, "cp"), Complex(get(p, "xre"), get(p, "xim")),
                                Complex(get(p, "yre"), get(p, "yim")), tol),
                        "horn-h4");
        }}},
      {"re_im_polar",
       {{"a", "b", "c", "zre", "zim"},
        [](const Params& p, double tol) {
          const auto [x, y] = re_im_polar(get(p, "a"), get(p, "b"), get(p, "c"), zarg(p), tol);
          return Evaluation{Complex(x, y), 0.0, "polar-series"};
        }}},
      {"re_im_gauss_series",
       {{"a", "b", "c", "zre", "zim"},
        [](const Params& p, double tol) {
          const double a = get(p, "a"), b = get(p, "b"), c = get(p, "c");
          return part_pair(re_2f1_gauss_series(a, b, c, zarg(p), tol), im_2f1_gauss_series(a, b, c, zarg(p), tol),
                           "gauss-coefficient-series");
        }}},
      {"re_im_3f2_series",
       {{"a", "b", "c", "zre", "zim"},
        [](const Params& p, double tol) {
          const double a = get(p, "a"), b = get(p, "b"), c = get(p, "c");
          return part_pair(re_2f1_3f2_series(a, b, c, zarg(p), tol), im_2f1_3f2_series(a, b, c, zarg(p), tol),
                           "clausen-coefficient-series");
        }}},
      {"re_im_laplace",
       {{"a", "b", "c", "zre", "zim"},
        [](const Params& p, double tol) {
          const double a = get(p, "a"), b = get(p, "b"), c = get(p, "c");
          const double t = std::max(tol, 1e-12);
          return part_pair(re_2f1_laplace(a, b, c, zarg(p), t), im_2f1_laplace(a, b, c, zarg(p), t), "laplace-integral");
        }}},
      {"re_im_b1_h4",
       {{"a", "c", "zre", "zim"},
        [](const Params& p, double tol) {
          const double a = get(p, "a"), c = get(p, "c");
          return Evaluation{Complex(re_2f1_b1_h4(a, c, zarg(p), tol), im_2f1_b1_h4(a, c, zarg(p), tol)), 0.0, "horn-h4"};
        }}},
      {"re_za_2f1_h4",
       {{"a", "b", "c", "zre", "zim"},
        [](const Params& p, double tol) {
          return real_value(re_za_2f1_h4(get(p, "a"), get(p, "b"), get(p, "c"), zarg(p), tol), "horn-h4");
        }}},
      {"quad_i1m",
       {{"m", "p", "q"},
        [](const Params& p, double) {
          return series(quad_i1m(integer_param(p, "m"), get(p, "p"), get(p, "q")), "quadrature");
        }}},
      {"quad_jd",
       {{"d", "p", "k1", "k2"},
        [](const Params& p, double) { return series(quad_jd(integer_param(p, "d"), get(p, "p"), masses(p)), "quadrature"); }}},
      {"quad_idm_m1",
       {{"d", "p", "q"},
        [](const Params& p, double) {
          return series(quad_idm_m1(integer_param(p, "d"), get(p, "p"), get(p, "q")), "quadrature");
        }}},
  };
  return table;
}

// Closed-form function -> its quadrature counterpart, for oracle-compare.
inline std::optional<std::string> oracle_counterpart(const std::string& fn) {
  static const std::map<std::string, std::string> table = {
      {"i1m", "quad_i1m"},       {"inner_j1", "quad_jd"},     {"inner_j2", "quad_jd"},   {"inner_j3", "quad_jd"},
      {"inner_jd_f1", "quad_jd"}, {"inner_jd_kss", "quad_jd"}, {"i21_closed", "quad_idm_m1"},
      {"i31_closed", "quad_idm_m1"}, {"i3m", "quad_idm_m1"},
  };
  const auto it = table.find(fn);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

}  // namespace lifsh::cli
