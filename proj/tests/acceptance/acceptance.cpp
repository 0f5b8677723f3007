// One line per acceptance criterion: PASS/FAIL, check counts, worst deviation,
// tolerance and wall time against the time limit (where one is set).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lifsh/lifsh.hpp"

namespace {

using lifsh::verify::Reports;

struct Criterion {
  int id;
  std::string title;
  std::string tolerance;
  double time_limit_s;  // <= 0: none
  std::function<Reports()> run;
  std::size_t min_checks;
};

void append(Reports& out, const Reports& more) { out.insert(out.end(), more.begin(), more.end()); }

bool report(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Reports reports;
  std::string crash;
  try {
    reports = c.run();
  } catch (const std::exception& e) {
    crash = e.what();
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::size_t failed = 0;
  double worst = 0.0;
  for (const auto& r : reports) {
    failed += !r.pass;
    if (std::isfinite(r.rel_dev)) worst = std::max(worst, r.rel_dev);
  }
  const bool in_time = c.time_limit_s <= 0.0 || wall < c.time_limit_s;
  const bool enough = reports.size() >= c.min_checks;
  const bool pass = crash.empty() && failed == 0 && in_time && enough;
  char limit[32] = "none";
  if (c.time_limit_s > 0.0) std::snprintf(limit, sizeof limit, "%.0fs", c.time_limit_s);
  std::printf("criterion %2d %s  %-34s checks=%zu failed=%zu max_rel_dev=%.2e tol=%s time=%.2fs limit=%s\n", c.id,
              pass ? "PASS" : "FAIL", c.title.c_str(), reports.size(), failed, worst, c.tolerance.c_str(), wall, limit);
  if (!crash.empty()) std::printf("    error: %s\n", crash.c_str());
  if (!enough) std::printf("    expected at least %zu checks\n", c.min_checks);
  for (const auto& r : reports) {
    if (!r.pass) {
      std::printf("    failed: %s rel_dev=%.3e%s%s\n", r.name.c_str(), r.rel_dev, r.note.empty() ? "" : " ",
                  r.note.c_str());
    }
  }
  std::fflush(stdout);
  return pass;
}

Reports explicit_massless_point() {
  const double pi = lifsh::kPi;
  const double printed = (std::atan(0.5) + std::log(8.0 / 5.0)) / (32.0 * pi * pi);
  return {lifsh::make_report("i14_closed(1) printed value", lifsh::i14_closed(1.0), printed, 1e-14, "i14_closed",
                             "printed arctan/log form")};
}

}  // namespace

int main() {
  namespace v = lifsh::verify;
  const std::vector<Criterion> criteria = {
      {1, "explicit m=1 and m=4 results", "rel 1e-6", 10.0,
       [] {
         Reports r = explicit_massless_point();
         append(r, v::oracle_m1(1e-6));
         return r;
       },
       7},
      {2, "main result vs integer-m forms", "rel 1e-8", 5.0, [] { return v::integer_m_forms(1e-8); }, 80},
      {3, "quadrature oracle, m = 3, 4, 5", "rel 1e-6", 60.0, [] { return v::oracle_main(1e-6); }, 15},
      {4, "axis constants and m=6 pole", "rel 1e-5; 1%", 0.0,
       [] {
         Reports r = v::axis_limits(1e-5);
         append(r, v::m6_pole(1e-2));
         return r;
       },
       7},
      {5, "inner-integral tower", "rel 1e-8 / 1e-7", 0.0,
       [] {
         Reports r = v::inner_closed_forms(1e-8, 10);
         append(r, v::inner_kss(1e-7, 10));
         append(r, v::inner_quadrature(1e-8, 10));
         return r;
       },
       60},
      {6, "complex-argument expansions", "rel 1e-8 (Laplace 1e-6)", 0.0,
       [] {
         Reports r = v::complex_routes(1e-8, 1e-6, 30);
         append(r, v::clausen_routes(1e-8, 30));
         return r;
       },
       60},
      {7, "Horn H4 bridges", "rel 1e-9", 0.0, [] { return v::horn_bridges(1e-9); }, 80},
      {8, "H4 representation of I_{1,m}", "rel 1e-7", 0.0, [] { return v::horn_representation(1e-7); }, 15},
      {9, "F1 quadratic transformation", "rel 1e-8", 0.0, [] { return v::f1_transform(1e-8, 10); }, 10},
      {10, "property suites", "rel 1e-9, zero failures", 0.0, [] { return v::properties(1e-9); }, 200},
  };
  int failed = 0;
  for (const auto& c : criteria) failed += !report(c);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
