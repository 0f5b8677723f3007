#include <array>
#include <cmath>
#include <vector>

#include <boost/math/special_functions/hypergeometric_pFq.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include "lifsh/hyper_core.hpp"

using lifsh::Complex;

namespace {

double boost_2f1(double a, double b, double c, double z) {
  return boost::math::hypergeometric_pFq({a, b}, {c}, z);
}

void expect_rel(double got, double want, double tol) {
  EXPECT_LE(std::abs(got - want), tol * std::max(1.0, std::abs(want))) << "got " << got << " want " << want;
}

}  // namespace

TEST(Pochhammer, Conventions) {
  EXPECT_EQ(*lifsh::pochhammer(0.0, 0), 1.0);
  EXPECT_EQ(*lifsh::pochhammer(3.0, 0), 1.0);
  EXPECT_EQ(*lifsh::pochhammer(2.0, 3), 24.0);
  EXPECT_EQ(*lifsh::pochhammer(-2.0, 3), 0.0);
  EXPECT_DOUBLE_EQ(*lifsh::pochhammer(0.5, 2), 0.75);
}

TEST(Pochhammer, OverflowIsReported) { EXPECT_FALSE(lifsh::pochhammer(10.0, 400).has_value()); }

TEST(GammaReal, ClassicalValues) {
  EXPECT_NEAR(lifsh::gamma_real(0.5), 1.7724538509055160, 1e-15);
  EXPECT_DOUBLE_EQ(lifsh::gamma_real(1.0), 1.0);
  EXPECT_NEAR(lifsh::gamma_real(-0.5), -2.0 * std::sqrt(M_PI), 1e-14);
}

TEST(GammaReal, PolesThrow) {
  EXPECT_THROW(lifsh::gamma_real(0.0), lifsh::PoleError);
  EXPECT_THROW(lifsh::gamma_real(-3.0), lifsh::PoleError);
  EXPECT_EQ(lifsh::rgamma(-2.0), 0.0);
}

TEST(EvalPfq, GeometricAfterCancellation) {
  const Complex z(0.3, 0.4);
  const auto r = lifsh::eval_pfq({{1.0, 1.0}, {1.0}}, z);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(std::abs(r.value - 1.0 / (1.0 - z)), 1e-14);
}

TEST(EvalPfq, ZeroArgument) {
  const auto r = lifsh::eval_pfq({{0.3, 1.2}, {2.5, 0.7}}, Complex(0.0, 0.0));
  EXPECT_EQ(r.value, Complex(1.0, 0.0));
}

TEST(EvalPfq, LogClosedForm) {
  const auto r = lifsh::eval_pfq({{1.0, 0.5}, {1.5}}, Complex(0.25, 0.0));
  EXPECT_NEAR(r.real(), std::log(3.0), 1e-15);
}

TEST(EvalPfq, PolynomialTerminates) {
  const auto r = lifsh::eval_pfq({{-3.0, 2.0}, {1.5}}, Complex(5.0, 0.0));
  // 1 - 3*2*5/1.5 + 3*2*3*25/(1.5*2.5*2) - ... summed by hand: (-3)_n (2)_n / (1.5)_n n! 5^n
  double want = 0.0, t = 1.0;
  for (int n = 0; n <= 3; ++n) {
    want += t;
    t *= (-3.0 + n) * (2.0 + n) / ((1.5 + n) * (n + 1.0)) * 5.0;
  }
  EXPECT_NEAR(r.real(), want, 1e-12 * std::abs(want));
}

TEST(EvalPfq, DenominatorPoleThrows) {
  EXPECT_THROW(lifsh::eval_pfq({{1.0}, {-2.0}}, Complex(0.1, 0.0)), lifsh::PoleError);
}

TEST(EvalPfq, OutsideDiskThrows) {
  EXPECT_THROW(lifsh::eval_pfq({{0.5, 0.5}, {1.5}}, Complex(1.5, 0.0)), lifsh::DomainError);
}

TEST(EvalPfq, TermCapFromEnvironment) {
  setenv("LIFSH_MAX_TERMS", "5", 1);
  EXPECT_THROW(lifsh::eval_pfq({{0.5, 0.5}, {1.5}}, Complex(0.99, 0.0)), lifsh::NoConvergence);
  unsetenv("LIFSH_MAX_TERMS");
}

TEST(Eval2F1, TrivialValues) {
  EXPECT_EQ(lifsh::eval_2f1(0.4, 1.3, 2.0, Complex(0.0, 0.0)).value, Complex(1.0, 0.0));
  for (double y : {-0.9, -0.3, 0.4, 0.8}) {
    EXPECT_NEAR(lifsh::eval_2f1(-1.0, 1.0, 3.0, Complex(y, 0.0)).real(), 1.0 - y / 3.0, 1e-15);
  }
  EXPECT_NEAR(lifsh::eval_2f1(1.0, 1.0, 1.0, Complex(0.3, 0.0)).real(), 1.0 / 0.7, 1e-15);
}

TEST(Eval2F1, AgreesWithBoostOnRealAxis) {
  const std::array<std::array<double, 3>, 5> params{{{0.3, 1.1, 1.7}, {1.5, 0.25, 2.2}, {-0.7, 1.3, 0.6}, {2.5, 1.5, 3.2},
                                                    {0.5, 0.5, 1.5}}};
  for (const auto& [a, b, c] : params) {
    for (double z : {-0.95, -0.6, -0.2, 0.1, 0.5, 0.85, 0.97}) {
      expect_rel(lifsh::eval_2f1(a, b, c, Complex(z, 0.0)).real(), boost_2f1(a, b, c, z), 1e-12);
    }
  }
}

TEST(Eval2F1, LogClosedFormOffAxis) {
  for (const Complex z : {Complex(0.3, 0.4), Complex(-0.7, 0.5), Complex(0.9, -0.3), Complex(-2.0, 1.0)}) {
    const Complex want = -std::log(1.0 - z) / z;
    EXPECT_LT(std::abs(lifsh::eval_2f1(1.0, 1.0, 2.0, z).value - want), 1e-13 * std::abs(want)) << z;
  }
}

TEST(Eval2F1, ArcsinClosedForm) {
  for (double s : {0.2, 0.6, 0.9, 0.99}) {
    expect_rel(lifsh::eval_2f1(0.5, 0.5, 1.5, Complex(s * s, 0.0)).real(), std::asin(s) / s, 1e-13);
  }
}

TEST(Eval2F1, ArgumentApproachingUnitCircle) {
  // y = -q^2/(q^2 - 2ip) approaches the unit circle as p -> 0; (1-z)^{-a} is the exact value for b = c.
  for (double p : {1.0, 1e-2, 1e-4}) {
    const Complex y = -1.0 / Complex(1.0, -2.0 * p);
    const Complex want = std::pow(1.0 - y, -0.75);
    EXPECT_LT(std::abs(lifsh::eval_2f1(0.75, 1.4, 1.4, y).value - want), 1e-13) << p;
  }
}

TEST(Eval2F1, GaussSummationAtOne) {
  const double a = 0.25, b = 0.25, c = 1.0;
  const double want = std::tgamma(c) * std::tgamma(c - a - b) / (std::tgamma(c - a) * std::tgamma(c - b));
  expect_rel(lifsh::eval_2f1(a, b, c, Complex(1.0, 0.0)).real(), want, 1e-14);
}

TEST(Eval2F1, CancellingSeriesIsRecomputedWide) {
  // Large-parameter real argument where the binary64 sum loses most digits.
  const double a = 20.5, b = 21.0, c = 1.5, z = -0.69;
  using Wide = boost::multiprecision::cpp_bin_float_100;
  const double want = static_cast<double>(boost::math::hypergeometric_pFq({Wide(a), Wide(b)}, {Wide(c)}, Wide(z)));
  const auto r = lifsh::eval_2f1(a, b, c, Complex(z, 0.0));
  EXPECT_LE(std::abs(r.real() - want), 1e-9 * std::abs(want) + 1e-300) << r.real() << " vs " << want;
}

TEST(Eval2F1, Errors) {
  EXPECT_THROW(lifsh::eval_2f1(0.5, 0.5, -1.0, Complex(0.2, 0.0)), lifsh::PoleError);
  EXPECT_THROW(lifsh::eval_2f1(0.5, 0.5, 0.8, Complex(1.0, 0.0)), lifsh::DomainError);
}
