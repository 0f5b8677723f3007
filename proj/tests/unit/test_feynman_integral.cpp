#include <cmath>

#include <gtest/gtest.h>

#include "lifsh/feynman_integral.hpp"

using lifsh::IntegralPoint;
using lifsh::MassPair;

namespace {

constexpr double kPi = M_PI;

void expect_rel(double got, double want, double tol) {
  EXPECT_LE(std::abs(got - want), tol * std::abs(want)) << "got " << got << " want " << want;
}

}  // namespace

TEST(C1Constant, PrintedValues) {
  expect_rel(lifsh::c1_constant(1.0), 1.0 / (16.0 * kPi * kPi), 1e-15);
  expect_rel(lifsh::c1_constant(0.5), std::pow(16.0, -0.5) * std::pow(kPi, -1.5) * std::tgamma(1.5) / 0.5, 1e-15);
  EXPECT_EQ(lifsh::c1_constant(0.25), lifsh::c1_constant(0.25));
}

TEST(InnerJ1, ZeroMomentum) { EXPECT_NEAR(lifsh::inner_j1(0.0, {1.0, 1.0}), 0.25, 1e-15); }

TEST(InnerJ3, MasslessAndPrinted) {
  expect_rel(lifsh::inner_j3(0.7, {0.0, 0.0}), 1.0 / (8.0 * 0.7), 1e-15);
  expect_rel(lifsh::inner_j3(0.5, {1.0, 2.0}), std::atan(1.0 / 6.0) / (2.0 * kPi), 1e-14);
  // p -> 0 limit 1/(4 pi (k1 + k2))
  expect_rel(lifsh::inner_j3(1e-9, {1.0, 2.0}), 1.0 / (12.0 * kPi), 1e-12);
}

TEST(InnerJ2, SymmetricInMasses) {
  expect_rel(lifsh::inner_j2(1.0, {0.7, 1.1}), lifsh::inner_j2(1.0, {1.1, 0.7}), 1e-14);
  EXPECT_GT(lifsh::inner_j2(1.0, {0.7, 1.1}), 0.0);
}

TEST(InnerJ2, ScaleInvariantEvaluation) {
  // J2 is homogeneous of degree -2 in (p, k1, k2).
  const double base = lifsh::inner_j2(0.8, {0.3, 1.7});
  expect_rel(lifsh::inner_j2(0.8e6, {0.3e6, 1.7e6}), base * 1e-12, 1e-12);
}

TEST(InnerJdF1, ReducesToLowDimensionalClosedForms) {
  for (const auto& [p, k1, k2] : {std::array<double, 3>{0.3, 0.5, 1.5}, std::array<double, 3>{1.7, 0.2, 0.9},
                                  std::array<double, 3>{2.5, 1.1, 1.1}}) {
    expect_rel(lifsh::inner_jd_f1(1.0, p, {k1, k2}), lifsh::inner_j1(p, {k1, k2}), 1e-10);
    expect_rel(lifsh::inner_jd_f1(2.0, p, {k1, k2}), lifsh::inner_j2(p, {k1, k2}), 1e-10);
    expect_rel(lifsh::inner_jd_f1(3.0, p, {k1, k2}), lifsh::inner_j3(p, {k1, k2}), 1e-10);
  }
  expect_rel(lifsh::inner_jd_f1(3.0, 1.0, {1.0, 1.0}), std::atan(0.5) / (4.0 * kPi), 1e-13);
}

TEST(InnerJdF1, EqualMassesCollapse) {
  // With k1 = k2 the p dependence is that of 2F1(2 - D/2, 1; 3/2; -p^2/(4k^2)) alone.
  const double d = 2.4, k = 0.8;
  auto ratio = [&](double p) {
    const auto f = lifsh::eval_2f1(2.0 - 0.5 * d, 1.0, 1.5, lifsh::Complex(-p * p / (4.0 * k * k), 0.0));
    return lifsh::inner_jd_f1(d, p, {k, k}) / f.real();
  };
  expect_rel(ratio(0.3), ratio(0.9), 1e-12);
  expect_rel(ratio(0.3), ratio(3.5), 1e-12);
}

TEST(InnerJdZeroMass, PrintedValues) {
  const double d = 2.6, k = 1.3;
  expect_rel(lifsh::inner_jd_zero_mass(d, 0.0, k), lifsh::gamma_d(d) * std::pow(k, d - 4.0) / (0.5 * d - 1.0), 1e-14);
  expect_rel(lifsh::inner_jd_zero_mass(3.0, 1.0, 2.0), std::atan(0.5) / (4.0 * kPi), 1e-13);
  expect_rel(lifsh::inner_jd_zero_mass(3.0, 1.0, 2.0), lifsh::inner_j3(1.0, {0.0, 2.0}), 1e-13);
}

TEST(InnerJdZeroMass, PoleAtTwoDimensions) { EXPECT_THROW(lifsh::inner_jd_zero_mass(2.0, 1.0, 1.0), lifsh::PoleError); }

TEST(InnerJdKss, AgreesWithF1Form) {
  for (double d : {1.0, 1.5, 2.0}) {
    expect_rel(lifsh::inner_jd_kss(d, 0.6, {0.9, 1.4}), lifsh::inner_jd_f1(d, 0.6, {0.9, 1.4}), 1e-7);
  }
}

TEST(I1mHat, MarginalValues) {
  EXPECT_NEAR(lifsh::i1m_hat({2.0, 1.0, 1.0}), 0.125, 1e-14);
  for (const auto& [p, q] : {std::pair{1.0, 1.0}, std::pair{0.3, 2.2}, std::pair{2.5, 0.4}}) {
    EXPECT_NEAR(lifsh::i1m_hat({6.0, p, q}), 1.0, 1e-13);
    EXPECT_NEAR(lifsh::i1m_hat({2.0, p, q}), 1.0 / (4.0 * (p * p + std::pow(q, 4))), 1e-14);
  }
}

TEST(I1mHat, Homogeneity) {
  const double m = 3.4, lambda = 2.7, p = 0.8, q = 1.1;
  const double e = 0.5 * m - 1.0;
  expect_rel(lifsh::i1m_hat({m, lambda * p, std::sqrt(lambda) * q}), std::pow(lambda, -2.0 + e) * lifsh::i1m_hat({m, p, q}),
             1e-9);
}

TEST(I1mHat, IntegerFormsAgree) {
  for (const auto& [p, q] : {std::pair{1.0, 1.0}, std::pair{0.4, 2.0}, std::pair{2.7, 0.6}}) {
    expect_rel(lifsh::i1m_hat({3.0, p, q}), lifsh::special_m3(p, q), 1e-10);
    expect_rel(lifsh::i1m_hat({4.0, p, q}), lifsh::special_m4(p, q), 1e-10);
    expect_rel(lifsh::i1m_hat({5.0, p, q}), lifsh::special_m5(p, q), 1e-10);
  }
}

TEST(I1mHat, ContinuousThroughFour) {
  // The m = 4 point is removable: values just off it approach the m = 4 form.
  const double at4 = lifsh::special_m4(0.9, 1.2);
  expect_rel(lifsh::i1m_hat({4.0 + 2e-6, 0.9, 1.2}), at4, 1e-5);
  expect_rel(lifsh::i1m_hat({4.0 - 2e-6, 0.9, 1.2}), at4, 1e-5);
}

TEST(SpecialM3, PrintedLogForm) {
  const double s5 = std::sqrt(5.0);
  const double want = -0.25 * std::log((s5 + 1.0 - std::sqrt(2.0) * std::sqrt(s5 + 1.0)) / 2.0);
  expect_rel(lifsh::special_m3(1.0, 1.0), want, 1e-13);
}

TEST(SpecialM4, ReproducesPrintedI14) {
  for (double q : {0.5, 1.0, 2.0}) {
    const double q4 = std::pow(q, 4);
    const double want =
        (std::atan(2.0 / (q * q * (3.0 + q4))) + std::log((1.0 + q4) / (1.0 + q4 / 4.0)) / (q * q)) / (32.0 * kPi * kPi);
    expect_rel(lifsh::c1_constant(1.0) * lifsh::special_m4(1.0, q), want, 1e-13);
    expect_rel(lifsh::i14_closed(q), want, 1e-13);
  }
  expect_rel(lifsh::i14_closed(1.0), (std::atan(0.5) + std::log(1.6)) / (32.0 * kPi * kPi), 1e-14);
}

TEST(SpecialM6, IsOne) { EXPECT_NEAR(lifsh::special_m6(0.3, 1.7), 1.0, 1e-15); }

TEST(Axes, PrintedValues) {
  // q = 0: (2p)^{-2+e} cos(pi e/2)/(1-e) at e = 1/2, p = 1/2
  expect_rel(lifsh::i1m_q_axis(3.0, 0.5), std::sqrt(2.0), 1e-14);
  // p = 0 at e = 1/2: the Gamma(0) term drops out
  expect_rel(lifsh::i1m_p_axis(3.0, 1.0), 0.5, 1e-14);
}

TEST(Axes, FiniteAtFour) {
  // cos(pi e/2)/(1-e) -> pi/2 at e = 1
  expect_rel(lifsh::i1m_q_axis(4.0, 0.5), kPi / 2.0, 1e-14);
  EXPECT_TRUE(std::isfinite(lifsh::i1m_p_axis(4.0, 1.0)));
}

TEST(I1m, AxisContinuity) {
  expect_rel(lifsh::i1m_hat({3.6, 0.8, 1e-4}), lifsh::i1m_q_axis(3.6, 0.8), 1e-5);
  expect_rel(lifsh::i1m_hat({3.6, 1e-7, 0.9}), lifsh::i1m_p_axis(3.6, 0.9), 1e-5);
}

TEST(I1m, ScaledByC1) {
  const IntegralPoint pt{3.7, 0.6, 1.4};
  expect_rel(lifsh::i1m(pt), lifsh::c1_constant(pt.eps_hat()) * lifsh::i1m_hat(pt), 1e-15);
}

TEST(I1m, Errors) {
  EXPECT_THROW(lifsh::i1m({6.0, 1.0, 1.0}), lifsh::DomainError);
  EXPECT_THROW(lifsh::i1m({3.0, -1.0, 1.0}), lifsh::DomainError);
  EXPECT_THROW(lifsh::special_m3(0.0, 1.0), lifsh::DomainError);
}

TEST(I1mViaH4, MatchesDirectForm) {
  for (const IntegralPoint pt : {IntegralPoint{3.5, 0.6, 1.2}, IntegralPoint{2.5, 0.3, 1.0}, IntegralPoint{5.0, 0.2, 0.9}}) {
    const auto r = lifsh::i1m_via_h4(pt);
    expect_rel(r.real(), lifsh::i1m(pt), 1e-7);
  }
}

TEST(I3m, PrintedMassiveCase) {
  const double want = std::sqrt(std::sqrt(5.0) - 1.0) / (8.0 * kPi * std::sqrt(2.0));
  expect_rel(lifsh::i31_closed(1.0), want, 1e-14);
  expect_rel(lifsh::i3m(1.0, 1.0, 1.0), want, 1e-13);
}

TEST(I3m, GaussSummationOnAxis) {
  const double m = 1.0, p = 0.7, e3 = 0.5 * m + 1.0;
  const double a = 1.0 - 0.5 * e3, b = 0.5 * e3, c = 1.5;
  const double gauss = std::tgamma(c) * std::tgamma(c - a - b) / (std::tgamma(c - a) * std::tgamma(c - b));
  const double want = 8.0 * std::pow(16.0 * kPi, -e3) * std::tgamma(2.0 - e3) * std::pow(4.0 * p * p, -1.0 + 0.5 * e3) * gauss;
  expect_rel(lifsh::i3m(m, p, 0.0), want, 1e-13);
}

TEST(I3m, OutsideWindowThrows) { EXPECT_THROW(lifsh::i3m(2.0, 0.5, 0.9), lifsh::DomainError); }

TEST(I21, GaussSummationAtZero) {
  const double g34 = std::tgamma(0.75);
  expect_rel(lifsh::i21_closed(0.0), std::sqrt(kPi) / (4.0 * std::sqrt(2.0) * g34 * g34), 1e-14);
}
