#include <cmath>

#include <gtest/gtest.h>

#include "lifsh/oracle.hpp"

using lifsh::MassPair;

namespace {

void expect_rel(double got, double want, double tol) {
  EXPECT_LE(std::abs(got - want), tol * std::abs(want)) << "got " << got << " want " << want;
}

}  // namespace

TEST(QuadJd, ClosedFormsInLowDimensions) {
  expect_rel(lifsh::quad_jd(1, 1.0, {0.5, 1.5}).real(), lifsh::inner_j1(1.0, {0.5, 1.5}), 1e-9);
  expect_rel(lifsh::quad_jd(2, 1.0, {0.7, 1.1}).real(), lifsh::inner_j2(1.0, {0.7, 1.1}), 1e-8);
  expect_rel(lifsh::quad_jd(2, 0.0, {1.0, 1.0}).real(), lifsh::inner_j2(0.0, {1.0, 1.0}), 1e-8);
  expect_rel(lifsh::quad_jd(3, 0.5, {1.0, 2.0}).real(), std::atan(1.0 / 6.0) / (2.0 * M_PI), 1e-8);
}

TEST(QuadJd, ErrorEstimateIsReported) {
  const auto r = lifsh::quad_jd(3, 0.8, {0.4, 0.9});
  EXPECT_TRUE(r.converged);
  EXPECT_GE(r.abs_err, 0.0);
  EXPECT_LE(std::abs(r.real() - lifsh::inner_j3(0.8, {0.4, 0.9})), std::max(10.0 * r.abs_err, 1e-12));
}

TEST(QuadJd, UnsupportedDimensionThrows) { EXPECT_THROW(lifsh::quad_jd(4, 1.0, {1.0, 1.0}), lifsh::DomainError); }

TEST(QuadI1m, PrintedMasslessResult) {
  expect_rel(lifsh::quad_i1m(4, 1.0, 1.0).real(), lifsh::i14_closed(1.0), 1e-6);
  expect_rel(lifsh::quad_i1m(4, 1.0, 1.0).real(), (std::atan(0.5) + std::log(1.6)) / (32.0 * M_PI * M_PI), 1e-6);
}

TEST(QuadI1m, IntegerForms) {
  expect_rel(lifsh::quad_i1m(3, 1.0, 1.0).real(), lifsh::c1_constant(0.5) * lifsh::special_m3(1.0, 1.0), 1e-6);
  expect_rel(lifsh::quad_i1m(5, 0.7, 1.3).real(), lifsh::c1_constant(1.5) * lifsh::special_m5(0.7, 1.3), 1e-6);
}

TEST(QuadI1m, RadialStrategiesAgree) {
  lifsh::QuadratureSpec cut;
  cut.radial = lifsh::RadialStrategy::ExplicitCutoff;
  expect_rel(lifsh::quad_i1m(3, 0.6, 0.9, cut).real(), lifsh::quad_i1m(3, 0.6, 0.9).real(), 1e-6);
}

TEST(QuadI1m, UnsupportedDimensionThrows) { EXPECT_THROW(lifsh::quad_i1m(6, 1.0, 1.0), lifsh::DomainError); }

TEST(QuadIdm, PrintedOneDimensionalResults) {
  expect_rel(lifsh::quad_idm_m1(3, 1.0, 1.0).real(), lifsh::i31_closed(1.0), 1e-7);
  expect_rel(lifsh::quad_idm_m1(2, 1.0, 1.5).real(), lifsh::i21_closed(1.5), 1e-7);
}

TEST(QuadIdm, GeneralMomentumAgreesWithI3m) {
  expect_rel(lifsh::quad_idm_m1(3, 0.5, 0.9).real(), lifsh::i3m(1.0, 0.5, 0.9), 1e-7);
}
