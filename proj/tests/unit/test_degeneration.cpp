#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hypmass/degeneration.hpp"
#include "hypmass/error.hpp"

using namespace hypmass;

namespace {

constexpr double kPi = std::numbers::pi;

DichotomyInput constant_family(double mass_sq, int members) {
  DichotomyInput in{{0.5, 0.1}, {}};
  for (int m = 1; m <= members; ++m) in.members.push_back({1.0 / m, 0.2, {mass_sq, mass_sq}});
  return in;
}

}  // namespace

TEST(PinchFamily, Validation) {
  EXPECT_NO_THROW((void)PinchFamily::from_schedule({0.1, 0.01}, {0.2, 0.25}));
  EXPECT_THROW((void)PinchFamily::from_schedule({}, {}), DomainError);
  EXPECT_THROW((void)PinchFamily::from_schedule({0.01, 0.1}, {0.2, 0.2}), DomainError);
  EXPECT_THROW((void)PinchFamily::from_schedule({0.1, 0.1}, {0.2, 0.2}), DomainError);
  EXPECT_THROW((void)PinchFamily::from_schedule({0.1}, {0.3}), DomainError);
  EXPECT_THROW((void)PinchFamily::from_schedule({0.1}, {0.0}), DomainError);
  EXPECT_THROW((void)PinchFamily::from_schedule({0.1}, {0.2, 0.2}), DomainError);
}

TEST(MetricSweep, FrozenErrorsAndQuadraticTrend) {
  const auto fam = PinchFamily::from_schedule({0.1, 0.01, 0.001}, {0.2, 0.2, 0.2});
  const auto t = metric_convergence_sweep(fam, {-1.0, 0.0});
  ASSERT_EQ(t.rows.size(), 6u);
  EXPECT_TRUE(t.decreasing_along_schedule());
  const double expected[] = {2.652140393035675200e-4, 2.652577963904806916e-6, 2.652582340655216901e-8};
  for (int k = 0; k < 3; ++k) {
    const auto& row = t.rows[2 * k + 1];
    EXPECT_EQ(row.r, 0.0);
    EXPECT_NEAR(row.error, expected[k], 1e-13 * expected[k]);
    EXPECT_NEAR(row.limit, 1.0 / kPi, 1e-16);
  }
  EXPECT_THROW((void)metric_convergence_sweep(fam, {100.0}), DomainError);
}

TEST(PotentialSweep, LimitIsPiSquared) {
  EXPECT_NEAR(limit_potential(1, 0.0), kPi * kPi, 1e-13);
  EXPECT_EQ(limit_potential(0, 1.0), 0.0);
  const double l = 1e-3 / (2 * kPi);
  const double rho = std::asinh(1.0 / std::sinh(5e-4));
  EXPECT_NEAR(shifted_potential(1e-3, 2, 0.5), 4.0 / (l * l * std::pow(std::cosh(0.5 - rho), 2)), 1e-6);
  const auto fam = PinchFamily::from_schedule({0.1, 0.01, 0.001}, {0.2, 0.2, 0.2});
  const auto t = potential_convergence_sweep(fam, 1, {0.0});
  EXPECT_TRUE(t.decreasing_along_schedule());
  EXPECT_LT(t.rows.back().error, 1e-3);
  EXPECT_EQ(potential_convergence_sweep(fam, 0, {0.0}).rows.front().error, 0.0);
}

TEST(Dichotomy, ConstantMassIsCaseOne) {
  const auto r = classify_dichotomy(constant_family(0.9, 12));
  EXPECT_EQ(r.kind, DichotomyCase::case1);
  ASSERT_TRUE(r.witness_eps.has_value());
  EXPECT_EQ(*r.witness_eps, 0.5);
  EXPECT_EQ(*r.witness_delta, 0.9);
  EXPECT_TRUE(r.renormalizers.empty());
}

TEST(Dichotomy, VanishingMassIsCaseTwo) {
  DichotomyInput in{{0.5, 0.1}, {}};
  for (int k = 0; k <= 8; ++k) {
    const double m = std::pow(10.0, k);
    in.members.push_back({1.0 / m, 0.2, {2.0 / m, 1.0 / m}});
  }
  const auto r = classify_dichotomy(in);
  EXPECT_EQ(r.kind, DichotomyCase::case2);
  ASSERT_EQ(r.renormalizers.size(), 9u);
  EXPECT_NEAR(r.renormalizers.back(), 1e4, 1e-8);
  EXPECT_TRUE(r.renormalizers_nondecreasing);
  EXPECT_TRUE(r.renormalizers_diverging);
  EXPECT_NEAR(r.divergence_bound, std::sqrt(1e3), 1e-12);
}

TEST(Dichotomy, TailFractionAndDelta) {
  auto in = constant_family(1e-4, 8);
  EXPECT_EQ(classify_dichotomy(in).kind, DichotomyCase::case2);
  EXPECT_EQ(classify_dichotomy(in, {0.25, 1e-5, {}}).kind, DichotomyCase::case1);
  in.members[0].thick_mass_sq = {1.0, 1.0};
  EXPECT_EQ(classify_dichotomy(in).kind, DichotomyCase::case2);
  EXPECT_EQ(classify_dichotomy(in, {1.0, 1e-3, {}}).kind, DichotomyCase::case1);
  EXPECT_TRUE(classify_dichotomy(in).renormalizers_nondecreasing);
  in.members[3].thick_mass_sq = {1e-6, 1e-6};
  EXPECT_FALSE(classify_dichotomy(in).renormalizers_nondecreasing);
  EXPECT_FALSE(classify_dichotomy(in).renormalizers_diverging);
}

TEST(Dichotomy, Rejections) {
  EXPECT_THROW((void)classify_dichotomy({{}, {}}), DomainError);
  auto in = constant_family(0.5, 3);
  EXPECT_THROW((void)classify_dichotomy(in, {0.0, 1e-3, {}}), DomainError);
  EXPECT_THROW((void)classify_dichotomy(in, {0.25, 0.0, {}}), DomainError);
  in.members[1].thick_mass_sq = {0.5};
  EXPECT_THROW((void)classify_dichotomy(in), DomainError);
  in.members[1].thick_mass_sq = {0.5, -1.0};
  EXPECT_THROW((void)classify_dichotomy(in), DomainError);
}

TEST(CollarFamily, ThickFractionDecaysAlongPinching) {
  const auto fam = PinchFamily::from_schedule({1e-2, 1e-4, 1e-8}, {0.2, 0.2, 0.2});
  const auto in = synthesize_collar_family(fam, {0.5, 0.1}, {ModeKind::c, {512, {}}});
  ASSERT_EQ(in.members.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_GT(in.members[i].thick_mass_sq[0], 0.0);
    EXPECT_LT(in.members[i].thick_mass_sq[0], in.members[i].thick_mass_sq[1]);
    EXPECT_LE(in.members[i].thick_mass_sq[1], 1.0);
    if (i > 0) EXPECT_LT(in.members[i].thick_mass_sq[1], in.members[i - 1].thick_mass_sq[1]);
  }
  EXPECT_THROW((void)synthesize_collar_family(fam, {1e-3}), DomainError);
}

TEST(Aggregate, MaxConstantDominates) {
  SurfaceModel model{{{"cusp A", RegionKind::cusp, 0.3}, {"collar B", RegionKind::collar, 0.7}}, 2.0};
  const auto r = aggregate_mass_bounds(model, 0.1);
  EXPECT_EQ(r.dominant_region, "collar B");
  EXPECT_NEAR(r.combined_constant, 0.7, 0.0);
  EXPECT_NEAR(r.thick_mass_lower_bound, 1.0 / std::sqrt(1.49), 1e-15);
  EXPECT_NEAR(*r.thin_mass_sq_bound, 0.98, 1e-15);
  model.regions.push_back({"open", RegionKind::collar, std::nullopt});
  EXPECT_THROW((void)aggregate_mass_bounds(model, 0.1), DomainError);
}

TEST(Aggregate, RegionsFromReports) {
  cusp::CuspBoundReport cr;
  cr.rows.push_back({0.1, 20 * kPi, {}, {}, 0.02});
  EXPECT_EQ(*cusp_region("c", cr, 0.1).constant, 0.02);
  EXPECT_FALSE(cusp_region("c", cr, 0.2).constant.has_value());
  CollarLemmaReport lr;
  lr.t1 = 0.1;
  EXPECT_FALSE(collar_region("g", lr).constant.has_value());
  lr.t0 = 0.6;
  EXPECT_EQ(*collar_region("g", lr).constant, 0.6);
}
