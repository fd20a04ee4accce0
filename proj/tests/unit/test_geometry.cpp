#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hypmass/error.hpp"
#include "hypmass/geometry.hpp"
#include "hypmass/mass.hpp"
#include "hypmass/quadrature.hpp"

using namespace hypmass;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Geometry, InverseHyperbolicFunctions) {
  EXPECT_NEAR(arccosh(10.0), 2.993222846126380898, 1e-15);
  EXPECT_NEAR(arccosh(100.0), 5.298292365610484591, 1e-14);
  EXPECT_NEAR(arcsinh(1.0), 0.8813735870195430252, 1e-15);
  EXPECT_EQ(arccosh(1.0), 0.0);
  EXPECT_NEAR(arccosh(1e300), 300 * std::log(10.0) + std::log(2.0), 1e-12);
  EXPECT_NEAR(arcsinh(-1e-20), -1e-20, 1e-35);
  EXPECT_THROW((void)arccosh(0.5), DomainError);
}

TEST(Geometry, CollarRadii) {
  const CollarGeometry g(0.01);
  EXPECT_NEAR(g.l(), 0.01 / (2 * kPi), 1e-18);
  EXPECT_NEAR(g.unit_radius(), arccosh(100.0), 1e-14);
  EXPECT_EQ(g.boundary_radius(0.01), 0.0);
  EXPECT_THROW((void)g.boundary_radius(0.005), DomainError);
  EXPECT_THROW(CollarGeometry(0.0), DomainError);
  EXPECT_THROW(CollarGeometry(-1.0), DomainError);
  EXPECT_THROW(CollarGeometry(0.1, 0.0), DomainError);
}

TEST(Geometry, CollarMetricMatchesBoundaryLength) {
  const CollarGeometry g(0.02);
  for (double u : {0.05, 0.3, 1.0})
    EXPECT_NEAR(2 * kPi * collar_metric_coeff(g, g.boundary_radius(u)), u, 1e-13 * u);
}

TEST(Geometry, CuspAreaEqualsBoundaryLength) {
  for (double t : {0.5, 1.0, 3.0}) {
    const CuspGeometry c(t);
    EXPECT_NEAR(c.area(), t, 1e-10 * t);
    EXPECT_NEAR(2 * kPi * cusp_metric_coeff(c, 0.0), t, 1e-15);
  }
  EXPECT_THROW(CuspGeometry(0.0), DomainError);
  EXPECT_THROW((void)cusp_metric_coeff(CuspGeometry(1.0), -0.1), DomainError);
}

TEST(Geometry, PointsNormalizeAngles) {
  const auto p = FermiPoint::make(0.5, -0.5);
  EXPECT_NEAR(p.theta, 2 * kPi - 0.5, 1e-15);
  EXPECT_TRUE(p.in_collar(CollarGeometry(0.01), 1.0));
  EXPECT_FALSE(FermiPoint::make(10.0, 0.0).in_collar(CollarGeometry(0.01), 1.0));
  const CuspGeometry c(2.0);
  EXPECT_NEAR(HorocyclePoint::make(c, 1.0, 5.0).theta, 1.0, 1e-15);
  EXPECT_THROW((void)HorocyclePoint::make(c, -1.0, 0.0), DomainError);
}

TEST(Geometry, KeenCollar) {
  EXPECT_NEAR(keen_halfwidth(0.01), 5.991466630438277131, 1e-13);
  EXPECT_NEAR(keen_boundary_length(0.1), 2.001666388955009925, 1e-15);
  const CollarGeometry g(0.1);
  const double rho = keen_halfwidth(0.1);
  EXPECT_NEAR(shifted_fermi(g, rho), 0.0, 1e-15);
  EXPECT_NEAR(shifted_fermi(g, 0.0), rho, 1e-15);
  EXPECT_NEAR(shifted_collar_coeff(g, shifted_fermi(g, 1.3)), collar_metric_coeff(g, 1.3), 1e-15);
  EXPECT_THROW((void)keen_halfwidth(0.0), DomainError);
  for (double r : {-3.0, 0.0, 1.5})
    EXPECT_NEAR(shifted_collar_defect(g, r), shifted_collar_coeff(g, r) - degenerate_limit_coeff(r), 1e-14);
}

TEST(Geometry, DegenerateMetricConvergesQuadratically) {
  const double expected[] = {2.652140393035675200e-4, 2.652577963904806916e-6, 2.652582340655216901e-8};
  int k = 0;
  for (double lg : {0.1, 0.01, 0.001}) {
    const CollarGeometry g(lg);
    EXPECT_NEAR(shifted_collar_defect(g, 0.0), expected[k], 1e-13 * expected[k]);
    EXPECT_NEAR(shifted_collar_coeff(g, 0.0) - degenerate_limit_coeff(0.0), expected[k], 1e-8 * expected[k]);
    ++k;
  }
}

TEST(Mass, LogArithmetic) {
  EXPECT_NEAR(log_add(std::log(2.0), std::log(3.0)), std::log(5.0), 1e-15);
  EXPECT_NEAR(log_sub(std::log(5.0), std::log(3.0)), std::log(2.0), 1e-15);
  EXPECT_EQ(log_sub(1.0, 1.0), -INFINITY);
  EXPECT_EQ(log_add(-INFINITY, 2.0), 2.0);
  EXPECT_NEAR(log_add(1000.0, 1000.0), 1000.0 + std::log(2.0), 1e-12);
}

TEST(Mass, ProfileScalingAndUnion) {
  const auto a = MassProfile::from_mass_sq("a", 4.0);
  EXPECT_NEAR(a.scaled(3.0).mass_sq(), 36.0, 1e-12);
  EXPECT_TRUE(a.scaled(0.0).is_zero());
  EXPECT_TRUE(MassProfile::from_mass_sq("z", 0.0).is_zero());
  const auto u = disjoint_union(a, MassProfile::from_mass_sq("b", 5.0), "ab");
  EXPECT_NEAR(u.mass_sq(), 9.0, 1e-13);
  EXPECT_NEAR(norm_ratio(a, u), 2.0 / 3.0, 1e-15);
}

TEST(Quadrature, FiniteAndTail) {
  const auto r = quad::integrate([](double x) { return std::sin(x); }, 0.0, kPi);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
  const auto t = quad::integrate_tail([](double y) { return std::exp(-3.0 * y); }, 1.0, 3.0);
  EXPECT_NEAR(t.value, std::exp(-3.0) / 3.0, 1e-14);
  const auto d = quad::integrate_decaying([](double y) { return std::exp(-y); }, 0.0, 5.0, 1.0);
  EXPECT_NEAR(d.value, 1.0 - std::exp(-5.0), 1e-13);
}

TEST(Quadrature, ReportsFailure) {
  const auto nasty = [](double x) { return std::sin(1.0 / x) / x; };
  EXPECT_THROW((void)quad::integrate(nasty, 1e-9, 1.0), QuadratureError);
}

TEST(Tolerance, Profiles) {
  EXPECT_EQ(tolerance_profile("default").quad_rel, Tolerances{}.quad_rel);
  EXPECT_LT(tolerance_profile("strict").quad_rel, Tolerances{}.quad_rel);
  EXPECT_GT(tolerance_profile("fast").quad_rel, Tolerances{}.quad_rel);
  EXPECT_THROW((void)tolerance_profile("sloppy"), ConfigError);
}
