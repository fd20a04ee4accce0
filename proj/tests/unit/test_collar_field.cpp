#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "hypmass/collar_field.hpp"
#include "hypmass/error.hpp"

using namespace hypmass;

namespace {

FieldOptions small_grid(GeneratorNormalization norm = GeneratorNormalization::boundary) {
  FieldOptions o;
  o.r_points = 256;
  o.theta_points = 64;
  o.normalization = norm;
  return o;
}

CollarField sample_field(double lg = 0.01) {
  return synthesize_field(CollarGeometry(lg), SpectralParam::from_lambda(0.16),
                          {{0, 0.2, 1.0, 0, 0}, {1, 0.5, 1.0, -0.3, 0.2}, {3, 0.1, 0.4, 0.2, 0.1}},
                          small_grid());
}

}  // namespace

TEST(CollarField, GridShape) {
  const auto f = sample_field();
  EXPECT_EQ(f.r_points(), 256u);
  EXPECT_EQ(f.theta_points(), 64u);
  EXPECT_NEAR(f.r_grid().back(), CollarGeometry(0.01).unit_radius(), 1e-12);
  EXPECT_EQ(f.theta_grid().front(), 0.0);
}

TEST(CollarField, ZeroAndFirstModesSplitTheField) {
  const auto f = sample_field();
  for (std::size_t i : {0u, 100u, 255u})
    for (std::size_t k : {0u, 17u, 63u})
      EXPECT_NEAR(f.zero_mode(i) + f.first_mode(i, k), f.value(i, k), 1e-12 * (1 + std::abs(f.value(i, k))));
}

TEST(CollarField, FourierExtractionRecoversCoefficients) {
  const auto f = sample_field();
  const std::size_t i = 200;
  const auto c = f.coefficients_at(f.r_grid()[i]);
  ASSERT_EQ(c.j.size(), 3u);
  EXPECT_NEAR(f.extract_fourier(i, 0), c.a[0], 1e-12);
  EXPECT_NEAR(f.extract_fourier(i, 1), c.a[1], 1e-12);
  EXPECT_NEAR(f.extract_fourier(i, 1, true), c.b[1], 1e-12);
  EXPECT_NEAR(f.extract_fourier(i, 3, true), c.b[2], 1e-12);
  EXPECT_NEAR(f.extract_fourier(i, 2), 0.0, 1e-12);
  EXPECT_THROW((void)f.extract_fourier(i, -1), DomainError);
}

TEST(CollarField, BoundaryNormalizationGivesUnitGenerators) {
  const auto f = synthesize_field(CollarGeometry(0.01), SpectralParam::from_lambda(0.16),
                                  {{2, 0.0, 1.0, 0.0, 0.0}}, small_grid());
  EXPECT_NEAR(f.value(f.r_points() - 1, 0), 1.0, 1e-12);
  EXPECT_NEAR(f.boundary_sup(), 1.0, 1e-12);
}

TEST(CollarField, RawNormalizationKeepsInitialData) {
  const auto f = synthesize_field(CollarGeometry(0.01), SpectralParam::from_lambda(0.16),
                                  {{0, 0.0, 1.0, 0.0, 0.0}}, small_grid(GeneratorNormalization::raw));
  EXPECT_NEAR(f.coefficients_at(0.0).a[0], 1.0, 1e-14);
}

TEST(CollarField, ParsevalMatchesGridQuadrature) {
  const auto f = synthesize_field(CollarGeometry(0.05), SpectralParam::from_lambda(0.16),
                                  {{0, 0.3, 1.0, 0, 0}, {1, 0.5, 1.0, -0.3, 0.2}},
                                  FieldOptions{1024, 64, GeneratorNormalization::boundary, {}});
  EXPECT_NEAR(f.grid_mass().mass_sq() / f.parseval_mass().mass_sq(), 1.0, 1e-6);
}

TEST(CollarField, ScalingIsLinear) {
  const auto f = sample_field();
  const auto g = f.scaled(-2.0);
  EXPECT_NEAR(g.value(10, 5), -2.0 * f.value(10, 5), 1e-14);
  EXPECT_NEAR(g.first_mode(10, 5), -2.0 * f.first_mode(10, 5), 1e-14);
  EXPECT_NEAR(g.boundary_sup(), 2.0 * f.boundary_sup(), 1e-13);
  EXPECT_NEAR(g.parseval_mass().mass_sq(), 4.0 * f.parseval_mass().mass_sq(), 1e-10 * f.parseval_mass().mass_sq());
}

TEST(CollarField, TraceMatchesGrid) {
  const auto f = sample_field();
  const auto tr = f.trace_at(f.r_grid()[40]);
  for (std::size_t k = 0; k < tr.size(); ++k) EXPECT_NEAR(tr[k], f.value(40, k), 1e-9);
}

TEST(CollarField, WriteGrid) {
  const auto f = sample_field();
  std::ostringstream out;
  f.write_grid(out, CollarField::Component::zero_mode);
  const std::string s = out.str();
  EXPECT_EQ(s.rfind("# r theta value", 0), 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')), 1u + 256u * 64u);
}

TEST(TailSeries, Closeness) {
  EXPECT_NEAR(geometric_tail_sum(0.25), 0.5 / 0.75, 1e-14);
  EXPECT_THROW((void)geometric_tail_sum(1.0), DomainError);
  EXPECT_NEAR(tail_profile(2, 0.7), std::cosh(1.4) / std::sqrt(std::cosh(0.7)), 1e-14);
  const CollarGeometry g(0.01);
  EXPECT_GT(tail_series(g, 1.0), 0.0);
  EXPECT_LT(tail_series(g, 1.0), tail_series(g, 3.0));
  EXPECT_THROW((void)tail_series(g, g.unit_radius()), DomainError);
}

TEST(TailBound, HoldsAndKPrimeStable) {
  std::vector<double> kp;
  for (double lg : {1e-2, 1e-3, 1e-4}) {
    const auto raw = sample_field(lg);
    const auto f = raw.scaled(0.25 / raw.boundary_sup());
    const auto rep = tail_bound_check(f, 0.1, 1.0);
    EXPECT_TRUE(rep.pass());
    EXPECT_NEAR(rep.boundary_sup, 0.25, 1e-12);
    kp.push_back(rep.k_prime);
  }
  EXPECT_LT(*std::max_element(kp.begin(), kp.end()) / *std::min_element(kp.begin(), kp.end()), 2.0);
}

TEST(TailBound, RejectsLargeBoundary) {
  const auto f = sample_field();
  const auto big = f.scaled(1.0 / f.boundary_sup());
  EXPECT_THROW((void)tail_bound_check(big, 0.1, 1.0), DomainError);
  EXPECT_THROW((void)tail_bound_check(f, 0.001, 1.0), DomainError);
}
