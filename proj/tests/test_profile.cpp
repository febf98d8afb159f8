#include <gtest/gtest.h>

#include <cmath>

#include "wsf/profile.hpp"
#include "wsf/rng.hpp"

using namespace wsf;

TEST(Profile, SequenceConstant) {
  const auto s = sk_sequence(Profile::constant(3.0), 1.0, 5);
  ASSERT_EQ(s.size(), 6u);
  for (int k = 0; k <= 5; ++k) EXPECT_DOUBLE_EQ(s[k], 1.0 + 1.5 * k);
}

TEST(Profile, SequenceLinearIsGeometric) {
  const auto s = sk_sequence(Profile::power(1.0, 1.0), 1.0, 20);
  for (int k = 0; k <= 20; ++k) EXPECT_NEAR(s[k], std::pow(1.5, k), 1e-9 * std::pow(1.5, k));
}

TEST(Profile, SequenceCubicGrows) {
  const auto s = sk_sequence(Profile::cubic_growth(), 2.0, 200);
  for (std::size_t k = 1; k < s.size(); ++k) EXPECT_GT(s[k], s[k - 1]);
  // s_k grows like k^3.
  EXPECT_GT(s.back(), 1e4);
}

TEST(HsBound, LinearProfileSumsToSix) {
  const HsBound b = hs_resistance_bound(Profile::power(1.0, 1.0), 1.0);
  EXPECT_EQ(b.status, HsBound::Status::converged);
  EXPECT_NEAR(b.value, 6.0, 1e-10);
  EXPECT_GE(b.value, 6.0);
}

TEST(HsBound, ConstantDiverges) {
  const HsBound b = hs_resistance_bound(Profile::constant(1.0), 1.0);
  EXPECT_EQ(b.status, HsBound::Status::divergent);
  EXPECT_TRUE(std::isinf(b.value));
  EXPECT_TRUE(std::isinf(hs_resistance_bound(Profile::power(1.0, 0.5), 1.0).value));
}

TEST(HsBound, CubicBetweenIntegralFractions) {
  for (double s0 : {2.0, 6.0, 50.0}) {
    const double hs = hs_resistance_bound(Profile::cubic_growth(), s0).value;
    const double in = integral_bound(1.0, 2.0 / 3.0, s0);
    EXPECT_LE(hs, in);
    EXPECT_GE(hs, in / 16.0);
  }
}

TEST(HsBound, TableEndingAtInfinity) {
  const Profile p = Profile::table({2.0, 4.0}, {2.0, 4.0});
  // s: 1 -> 2 -> 3 -> 5; kappa(1)=2, kappa(2)=2, kappa(3)=4, kappa(5)=inf.
  const HsBound b = hs_resistance_bound(p, 1.0);
  EXPECT_NEAR(b.value, 1.0 + 1.0 + 0.5, 1e-12);
  EXPECT_EQ(b.terms, 3);
}

TEST(HsBound, ZeroTableDiverges) {
  EXPECT_TRUE(std::isinf(hs_resistance_bound(Profile::table({3.0}, {0.0}), 1.0).value));
}

TEST(IntegralBound, ClosedForms) {
  EXPECT_NEAR(integral_bound(1.0, 1.0, 1.0), 16.0, 1e-12);
  EXPECT_NEAR(integral_bound(1.0, 1.0, 4.0), 4.0, 1e-12);
  EXPECT_TRUE(std::isinf(integral_bound(1.0, 0.5, 1.0)));
  const double g = 2.0 / 3.0, a = std::pow(2.0, g);
  EXPECT_NEAR(integral_bound(1.0, g, 8.0), 4.0 * a * a * std::pow(8.0, 1.0 - 2.0 * g) / (2.0 * g - 1.0), 1e-12);
  EXPECT_NEAR(integral_bound(1.0, 1.0, 1.0, 3.0), 36.0, 1e-12);
}

TEST(IntegralBound, DominatesSum) {
  RngStream rng(9, 0);
  for (int i = 0; i < 20; ++i) {
    const double c = 0.3 + 0.7 * rng.uniform01();
    const double gamma = 0.55 + 0.45 * rng.uniform01();
    const double floor = gamma < 1.0 ? std::pow(c, 1.0 / (1.0 - gamma)) : 0.1;
    const double pi_a = std::max(floor, 0.1) * (1.0 + 20.0 * rng.uniform01());
    const double in = integral_bound(c, gamma, pi_a);
    const double hs = hs_resistance_bound(Profile::power(c, gamma), pi_a, 1e-9).value;
    EXPECT_LE(hs, in * (1.0 + 1e-9)) << "c=" << c << " gamma=" << gamma << " piA=" << pi_a;
  }
}

TEST(IntegralBound, RejectsBadInput) {
  EXPECT_THROW(integral_bound(2.0, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(integral_bound(4.0, 0.5, 1.0), std::invalid_argument);
  EXPECT_THROW(integral_bound(1.0, 1.0, 1.0, 1.5), std::invalid_argument);
  EXPECT_THROW(integral_bound(1.0, 1.5, 1.0), std::invalid_argument);
  EXPECT_THROW(integral_bound(-1.0, 1.0, 1.0), std::invalid_argument);
}

TEST(Profile, Presets) {
  const Profile z3 = Profile::preset("zd:3");
  EXPECT_NEAR(z3(8.0), 4.0, 1e-12);
  EXPECT_EQ(z3.name(), "zd:3");
  EXPECT_NEAR(Profile::preset("zd:2:3")(4.0), 6.0, 1e-12);
  EXPECT_NEAR(Profile::preset("t23")(27.0), 9.0, 1e-9);
  EXPECT_NEAR(Profile::preset("power:2:0.5")(9.0), 6.0, 1e-12);
  EXPECT_NEAR(Profile::preset("const:5")(100.0), 5.0, 1e-12);
  EXPECT_THROW(Profile::preset("zd"), std::invalid_argument);
  EXPECT_THROW(Profile::preset("cubic"), std::invalid_argument);
  EXPECT_THROW(Profile::preset("const:x"), std::invalid_argument);
  EXPECT_THROW(Profile::preset(""), std::invalid_argument);
}

TEST(Profile, TableValidation) {
  EXPECT_THROW(Profile::table({1.0, 1.0}, {1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(Profile::table({1.0, 2.0}, {2.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(Profile::table({1.0}, {1.0, 2.0}), std::invalid_argument);
  const Profile p = Profile::table({1.0, 3.0}, {1.0, 2.0});
  EXPECT_EQ(p(0.5), 1.0);
  EXPECT_EQ(p(1.0), 1.0);
  EXPECT_EQ(p(2.0), 2.0);
  EXPECT_TRUE(std::isinf(p(3.5)));
  EXPECT_THROW(Profile::power(0.0, 1.0), std::invalid_argument);
}
