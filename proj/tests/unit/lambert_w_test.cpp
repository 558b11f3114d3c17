#include "logitprice/lambert_w.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "logitprice/error.hpp"
#include "support/oracles.hpp"

namespace logitprice {
namespace {

constexpr double kInvE = 1.0 / std::numbers::e;

TEST(W0, KnownValues) {
  EXPECT_EQ(w0(0.0).w, 0.0);
  EXPECT_NEAR(w0(std::numbers::e).w, 1.0, 1e-15);
  EXPECT_NEAR(w0(std::exp(5.0)).w, 3.69344, 5e-6);
  EXPECT_NEAR(w0(-kInvE).w, -1.0, 1e-7);
}

TEST(W0, BranchPointClampAndDomain) {
  EXPECT_EQ(w0(-kInvE - 5e-13).w, -1.0);
  EXPECT_THROW(w0(-kInvE - 1e-11), DomainError);
  EXPECT_THROW(w0(-1.0), DomainError);
  EXPECT_THROW(w0(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(w0(std::numeric_limits<double>::infinity()), DomainError);
  try {
    w0(-1.0);
  } catch (const DomainError& e) {
    EXPECT_EQ(e.field(), "x");
  }
}

TEST(W0, AgreesWithBisection) {
  for (double x : {-0.3678, -0.3, -0.1, -1e-8, 1e-10, 0.5, 1.0, 2.0, 10.0,
                   148.4131591025766, 1e4, 1e10, 1e100, 1e300, 1e307}) {
    const double want = static_cast<double>(testing::lambert_bisect(x));
    EXPECT_NEAR(w0(x).w, want, 4e-15 * (1.0 + std::abs(want))) << "x = " << x;
  }
}

TEST(W0, IdentityOnLogGrid) {
  for (int i = 0; i < 10000; ++i) {
    const double x = std::pow(10.0, -6.0 + 12.0 * i / 9999);
    const WResult r = w0(x);
    EXPECT_LE(std::abs(r.w * std::exp(r.w) - x), 1e-12 * (1.0 + x));
    EXPECT_LE(r.residual, 1e-12 * (1.0 + x));
    EXPECT_LE(r.iterations, kMaxLambertIterations);
  }
}

TEST(W0, IdentityNearBranch) {
  for (int i = 0; i < 1000; ++i) {
    const double x = -kInvE + kInvE * i / 999;
    const WResult r = w0(x);
    EXPECT_GE(r.w, -1.0);
    EXPECT_LE(std::abs(r.w * std::exp(r.w) - x), 1e-12 * (1.0 + std::abs(x)));
  }
}

TEST(W0, StrictlyIncreasing) {
  double prev = w0(-kInvE).w;
  for (int i = 1; i < 2000; ++i) {
    const double x = -kInvE + (10.0 + kInvE) * i / 1999;
    const double w = w0(x).w;
    EXPECT_GT(w, prev) << "x = " << x;
    prev = w;
  }
}

TEST(W0OfExp, KnownValues) {
  EXPECT_NEAR(w0_of_exp(1.0).w, 1.0, 1e-15);
  EXPECT_NEAR(w0_of_exp(5.0).w, 3.693441, 5e-7);
  // Fixed point of w + ln w = 700, mpmath at 40 digits.
  EXPECT_NEAR(w0_of_exp(700.0).w, 693.4583088790255, 1e-12);
}

TEST(W0OfExp, Domain) {
  EXPECT_NO_THROW(w0_of_exp(-700.0));
  EXPECT_THROW(w0_of_exp(700.5), DomainError);
  EXPECT_THROW(w0_of_exp(-701.0), DomainError);
  EXPECT_THROW(w0_of_exp(std::numeric_limits<double>::quiet_NaN()),
               DomainError);
}

TEST(W0OfExp, LogIdentity) {
  for (int i = 0; i < 10000; ++i) {
    const double y = -1.0 + 701.0 * i / 9999;
    const WResult r = w0_of_exp(y);
    EXPECT_GT(r.w, 0.0);
    EXPECT_LE(std::abs(r.w + std::log(r.w) - y), 1e-12 * (1.0 + std::abs(y)));
  }
}

TEST(W0OfExp, ConsistentWithDirectForm) {
  for (int i = 0; i < 1000; ++i) {
    const double y = -1.0 + 31.0 * i / 999;
    const double direct = w0(std::exp(y)).w;
    EXPECT_LE(std::abs(w0_of_exp(y).w - direct), 1e-10 * (1.0 + direct));
  }
}

TEST(W0OfExp, TinyArgumentsStayPositive) {
  const WResult r = w0_of_exp(-700.0);
  EXPECT_GT(r.w, 0.0);
  EXPECT_NEAR(std::log(r.w), -700.0, 1e-12);
}

}  // namespace
}  // namespace logitprice
