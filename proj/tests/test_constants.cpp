#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "primeparts/constants.hpp"
#include "primeparts/errors.hpp"

namespace primeparts {
namespace {

long double log_term(long double k) { return std::log(k) / (k * k); }

TEST(AlternatingLogSeries, FirstTermsAndBracketing) {
  const long double two_terms = -log_term(2) + log_term(3);
  EXPECT_NEAR(static_cast<double>(two_terms), -0.05122, 5e-6);

  // Terms decrease from k = 2 on, so consecutive partial sums bracket the sum.
  const long double value = alternating_log_series(1e-12).value;
  long double partial = 0;
  for (int k = 2; k <= 60; ++k) {
    const long double next = partial + ((k % 2 == 0) ? -1 : 1) * log_term(k);
    if (k > 2) {
      EXPECT_LE(std::min(partial, next), value) << k;
      EXPECT_GE(std::max(partial, next), value) << k;
    }
    partial = next;
  }
}

TEST(AlternatingLogSeries, AgreesWithAveragedBruteForce) {
  // Partial sums to 10^7; averaging two consecutive ones cancels the
  // leading alternating error, leaving O(ln K / K^3).
  constexpr int K = 10000000;
  long double s = 0;
  for (int k = 2; k < K; ++k) s += ((k % 2 == 0) ? -1 : 1) * log_term(k);
  const long double s_next = s + ((K % 2 == 0) ? -1 : 1) * log_term(K);
  const long double oracle = 0.5L * (s + s_next);

  const SeriesValue v = alternating_log_series(1e-12);
  EXPECT_LE(v.bound, 1e-12L);
  EXPECT_NEAR(static_cast<double>(v.value), static_cast<double>(oracle), 1e-12);
  EXPECT_NEAR(static_cast<double>(v.value), -0.101316578163504502, 1e-14);
}

TEST(AlternatingLogSeries, ConsistentWithPrintedF2) {
  const long double value = alternating_log_series(1e-12).value;
  const long double F2 = kEulerGamma * std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 12 + value;
  EXPECT_NEAR(static_cast<double>(F2), 0.3734242774, 1e-9);
}

TEST(AlternatingLogSeries, BoundTracksTolerance) {
  for (double tol : {1e-6, 1e-9, 1e-12, 1e-15}) {
    const SeriesValue v = alternating_log_series(tol);
    EXPECT_LE(v.bound, tol);
    EXPECT_NEAR(static_cast<double>(v.value), -0.101316578163504502, tol);
  }
}

TEST(AlternatingLogSeries, RejectsBadTolerance) {
  EXPECT_THROW(alternating_log_series(0.0), DomainError);
  EXPECT_THROW(alternating_log_series(-1e-8), DomainError);
  EXPECT_THROW(alternating_log_series(1e-5), DomainError);
  EXPECT_THROW(alternating_log_series(1e-40), ConvergenceError);
}

TEST(LogSeries, AgreesWithIndependentEulerMaclaurin) {
  // Explicit sum to K = 10^6, then integral, half term and the f' correction.
  constexpr int K = 1000000;
  long double head = 0;
  for (int k = 2; k < K; ++k) head += log_term(k);
  const long double x = K;
  const long double fprime = (1 - 2 * std::log(x)) / (x * x * x);
  const long double oracle = head + (std::log(x) + 1) / x + log_term(x) / 2 - fprime / 12;

  const SeriesValue v = log_series(1e-12);
  EXPECT_LE(v.bound, 1e-12L);
  EXPECT_NEAR(static_cast<double>(v.value), static_cast<double>(oracle), 1e-12);
  EXPECT_NEAR(static_cast<double>(v.value), 0.937548254315843754, 1e-14);
}

TEST(LogSeries, ConsistentWithPrintedf2) {
  const long double value = log_series(1e-12).value;
  const long double f2 = kEulerGamma * std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 6 + value;
  EXPECT_NEAR(static_cast<double>(f2), 1.887029965, 5e-10);
}

TEST(LogSeries, PartialSumsIncreaseTowardValue) {
  const long double value = log_series(1e-12).value;
  long double partial = 0;
  for (int k = 2; k <= 2000; ++k) {
    const long double next = partial + log_term(k);
    ASSERT_GT(next, partial);
    ASSERT_LT(next, value);
    partial = next;
  }
}

TEST(LogSeries, RejectsBadTolerance) {
  EXPECT_THROW(log_series(0.0), DomainError);
  EXPECT_THROW(log_series(2e-6), DomainError);
}

TEST(LogSeries, EtaZetaIdentity) {
  // sum (-1)^(k-1) ln k/k^2 = -(ln 2) pi^2/12 + (1/2) sum ln k/k^2
  const long double alt = alternating_log_series(1e-14).value;
  const long double plain = log_series(1e-14).value;
  const long double pi2 = std::numbers::pi_v<long double> * std::numbers::pi_v<long double>;
  EXPECT_NEAR(static_cast<double>(alt), static_cast<double>(-std::numbers::ln2_v<long double> * pi2 / 12 + plain / 2),
              1e-14);
}

TEST(EulerGamma, LiteralMatchesHarmonicLimit) {
  EXPECT_NEAR(static_cast<double>(euler_gamma_from_harmonic(1000) - kEulerGamma), 0.0, 1e-10);
  EXPECT_NEAR(static_cast<double>(euler_gamma_from_harmonic(100) - kEulerGamma), 0.0, 1e-10);
  EXPECT_NEAR(static_cast<double>(kEulerGamma), 0.5772156649, 5e-11);
}

TEST(ConstantsBundle, InvariantsHold) {
  const ConstantsBundle c = constants_bundle();
  const double pi2 = std::numbers::pi * std::numbers::pi;
  EXPECT_EQ(c.f1 - 2.0 * c.F1, 0.0);
  EXPECT_NEAR(c.F1, pi2 / 12, 1e-15);
  EXPECT_NEAR(c.f1, pi2 / 6, 1e-15);
  EXPECT_NEAR(c.F2, c.gamma * pi2 / 12 + c.alt_log_series, 1e-14);
  EXPECT_NEAR(c.f2, c.gamma * pi2 / 6 + c.log_series, 1e-14);
  EXPECT_NEAR(c.bF, c.F2 / c.F1 + std::log(std::numbers::pi / std::sqrt(6.0)), 1e-14);
  EXPECT_NEAR(c.bB, c.f2 / c.f1 + std::log(std::numbers::pi / std::sqrt(3.0)), 1e-14);
  EXPECT_LE(c.err_bound, 1e-10);
  EXPECT_GT(c.err_bound, 0.0);
}

TEST(ConstantsBundle, TenDigitValues) {
  const ConstantsBundle c = constants_bundle();
  EXPECT_NEAR(c.gamma, 0.5772156649, 5e-11);
  EXPECT_NEAR(c.F2, 0.3734242774, 5e-10);
  EXPECT_NEAR(c.f2, 1.887029965, 5e-10);
  EXPECT_NEAR(c.bF, 0.7028796287, 1e-10);
  EXPECT_NEAR(c.bB, 1.7426003995, 1e-10);
  // The fractional part of bB, which is what is often quoted for it.
  EXPECT_NEAR(c.bB - 1.0, 0.7426003995, 1e-10);
}

TEST(ConstantsBundle, StableAcrossTolerances) {
  const ConstantsBundle loose = constants_bundle(1e-7);
  const ConstantsBundle tight = constants_bundle(1e-14);
  EXPECT_NEAR(loose.bF, tight.bF, 2e-7);
  EXPECT_NEAR(loose.bB, tight.bB, 2e-7);
  EXPECT_LE(tight.err_bound, 1e-13);
}

}  // namespace
}  // namespace primeparts
