#include "primeparts/constants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "primeparts/errors.hpp"

namespace primeparts {

namespace {

constexpr long double kEps = std::numeric_limits<long double>::epsilon();

void check_tol(double tol, const char* who) {
  if (!(tol > 0.0 && tol <= 1e-6)) throw DomainError(std::string(who) + ": tol must lie in (0, 1e-6]");
}

// ln(k+2)/(k+2)^2 = int_0^inf e^{-(k+2)t} t (1 - gamma - ln t) dt. The
// weight changes sign, so the CVZ bound uses its total variation
// int_0^inf e^{-2t} |t (1 - gamma - ln t)| dt = 0.2030133784..., rounded up.
constexpr long double kAltMeasureVariation = 0.2031L;

long double alt_term(unsigned j) {
  const long double k = j + 2.0L;
  return std::log(k) / (k * k);
}

}  // namespace

SeriesValue alternating_log_series(double tol) {
  check_tol(tol, "alternating_log_series");

  // Series is -(a_0 - a_1 + a_2 - ...) with a_j = ln(j+2)/(j+2)^2, since the
  // k = 1 term vanishes and the k = 2 term is negative.
  const long double rate = 3.0L + std::sqrt(8.0L);
  for (unsigned n = 4; n <= 200; ++n) {
    const long double truncation = 2.0L * kAltMeasureVariation / std::pow(rate, static_cast<long double>(n));
    const long double rounding = 8.0L * n * kEps;
    if (truncation + rounding > tol) continue;

    long double d = std::pow(rate, static_cast<long double>(n));
    d = (d + 1.0L / d) / 2.0L;
    long double b = -1.0L;
    long double c = -d;
    long double s = 0.0L;
    for (unsigned k = 0; k < n; ++k) {
      c = b - c;
      s += c * alt_term(k);
      b = (static_cast<long double>(k) + n) * (static_cast<long double>(k) - n) * b /
          ((k + 0.5L) * (k + 1.0L));
    }
    return {-s / d, truncation + rounding};
  }
  throw ConvergenceError("alternating_log_series: tolerance below attainable precision");
}

namespace {

// d^m/dx^m [ln x / x^2] = (-1)^m (m+1)! x^{-m-2} (ln x - (H_{m+1} - 1))
long double log_over_square_derivative(unsigned m, long double x) {
  long double factorial = 1.0L;
  long double harmonic = 0.0L;
  for (unsigned i = 1; i <= m + 1; ++i) {
    factorial *= i;
    harmonic += 1.0L / i;
  }
  const long double sign = (m % 2 == 0) ? 1.0L : -1.0L;
  return sign * factorial * std::pow(x, -static_cast<long double>(m) - 2.0L) * (std::log(x) - (harmonic - 1.0L));
}

// B_2, B_4, ..., B_10
constexpr std::array<long double, 5> kBernoulli = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66};

// B_{2j}/(2j)! f^{(2j-1)}(K)
long double em_correction(unsigned j, long double K) {
  long double factorial = 1.0L;
  for (unsigned i = 2; i <= 2 * j; ++i) factorial *= i;
  return kBernoulli[j - 1] / factorial * log_over_square_derivative(2 * j - 1, K);
}

}  // namespace

SeriesValue log_series(double tol) {
  check_tol(tol, "log_series");

  for (unsigned K = 16; K <= (1u << 22); K *= 2) {
    const long double x = K;
    // First omitted correction, doubled.
    const long double truncation = 2.0L * std::fabs(em_correction(5, x));
    const long double rounding = 4.0L * K * kEps;
    if (truncation + rounding > tol) continue;

    long double head = 0.0L;
    for (unsigned k = 2; k < K; ++k) {
      const long double kk = k;
      head += std::log(kk) / (kk * kk);
    }
    long double tail = (std::log(x) + 1.0L) / x + std::log(x) / (x * x) / 2.0L;
    for (unsigned j = 1; j <= 4; ++j) tail -= em_correction(j, x);
    return {head + tail, truncation + rounding};
  }
  throw ConvergenceError("log_series: tolerance below attainable precision");
}

long double euler_gamma_from_harmonic(unsigned n) {
  long double h = 0.0L;
  for (unsigned k = n; k >= 1; --k) h += 1.0L / k;
  const long double x = n;
  const long double x2 = x * x;
  return h - std::log(x) - 1.0L / (2.0L * x) + 1.0L / (12.0L * x2) - 1.0L / (120.0L * x2 * x2) +
         1.0L / (252.0L * x2 * x2 * x2);
}

ConstantsBundle constants_bundle(double series_tol) {
  if (std::fabs(euler_gamma_from_harmonic(1000) - kEulerGamma) > 1e-10L)
    throw ConvergenceError("stored Euler constant fails its harmonic-number check");

  const SeriesValue alt = alternating_log_series(series_tol);
  const SeriesValue logs = log_series(series_tol);

  constexpr long double pi = std::numbers::pi_v<long double>;
  const long double pi2 = pi * pi;
  const long double f1 = pi2 / 6.0L;
  const long double F1 = f1 / 2.0L;
  const long double F2 = kEulerGamma * pi2 / 12.0L + alt.value;
  const long double f2 = kEulerGamma * pi2 / 6.0L + logs.value;
  const long double bF = F2 / F1 + std::log(pi / std::sqrt(6.0L));
  const long double bB = f2 / f1 + std::log(pi / std::sqrt(3.0L));

  // bF, bB carry the largest propagated series error (1/F1 > 1/f1 > 1).
  const long double propagated = std::max(alt.bound / F1, logs.bound / f1) + std::max(alt.bound, logs.bound);
  // Plus rounding each field to double.
  const long double err = propagated + 2.0L * std::numeric_limits<double>::epsilon();

  ConstantsBundle out{};
  out.gamma = static_cast<double>(kEulerGamma);
  out.alt_log_series = static_cast<double>(alt.value);
  out.log_series = static_cast<double>(logs.value);
  out.F1 = static_cast<double>(F1);
  out.F2 = static_cast<double>(F2);
  out.f1 = static_cast<double>(f1);
  out.f2 = static_cast<double>(f2);
  out.bF = static_cast<double>(bF);
  out.bB = static_cast<double>(bB);
  out.err_bound = static_cast<double>(err);
  return out;
}

}  // namespace primeparts
