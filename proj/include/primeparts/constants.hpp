#pragma once

namespace primeparts {

/// A series value with a rigorous absolute error bound.
struct SeriesValue {
  long double value;
  long double bound;
};

/// sum_{k>=1} (-1)^(k-1) ln(k)/k^2, by Cohen-Villegas-Zagier acceleration.
/// Requires 0 < tol <= 1e-6 (DomainError otherwise).
SeriesValue alternating_log_series(double tol);

/// sum_{k>=2} ln(k)/k^2 (that is, -zeta'(2)), by direct summation plus an
/// Euler-Maclaurin tail. Requires 0 < tol <= 1e-6.
SeriesValue log_series(double tol);

/// Euler's constant as a 30-digit literal.
inline constexpr long double kEulerGamma = 0.577215664901532860606512090082L;

/// Euler's constant from the harmonic numbers, H_n - ln n with the
/// asymptotic correction through n^-6. Used to validate kEulerGamma.
long double euler_gamma_from_harmonic(unsigned n);

/// Constants of the asymptotic formulas.
///   F1 = pi^2/12,  F2 = gamma pi^2/12 + alt_log_series   (fermionic)
///   f1 = pi^2/6,   f2 = gamma pi^2/6  + log_series       (bosonic)
///   bF = F2/F1 + ln(pi/sqrt 6),  bB = f2/f1 + ln(pi/sqrt 3)
struct ConstantsBundle {
  double gamma;
  double alt_log_series;
  double log_series;
  double F1;
  double F2;
  double f1;
  double f2;
  double bF;
  double bB;
  double err_bound;  // uniform absolute bound on every field above
};

/// Throws ConvergenceError if a series cannot reach `series_tol`, or if the
/// stored Euler constant disagrees with its harmonic-number check.
ConstantsBundle constants_bundle(double series_tol = 1e-12);

}  // namespace primeparts
