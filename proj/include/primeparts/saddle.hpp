#pragma once

#include <cstdint>

#include "primeparts/constants.hpp"
#include "primeparts/primes.hpp"

namespace primeparts {

/// Smallest prime bound P such that sum_{m > P} m^moment e^{-beta m} < tol.
/// moment 0 bounds the ln Z tail, 1 the occupation sum, 2 the curvature sum.
std::uint64_t required_prime_limit(double beta, double tol, unsigned moment = 0);

/// ln Z(beta) = sum_p ln(1 + e^{-beta p}) over the fermionic prime spectrum,
/// truncated with tail error below tol. Throws TruncationError (carrying the
/// required bound) if `primes` stops short, DomainError for beta <= 0.
double ln_z_exact(double beta, double tol, const PrimeSet& primes);

/// Same, sieving as far as needed through the process-wide cache.
double ln_z_exact(double beta, double tol);

struct EntropyDerivatives {
  double S;   // beta E + ln Z
  double S1;  // E - sum_p p/(e^{beta p} + 1)
  double S2;  // sum_p p^2 e^{beta p}/(e^{beta p} + 1)^2
};

EntropyDerivatives entropy_derivatives(double E, double beta, const PrimeSet& primes, double tol);

struct SaddleSolution {
  double energy = 0;
  double beta0 = 0;
  double entropy = 0;  // S at beta0
  double s2 = 0;       // S'' at beta0
  double ln_rho = 0;   // entropy - ln(2 pi s2)/2
  double residual = 0;  // |S'(beta0)|
  int iterations = 0;
};

/// Root of S'(E, beta) = 0 by Newton iteration from pi/sqrt(6 E ln E),
/// falling back to bisection whenever a Newton step leaves the bracket.
/// Requires E >= 2 and tol in (0, 1e-6]; SolverError after the iteration cap.
SaddleSolution solve_saddle(double E, double tol, PrimeCache& cache);
SaddleSolution solve_saddle(double E, double tol = 1e-10);

/// Two-term asymptotic ln Z: (1/(beta ln beta)) [-F1 + F2/ln beta].
/// Requires 0 < beta < 1.
double ln_z_asymptotic(double beta, const ConstantsBundle& constants);

/// int_2^inf ln(1 + e^{-beta x})/ln x dx by adaptive Gauss-Kronrod
/// quadrature, absolute error below tol. Requires 0 < beta < 1.
double ln_z_integral(double beta, double tol);

PrimeCache& default_prime_cache();

}  // namespace primeparts
