#include "primeparts/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "primeparts/errors.hpp"

namespace primeparts {

PrimeCache& default_prime_cache() {
  static PrimeCache cache;
  return cache;
}

namespace {

void require_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be a positive finite number");
}

void require_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be positive");
}

// int_P^inf x^k e^{-beta x} dx, an upper bound on sum_{m > P} m^k e^{-beta m}
// once the integrand is decreasing, i.e. for P >= k/beta.
long double moment_tail(long double P, long double beta, unsigned k) {
  long double sum = 0.0L;
  long double coeff = 1.0L;  // k!/(k-j)!
  for (unsigned j = 0; j <= k; ++j) {
    sum += coeff * std::pow(P, static_cast<long double>(k - j)) / std::pow(beta, static_cast<long double>(j + 1));
    coeff *= static_cast<long double>(k - j);
  }
  return std::exp(-beta * P) * sum;
}

}  // namespace

std::uint64_t required_prime_limit(double beta, double tol, unsigned moment) {
  require_beta(beta);
  require_tol(tol);
  long double lo = std::max<long double>(2.0L, moment / static_cast<long double>(beta));
  if (moment_tail(lo, beta, moment) < tol) return static_cast<std::uint64_t>(std::ceil(lo));
  long double hi = 2.0L * lo;
  while (moment_tail(hi, beta, moment) >= tol) {
    lo = hi;
    hi *= 2.0L;
    if (hi > 1e12L) throw DomainError("beta too small for any practical prime bound");
  }
  while (hi - lo > 0.5L) {
    const long double mid = 0.5L * (lo + hi);
    (moment_tail(mid, beta, moment) < tol ? hi : lo) = mid;
  }
  return static_cast<std::uint64_t>(std::ceil(hi));
}

namespace {

std::span<const std::uint32_t> truncated_primes(const PrimeSet& primes, std::uint64_t needed) {
  if (primes.limit() < needed)
    throw TruncationError("prime set ends at " + std::to_string(primes.limit()) + ", tail bound needs " +
                              std::to_string(needed),
                          needed);
  return primes.up_to(needed);
}

// Above this the occupation forms switch to their e^{-beta p} limits.
constexpr long double kLargeExponent = 700.0L;

struct PrimeSums {
  long double ln_z = 0;
  long double occupation = 0;  // sum p/(e^{bp} + 1)
  long double curvature = 0;   // sum p^2 e^{bp}/(e^{bp} + 1)^2
};

PrimeSums prime_sums(long double beta, std::span<const std::uint32_t> primes) {
  PrimeSums s;
  for (std::uint32_t prime : primes) {
    const long double p = prime;
    const long double x = beta * p;
    if (x > kLargeExponent) {
      const long double tail = std::exp(-x);
      s.ln_z += tail;
      s.occupation += p * tail;
      s.curvature += p * p * tail;
    } else {
      const long double ex = std::exp(x);
      s.ln_z += std::log1p(1.0L / ex);
      s.occupation += p / (ex + 1.0L);
      s.curvature += p * p / (ex + 2.0L + 1.0L / ex);
    }
  }
  return s;
}

std::uint64_t derivative_limit(double beta, double tol) {
  return std::max({required_prime_limit(beta, tol, 0), required_prime_limit(beta, tol, 1),
                   required_prime_limit(beta, tol, 2)});
}

}  // namespace

double ln_z_exact(double beta, double tol, const PrimeSet& primes) {
  require_beta(beta);
  const auto used = truncated_primes(primes, required_prime_limit(beta, tol, 0));
  long double sum = 0.0L;
  for (std::uint32_t p : used) sum += std::log1p(std::exp(-static_cast<long double>(beta) * p));
  return static_cast<double>(sum);
}

double ln_z_exact(double beta, double tol) {
  require_beta(beta);
  const auto primes = default_prime_cache().at_least(required_prime_limit(beta, tol, 0));
  return ln_z_exact(beta, tol, *primes);
}

EntropyDerivatives entropy_derivatives(double E, double beta, const PrimeSet& primes, double tol) {
  require_beta(beta);
  const auto used = truncated_primes(primes, derivative_limit(beta, tol));
  const PrimeSums s = prime_sums(beta, used);
  return {static_cast<double>(static_cast<long double>(beta) * E + s.ln_z),
          static_cast<double>(static_cast<long double>(E) - s.occupation), static_cast<double>(s.curvature)};
}

SaddleSolution solve_saddle(double E, double tol, PrimeCache& cache) {
  if (!(E >= 2.0) || !std::isfinite(E)) throw DomainError("solve_saddle: requires E >= 2");
  if (!(tol > 0.0 && tol <= 1e-6)) throw DomainError("solve_saddle: tol must lie in (0, 1e-6]");

  // Prime sums are truncated two orders below the residual target.
  const double sum_tol = tol * 1e-2;
  auto evaluate = [&](long double beta) {
    const auto primes = cache.at_least(derivative_limit(static_cast<double>(beta), sum_tol));
    const auto used = primes->up_to(derivative_limit(static_cast<double>(beta), sum_tol));
    return prime_sums(beta, used);
  };
  auto slope = [&](const PrimeSums& s) { return static_cast<long double>(E) - s.occupation; };

  const long double guess = std::numbers::pi_v<long double> / std::sqrt(6.0L * E * std::log(static_cast<long double>(E)));

  // S' increases with beta (S'' > 0), from -inf at 0+ to E at infinity.
  long double lo = guess;
  long double hi = guess;
  while (slope(evaluate(lo)) >= 0.0L) lo /= 2.0L;
  while (slope(evaluate(hi)) <= 0.0L) hi *= 2.0L;

  constexpr int kMaxIterations = 200;
  long double beta = guess;
  long double step_old = hi - lo;
  for (int it = 1; it <= kMaxIterations; ++it) {
    const PrimeSums s = evaluate(beta);
    const long double f = slope(s);
    const long double df = s.curvature;
    if (std::fabs(f) <= tol) {
      SaddleSolution out;
      out.energy = E;
      out.beta0 = static_cast<double>(beta);
      out.entropy = static_cast<double>(beta * E + s.ln_z);
      out.s2 = static_cast<double>(df);
      out.ln_rho = static_cast<double>(beta * E + s.ln_z - 0.5L * std::log(2.0L * std::numbers::pi_v<long double> * df));
      out.residual = static_cast<double>(std::fabs(f));
      out.iterations = it;
      return out;
    }
    (f < 0.0L ? lo : hi) = beta;

    const long double newton = beta - f / df;
    const bool inside = newton > lo && newton < hi;
    if (inside && std::fabs(f / df) < 0.5L * step_old) {
      step_old = std::fabs(f / df);
      beta = newton;
    } else {
      step_old = hi - lo;
      beta = 0.5L * (lo + hi);
    }
    if (hi - lo <= std::numeric_limits<long double>::epsilon() * hi) break;
  }
  throw SolverError("solve_saddle: no convergence for E = " + std::to_string(E), static_cast<double>(lo),
                    static_cast<double>(hi));
}

SaddleSolution solve_saddle(double E, double tol) { return solve_saddle(E, tol, default_prime_cache()); }

double ln_z_asymptotic(double beta, const ConstantsBundle& constants) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("ln_z_asymptotic: requires 0 < beta < 1");
  const double L = std::log(beta);
  return (1.0 / (beta * L)) * (-constants.F1 + constants.F2 / L);
}

double ln_z_integral(double beta, double tol) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("ln_z_integral: requires 0 < beta < 1");
  require_tol(tol);

  // Cut where the integrand drops below tol*beta/2: the neglected tail is then
  // below tol/2 because e^{-beta x}/ln x decays at rate beta.
  const double cutoff = std::max(4.0, std::log(2.0 / (tol * beta)) / beta);
  auto integrand = [beta](double x) { return std::log1p(std::exp(-beta * x)) / std::log(x); };

  // Geometric panels resolve both the 1/ln x variation near 2 and the e^{-beta x} scale.
  std::vector<double> edges{2.0};
  while (edges.back() < cutoff) edges.push_back(std::min(cutoff, 2.0 * edges.back()));
  const double panel_budget = 0.5 * tol / static_cast<double>(edges.size() - 1);

  using boost::math::quadrature::gauss_kronrod;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double error = 0.0;
    const double part = gauss_kronrod<double, 31>::integrate(integrand, edges[i], edges[i + 1], 20, 1e-14, &error);
    if (!(error <= panel_budget) && error > 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(part))
      throw NumericError("ln_z_integral: quadrature error " + std::to_string(error) + " exceeds budget");
    total += part;
  }
  return total;
}

}  // namespace primeparts
