#include "primeparts/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "primeparts/errors.hpp"

namespace primeparts {

namespace {

void require_n(double n) {
  if (!(n >= 2.0)) throw DomainError("asymptotic forms require n >= 2");
}

double leading(double n, double c) { return 2.0 * std::numbers::pi * std::sqrt(n / (c * std::log(n))); }

}  // namespace

double correction_bracket(double n, double b) {
  require_n(n);
  const double L = std::log(n);
  return 1.0 - 0.5 * std::log(L) / L + b / L;
}

double AsymptoticForm::ln_value(double n) const {
  require_n(n);
  const bool fermi = statistics == Statistics::Fermionic;
  const double c = fermi ? 6.0 : 3.0;
  if (order == Order::LeadingExponential) return leading(n, c);

  const double b = fermi ? constants.bF : constants.bB;
  double result = leading(n, c) * correction_bracket(n, b);
  if (include_prefactor) {
    // ln sqrt(4 n^{3/2} (c ln n)^{1/2}), expanded so nothing overflows.
    result -= 0.5 * (std::log(4.0) + 1.5 * std::log(n) + 0.5 * std::log(c * std::log(n)));
  }
  return result;
}

double ln_q0(double n) {
  require_n(n);
  return leading(n, 6.0);
}

double ln_p0(double n) {
  require_n(n);
  return leading(n, 3.0);
}

double ln_q_as(double n, const ConstantsBundle& constants) {
  return AsymptoticForm{Statistics::Fermionic, Order::FullCorrected, constants}.ln_value(n);
}

double ln_p_as(double n, const ConstantsBundle& constants) {
  return AsymptoticForm{Statistics::Bosonic, Order::FullCorrected, constants}.ln_value(n);
}

std::optional<double> value_of(double ln_value) {
  static const double max_ln = std::log(std::numeric_limits<double>::max());
  if (std::isnan(ln_value) || ln_value > max_ln) return std::nullopt;
  return std::exp(ln_value);
}

}  // namespace primeparts
