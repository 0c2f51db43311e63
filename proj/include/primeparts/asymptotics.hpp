#pragma once

#include <optional>

#include "primeparts/constants.hpp"

namespace primeparts {

enum class Statistics { Fermionic, Bosonic };
enum class Order { LeadingExponential, FullCorrected };

/// One of the closed-form asymptotic counts, evaluated in log space.
///
/// With c = 6 (fermionic) or 3 (bosonic) and b = bF or bB:
///   leading:  2 pi sqrt(n/(c ln n))
///   full:     2 pi sqrt(n/(c ln n)) [1 - ln(ln n)/(2 ln n) + b/ln n]
///             - (1/2) ln(4 n^{3/2} (c ln n)^{1/2})
/// All take n >= 2 and throw DomainError otherwise.
struct AsymptoticForm {
  Statistics statistics = Statistics::Fermionic;
  Order order = Order::FullCorrected;
  ConstantsBundle constants{};
  bool include_prefactor = true;  // drop the pre-exponential term when false

  double ln_value(double n) const;
};

double ln_q0(double n);
double ln_q_as(double n, const ConstantsBundle& constants);
double ln_p_as(double n, const ConstantsBundle& constants);

/// Leading bosonic exponent 2 pi sqrt(n/(3 ln n)).
double ln_p0(double n);

/// The bracket 1 - ln(ln n)/(2 ln n) + b/ln n multiplying the leading exponent.
double correction_bracket(double n, double b);

/// exp(ln_value), or nullopt when the result would overflow a double.
std::optional<double> value_of(double ln_value);

}  // namespace primeparts
