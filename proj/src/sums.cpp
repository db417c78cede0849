#include "secz/sums.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "secz/accumulate.hpp"
#include "secz/asymptotics.hpp"
#include "secz/errors.hpp"

namespace secz {
namespace {

// Input-precision propagation: terms * 10^-digits * max |phi'(gamma)|, with the
// maximum taken in double over the summed ordinates.
template <class Derivative>
Real propagated_input_error(const ZeroTable& table, std::size_t terms, Derivative derivative) {
  double worst = 0.0;
  for (std::size_t i = 0; i < terms; ++i) worst = std::max(worst, std::fabs(derivative(table[i].to_double())));
  return Real(static_cast<double>(terms) * worst) * pow(Real(10), -static_cast<long>(table.source_digits()));
}

Real rounding_error(const ExactSum& sum, long operations_per_term) {
  // Each term carries at most `operations_per_term` roundings; the total is
  // rounded once more.
  const Real unit = pow(Real(2), -static_cast<long>(working_precision()));
  return sum.absolute_total * unit * (operations_per_term + 1);
}

}  // namespace

SumResult power_log_sum(const ZeroTable& table, int n, const Real& cutoff, Parallelism parallelism) {
  if (n < 0 || n > kMaxLogPower)
    throw DomainError("log power " + std::to_string(n) + " outside [0, " + std::to_string(kMaxLogPower) + "]");
  const std::size_t terms = count_below(table, cutoff);
  const auto gammas = table.gammas();
  const ExactSum sum = exact_sum(terms, parallelism, [&](std::size_t i) {
    const Real& g = gammas[i];
    if (n == 0) return Real(1) / g;
    return pow(log(g), static_cast<long>(n)) / g;
  });

  const double power = n;
  Real input = propagated_input_error(table, terms, [power](double g) {
    const double l = std::log(g);
    const double lower = power == 0.0 ? 0.0 : power * std::pow(l, power - 1.0);
    return (lower - std::pow(l, power)) / (g * g);
  });
  Real bound = rounding_error(sum, 2L * (n + 2)) + input;
  return {sum.value, SumKind::log_power, Real(n), terms, cutoff, std::move(bound)};
}

SumResult power_sum(const ZeroTable& table, const Real& s, const Real& cutoff, Parallelism parallelism) {
  if (!(s > 1L)) throw DomainError("power_sum requires s > 1");
  const std::size_t terms = count_below(table, cutoff);
  const auto gammas = table.gammas();
  const Real minus_s = -s;
  const ExactSum sum = exact_sum(terms, parallelism, [&](std::size_t i) { return pow(gammas[i], minus_s); });

  const double sd = s.to_double();
  Real input = propagated_input_error(table, terms, [sd](double g) { return sd * std::pow(g, -sd - 1.0); });
  Real bound = rounding_error(sum, 4) + input;
  return {sum.value, SumKind::power, s, terms, cutoff, std::move(bound)};
}

}  // namespace secz
