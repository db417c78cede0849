#include "secz/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "secz/errors.hpp"
#include "secz/sums.hpp"

namespace secz {

std::string to_string(Method method) {
  switch (method) {
    case Method::plain: return "plain";
    case Method::bpt: return "bpt";
    case Method::integral: return "integral";
  }
  return "unknown";
}

Real plain_error_constant(const BptConstants& constants) { return (constants.a0 + constants.a1) * 2L; }

Real plain_error_envelope(int n, const Real& cutoff) {
  Real log_t = log(cutoff);
  if (log_t < 1L) log_t = Real(1);
  return plain_error_constant() * pow(log_t, static_cast<long>(n + 1)) / cutoff;
}

Estimate estimate_plain(int n, const ZeroTable& table, const Real& cutoff, Parallelism parallelism) {
  SumResult sum = power_log_sum(table, n, cutoff, parallelism);
  Real smooth = a_main(n, cutoff);
  Real bracket = sum.value - smooth;
  Estimate e;
  e.n = n;
  e.value = (n % 2 == 0) ? bracket : -bracket;
  e.cutoff = cutoff;
  e.method = Method::plain;
  e.error_bound = plain_error_envelope(n, cutoff);
  e.heuristic_bound = true;
  e.zeros_used = sum.terms;
  e.sum = std::move(sum.value);
  e.smooth_term = std::move(smooth);
  e.boundary_correction = Real(0);
  e.input_error = std::move(sum.accumulation_error_bound);
  return e;
}

Estimate estimate_bpt(int n, const ZeroTable& table, const Real& cutoff, Parallelism parallelism) {
  Estimate e = estimate_plain(n, table, cutoff, parallelism);
  const Real weight = pow(log(cutoff), static_cast<long>(n)) / cutoff;
  e.boundary_correction = -(weight * q_emp(table, cutoff));
  const Real bracket = e.sum - e.smooth_term + e.boundary_correction;
  e.value = (n % 2 == 0) ? bracket : -bracket;
  e.method = Method::bpt;
  e.error_bound = e2_bound(n, cutoff);
  e.heuristic_bound = false;
  return e;
}

DigitMatch matched_digits(const Real& estimate, const Real& reference, int cap) {
  if (reference.is_zero()) throw DomainError("matched_digits requires a nonzero reference");
  if (cap < 0) cap = decimal_digits(working_precision());
  DigitMatch match;
  match.sign_mismatch = estimate.sign() != 0 && estimate.sign() != reference.sign();
  const Real diff = match.sign_mismatch ? abs(abs(estimate) - abs(reference)) : abs(estimate - reference);
  if (diff.is_zero()) {
    match.digits = cap;
    return match;
  }
  // Start from the floating estimate and settle the boundary exactly.
  int k = static_cast<int>(std::floor(-std::log10(2.0 * diff.to_double())));
  k = std::clamp(k, -1, cap + 1);
  auto holds = [&](int digits) { return diff < pow(Real(10), -static_cast<long>(digits)) / 2L; };
  while (k + 1 <= cap && holds(k + 1)) ++k;
  while (k >= 0 && !holds(k)) --k;
  match.digits = std::clamp(k, 0, cap);
  return match;
}

}  // namespace secz
