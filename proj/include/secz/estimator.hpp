#pragma once

// Estimators for the Laurent coefficients C_n of the secondary zeta function
// from a finite zero table.
//
//   plain:  C_n ~ (-1)^n [ S_n(T) - A_n(T) ]
//   bpt:    C_n ~ (-1)^n [ S_n(T) - A_n(T) - (log^n T / T) Q(T) ]
//
// with S_n(T) = sum_{gamma<T} log^n(gamma)/gamma, A_n the smooth term and
// Q = N - L. The plain error is O(log^(n+1) T / T); the boundary term lowers
// it to O(log^(n+1) T / T^2) with the explicit bound e2_bound().

#include <cstddef>
#include <string>

#include "secz/asymptotics.hpp"
#include "secz/parallel.hpp"
#include "secz/real.hpp"
#include "secz/zero_source.hpp"

namespace secz {

enum class Method { plain, bpt, integral };

std::string to_string(Method method);

struct Estimate {
  int n = 0;
  Real value;
  Real cutoff;
  Method method = Method::plain;
  /// Explicit bound for bpt; heuristic envelope for plain and integral.
  Real error_bound;
  bool heuristic_bound = true;
  std::size_t zeros_used = 0;

  // Pieces, kept for reports.
  Real sum;
  Real smooth_term;
  Real boundary_correction;  // -(log^n T / T) Q(T) for bpt, 0 otherwise
  Real input_error;          // propagated from the table's digit count
};

/// Envelope constant for the plain estimator: 2 (A0 + A1).
Real plain_error_constant(const BptConstants& constants = {});

/// c_plain * max(log T, 1)^(n+1) / T.
Real plain_error_envelope(int n, const Real& cutoff);

Estimate estimate_plain(int n, const ZeroTable& table, const Real& cutoff, Parallelism parallelism = {});
Estimate estimate_bpt(int n, const ZeroTable& table, const Real& cutoff, Parallelism parallelism = {});

struct DigitMatch {
  int digits = 0;
  /// Estimate and reference differ in sign; digits compare magnitudes.
  bool sign_mismatch = false;
};

/// Largest k >= 0 with |estimate - reference| < 0.5e-k (magnitudes if the
/// signs differ), capped at `cap` (default: working decimal digits).
DigitMatch matched_digits(const Real& estimate, const Real& reference, int cap = -1);

}  // namespace secz
