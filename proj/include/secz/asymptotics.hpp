#pragma once

// Smooth terms of the zero-counting function and of the log-power sums over
// zeros, plus the explicit error bound of the boundary-corrected estimator.

#include "secz/real.hpp"
#include "secz/zero_source.hpp"

namespace secz {

/// Explicit constants of the boundary-corrected error bound.
struct BptConstants {
  Real a0{"2.067"};
  Real a1{"0.059"};
  Real a2{"0.007"};
};

/// Largest log power accepted anywhere in the library.
inline constexpr int kMaxLogPower = 200;

/// L(T) = 7/8 + (T/2 pi) log(T/2 pi) - T/2 pi, the smooth part of N(T).
Real l_main(const Real& height);
double l_main(double height);

/// A_n(T) = (1/2 pi) int_1^T log^n(t) log(t/2 pi) / t dt
///        = log^(n+1)(T) log(T^(n+1)/(2 pi)^(n+2)) / (2 pi (n+1)(n+2)).
Real a_main(int n, const Real& height);

/// Q(T) = N(T) - L(T) measured on the table.
Real q_emp(const ZeroTable& table, const Real& height);

/// Lower-limit constant of the Stieltjes identity: B_0 = -Q(1) = L(1),
/// B_m = 0 for m >= 1 (log(1)^0 = 1 by convention).
Real b_constant(int m);

/// 2(A0 + A1 log T) |m log^(m-1) T - log^m T| / T^2 + (A1 + A2) log^m T / T^2,
/// with m log^(m-1) T read as 0 for m = 0. Requires T > e.
Real e2_bound(int n, const Real& height, const BptConstants& constants = {});

/// T > 2 pi with L(T) = count, to working precision. Requires count > -1/8.
Real inverse_l(const Real& count);

}  // namespace secz
