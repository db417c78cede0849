#include "secz/asymptotics.hpp"

#include <cmath>
#include <string>

#include "secz/errors.hpp"

namespace secz {
namespace {

void check_power(int n) {
  if (n < 0 || n > kMaxLogPower)
    throw DomainError("log power " + std::to_string(n) + " outside [0, " + std::to_string(kMaxLogPower) + "]");
}

}  // namespace

Real l_main(const Real& height) {
  if (height.sign() <= 0) throw DomainError("L(T) requires T > 0");
  const Real two_pi = pi() * 2L;
  const Real x = height / two_pi;
  return Real(7) / 8L + x * log(x) - x;
}

double l_main(double height) {
  if (!(height > 0.0)) throw DomainError("L(T) requires T > 0");
  const double x = height / (2.0 * M_PI);
  return 0.875 + x * std::log(x) - x;
}

Real a_main(int n, const Real& height) {
  check_power(n);
  if (height < 1L) throw DomainError("A(T) requires T >= 1");
  const Real log_t = log(height);
  const Real log_two_pi = log(pi() * 2L);
  const long k = n + 1;
  // log(T^(n+1) / (2 pi)^(n+2)) = (n+1) log T - (n+2) log 2 pi
  const Real outer = log_t * k - log_two_pi * (k + 1);
  return pow(log_t, k) * outer / (pi() * 2L * (k * (k + 1)));
}

Real q_emp(const ZeroTable& table, const Real& height) {
  return Real(count_below(table, height)) - l_main(height);
}

Real b_constant(int m) {
  check_power(m);
  return m == 0 ? l_main(Real(1)) : Real(0);
}

Real e2_bound(int n, const Real& height, const BptConstants& c) {
  check_power(n);
  if (!(height > exp(Real(1)))) throw DomainError("E2 bound requires T > e");
  const Real log_t = log(height);
  const Real t2 = height * height;
  const Real log_n = pow(log_t, static_cast<long>(n));
  const Real derivative_part = n == 0 ? Real(0) : pow(log_t, static_cast<long>(n - 1)) * static_cast<long>(n);
  const Real first = (c.a0 + c.a1 * log_t) * 2L * abs(derivative_part - log_n) / t2;
  const Real second = (c.a1 + c.a2) * log_n / t2;
  return first + second;
}

Real inverse_l(const Real& count) {
  // Any N above L(2 pi) = -1/8 has a unique preimage on (2 pi, inf).
  if (!(count > Real(-1) / 8L)) throw DomainError("inverse_l requires N > L(2 pi) = -1/8");
  const Real two_pi = pi() * 2L;
  // L is strictly increasing on (2 pi, inf) with L(2 pi) = -1/8.
  Real lo = two_pi;
  Real hi = two_pi * 2L;
  int guard = 0;
  while (l_main(hi) < count) {
    lo = hi;
    hi *= 2L;
    if (++guard > 4000) throw ConvergenceError("inverse_l: failed to bracket N=" + count.to_string(20));
  }

  // Newton on the bracket with L'(T) = log(T / 2 pi) / 2 pi, bisecting when a
  // step would leave it.
  const Real tolerance = pow(Real(2), -static_cast<long>(working_precision()) + 4);
  Real t = (lo + hi) / 2L;
  for (int iter = 0; iter < 4 * static_cast<int>(working_precision()); ++iter) {
    const Real residual = l_main(t) - count;
    if (residual.is_zero()) return t;
    if (residual.sign() > 0) hi = t; else lo = t;
    const Real slope = log(t / two_pi) / two_pi;
    Real next = t - residual / slope;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2L;
    const Real step = abs(next - t);
    t = next;
    if (step <= tolerance * t) return t;
  }
  throw ConvergenceError("inverse_l did not converge for N=" + count.to_string(20));
}

}  // namespace secz
