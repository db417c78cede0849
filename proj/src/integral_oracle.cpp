#include "secz/integral_oracle.hpp"

#include <stdexcept>
#include <string>

#include "secz/accumulate.hpp"
#include "secz/asymptotics.hpp"
#include "secz/errors.hpp"
#include "secz/sums.hpp"

namespace secz {
namespace {

void check_power(int m) {
  if (m < 0 || m > kMaxLogPower)
    throw DomainError("log power " + std::to_string(m) + " outside [0, " + std::to_string(kMaxLogPower) + "]");
}

// int_0^U (u - log 2pi - 1)(u^m - m u^(m-1)) du, the L-part's t-linear piece
// after substituting u = log t.
Real smooth_linear_part(int m, const Real& u) {
  const Real c1 = log(pi() * 2L) + 1L;
  const long mm = m;
  Real result = pow(u, mm + 2) / (mm + 2) - (c1 + mm) * pow(u, mm + 1) / (mm + 1);
  if (m >= 1) result += c1 * pow(u, mm);
  return result;
}

}  // namespace

KernelAntiderivative::KernelAntiderivative(int k) : k_(k) {
  check_power(k);
  coefficients_.resize(static_cast<std::size_t>(k) + 1);
  // k!/j! built downward from j = k.
  coefficients_[static_cast<std::size_t>(k)] = Real(1);
  for (int j = k - 1; j >= 0; --j)
    coefficients_[static_cast<std::size_t>(j)] = coefficients_[static_cast<std::size_t>(j) + 1] * static_cast<long>(j + 1);

  // d/dt F(t) must reproduce log^k(t)/t^2; central difference at t = 3.
  const Real t(3);
  const Real h = pow(Real(2), -static_cast<long>(working_precision()) / 3);
  const Real derivative = ((*this)(t + h) - (*this)(t - h)) / (h * 2L);
  const Real expected = integrand(t);
  if (abs(derivative - expected) > abs(expected) * Real(1e-10) + Real(1e-30))
    throw std::logic_error("kernel antiderivative failed its derivative check for k=" + std::to_string(k));
}

Real KernelAntiderivative::operator()(const Real& t) const {
  const Real u = log(t);
  Real acc = coefficients_.back();
  for (int j = k_ - 1; j >= 0; --j) {
    acc *= u;
    acc += coefficients_[static_cast<std::size_t>(j)];
  }
  return -(acc / t);
}

Real KernelAntiderivative::integrand(const Real& t) const {
  return pow(log(t), static_cast<long>(k_)) / (t * t);
}

QKernel::QKernel(int m) : m_(m), main_(m), lower_(m > 0 ? m - 1 : 0) {}

Real QKernel::antiderivative(const Real& t) const {
  if (m_ == 0) return main_(t);
  return main_(t) - lower_(t) * static_cast<long>(m_);
}

Real QKernel::operator()(const Real& t) const {
  if (m_ == 0) return main_.integrand(t);
  return main_.integrand(t) - lower_.integrand(t) * static_cast<long>(m_);
}

Real integral_q_kernel(const ZeroTable& table, int m, const Real& cutoff, Parallelism parallelism) {
  check_power(m);
  if (cutoff < 1L) throw DomainError("integral cutoff must be at least 1");
  const QKernel kernel(m);
  const std::size_t below = count_below(table, cutoff);
  const auto gammas = table.gammas();

  // N-part: N(t) = k on [gamma_k, gamma_(k+1)), the last segment ending at T.
  const ExactSum counting = exact_sum(below, parallelism, [&](std::size_t i) {
    const Real& a = gammas[i];
    const Real& b = i + 1 < below ? gammas[i + 1] : cutoff;
    return (kernel.antiderivative(b) - kernel.antiderivative(a)) * static_cast<long>(i + 1);
  });

  // L-part: L(t) = 7/8 + (t/2pi)(log t - log 2pi - 1).
  const Real constant_part = (kernel.antiderivative(cutoff) - kernel.antiderivative(Real(1))) * 7L / 8L;
  const Real linear_part = smooth_linear_part(m, log(cutoff)) / (pi() * 2L);
  return counting.value - constant_part - linear_part;
}

Real stieltjes_identity_residual(const ZeroTable& table, int m, const Real& cutoff, Parallelism parallelism) {
  const Real lhs = power_log_sum(table, m, cutoff, parallelism).value;
  const Real boundary = pow(log(cutoff), static_cast<long>(m)) / cutoff * q_emp(table, cutoff);
  const Real rhs = a_main(m, cutoff) + boundary + b_constant(m) + integral_q_kernel(table, m, cutoff, parallelism);
  return lhs - rhs;
}

Estimate c_from_integral(const ZeroTable& table, int m, const Real& cutoff, Parallelism parallelism) {
  const Real integral = integral_q_kernel(table, m, cutoff, parallelism);
  const Real signed_value = b_constant(m) + integral;
  Estimate e;
  e.n = m;
  e.value = (m % 2 == 0) ? signed_value : -signed_value;
  e.cutoff = cutoff;
  e.method = Method::integral;
  e.error_bound = plain_error_envelope(m, cutoff);
  e.heuristic_bound = true;
  e.zeros_used = count_below(table, cutoff);
  e.sum = integral;
  e.smooth_term = b_constant(m);
  e.boundary_correction = Real(0);
  e.input_error = Real(0);
  return e;
}

}  // namespace secz
