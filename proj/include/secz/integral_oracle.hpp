#pragma once

// Independent route to the Laurent coefficients through the integral
//
//   (-1)^m C_m = B_m + int_1^inf (log^m t - m log^(m-1) t) / t^2 * Q(t) dt,
//
// truncated at T and evaluated exactly: Q = N - L with N piecewise constant
// between ordinates and L elementary, so every segment has a closed form in
// powers of log t. No quadrature is involved.

#include <vector>

#include "secz/estimator.hpp"
#include "secz/parallel.hpp"
#include "secz/real.hpp"
#include "secz/zero_source.hpp"

namespace secz {

/// Closed form of int log^k(t) / t^2 dt = -(1/t) sum_{j=0..k} (k!/j!) log^j t.
class KernelAntiderivative {
 public:
  /// Builds the coefficient table and checks the derivative numerically;
  /// throws std::logic_error if the check fails.
  explicit KernelAntiderivative(int k);

  int power() const noexcept { return k_; }
  /// k!/j! for j = 0..k.
  const std::vector<Real>& coefficients() const noexcept { return coefficients_; }

  Real operator()(const Real& t) const;
  /// log^k(t) / t^2.
  Real integrand(const Real& t) const;

 private:
  int k_;
  std::vector<Real> coefficients_;
};

/// Antiderivative of the kernel (log^m t - m log^(m-1) t) / t^2.
class QKernel {
 public:
  explicit QKernel(int m);
  int power() const noexcept { return m_; }
  Real antiderivative(const Real& t) const;
  Real operator()(const Real& t) const;

 private:
  int m_;
  KernelAntiderivative main_;
  KernelAntiderivative lower_;
};

/// int_1^T (log^m t - m log^(m-1) t) / t^2 * Q(t) dt.
Real integral_q_kernel(const ZeroTable& table, int m, const Real& cutoff, Parallelism parallelism = {});

/// Left side minus right side of the finite-T Stieltjes identity
///   S_m(T) = A_m(T) + (log^m T / T) Q(T) + B_m + int_1^T kernel * Q dt,
/// every piece computed by its own module.
Real stieltjes_identity_residual(const ZeroTable& table, int m, const Real& cutoff, Parallelism parallelism = {});

/// (-1)^m [B_m + integral_q_kernel(m, T)], with the plain estimator's
/// heuristic tail envelope.
Estimate c_from_integral(const ZeroTable& table, int m, const Real& cutoff, Parallelism parallelism = {});

}  // namespace secz
