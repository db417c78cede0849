#pragma once

// Evaluation of Hardy's function Z(t) = exp(i theta(t)) zeta(1/2 + i t) on the
// critical line, used to locate zero ordinates.
//
// zeta(1/2 + i t) is computed by Euler-Maclaurin summation, which is exact to
// any requested precision (unlike the asymptotic Riemann-Siegel formula).
// Z(t) is returned as Re(exp(i theta~) zeta) where theta~ is the asymptotic
// theta series; an error d in theta~ only scales the value by cos(d), so the
// sign of the result, and thus every root location, is unaffected.

#include <cstddef>
#include <vector>

#include "secz/real.hpp"

namespace secz {

/// Riemann-Siegel theta via its Stirling-type asymptotic series (t >= 5).
long double riemann_siegel_theta(long double t);
Real riemann_siegel_theta(const Real& t);

/// n-th Gram point: theta(g_n) = n*pi, n >= -1 (g_-1 ~ 9.667).
long double gram_point(long n);

template <class Scalar>
struct HardyValue {
  Scalar value;
  /// Bound on |computed - true| from truncation and rounding.
  Scalar error_bound;
};

/// Euler-Maclaurin evaluator for Z(t). Holds per-precision caches, so keep
/// one instance per thread. Scalar is `long double` (fast scan) or `Real`
/// (evaluated at the precision active when the evaluator was constructed).
template <class Scalar>
class HardyZ {
 public:
  HardyZ();

  HardyValue<Scalar> operator()(const Scalar& t);

  precision_t bits() const noexcept { return bits_; }

 private:
  void ensure_terms(std::size_t n);

  precision_t bits_;
  std::vector<Scalar> log_n_;
  std::vector<Scalar> inv_sqrt_n_;
  std::vector<Scalar> bernoulli_ratio_;  // B_2k / (2k)!, k = 1, 2, ...
  std::size_t max_corrections_;
};

extern template class HardyZ<long double>;
extern template class HardyZ<Real>;

}  // namespace secz
