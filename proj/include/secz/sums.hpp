#pragma once

#include <cstddef>

#include "secz/parallel.hpp"
#include "secz/real.hpp"
#include "secz/zero_source.hpp"

namespace secz {

enum class SumKind { log_power, power };

struct SumResult {
  Real value;
  SumKind kind = SumKind::log_power;
  /// The log power n (log_power) or the exponent s (power).
  Real parameter;
  /// Number of ordinates below the cutoff.
  std::size_t terms = 0;
  Real cutoff;
  /// Rounding of the terms plus terms * 10^-source_digits * max|d term/d gamma|.
  Real accumulation_error_bound;
};

/// sum_{gamma < T} log^n(gamma) / gamma.
SumResult power_log_sum(const ZeroTable& table, int n, const Real& cutoff, Parallelism parallelism = {});

/// sum_{gamma < T} gamma^-s for real s > 1.
SumResult power_sum(const ZeroTable& table, const Real& s, const Real& cutoff, Parallelism parallelism = {});

}  // namespace secz
