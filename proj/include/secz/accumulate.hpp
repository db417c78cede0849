#pragma once

// Order-independent summation. Terms are computed at working precision and
// accumulated exactly in a wide MPFR accumulator; the total is rounded once.
// Because exact addition is associative, the result does not depend on the
// chunking or on the number of workers, and equals the correctly rounded sum
// of the rounded terms.

#include <cmath>
#include <cstddef>

#include "secz/parallel.hpp"
#include "secz/real.hpp"

namespace secz {

struct ExactSum {
  Real value;           // rounded to working precision
  Real absolute_total;  // sum of |term|, rounded to working precision
};

namespace detail {

struct ChunkAccumulator {
  Real sum;
  Real absolute;
  bool exact = true;
};

}  // namespace detail

/// Sums `term(i)` over i in [0, count) in kChunkSize chunks.
template <class Term>
ExactSum exact_sum(std::size_t count, Parallelism parallelism, Term term) {
  const precision_t bits = working_precision();
  const auto growth = static_cast<precision_t>(std::ceil(std::log2(static_cast<double>(count) + 2.0)));
  precision_t wide = 2 * bits + 128 + growth;
  for (;;) {
    const std::size_t chunks = chunk_count(count);
    auto partials = parallel_map<detail::ChunkAccumulator>(chunks, parallelism, [&](std::size_t c) {
      detail::ChunkAccumulator acc;
      {
        PrecisionScope scope(wide);
        acc.sum = Real(0);
        acc.absolute = Real(0);
      }
      const std::size_t end = std::min(count, (c + 1) * kChunkSize);
      for (std::size_t i = c * kChunkSize; i < end; ++i) {
        const Real t = term(i);
        if (mpfr_add(acc.sum.get(), acc.sum.get(), t.get(), MPFR_RNDN) != 0) acc.exact = false;
        mpfr_add(acc.absolute.get(), acc.absolute.get(), abs(t).get(), MPFR_RNDN);
      }
      return acc;
    });

    bool exact = true;
    Real total, absolute;
    {
      PrecisionScope scope(wide);
      total = Real(0);
      absolute = Real(0);
    }
    for (const auto& p : partials) {
      exact = exact && p.exact;
      if (mpfr_add(total.get(), total.get(), p.sum.get(), MPFR_RNDN) != 0) exact = false;
      mpfr_add(absolute.get(), absolute.get(), p.absolute.get(), MPFR_RNDN);
    }
    if (exact) return {total.rounded(bits), absolute.rounded(bits)};
    wide *= 2;  // exponent spread exceeded the accumulator; widen and redo
  }
}

}  // namespace secz
