#pragma once

// Ordered tables of nontrivial zero ordinates: loading, writing, desk-scale
// generation and counting queries N(T).

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "secz/parallel.hpp"
#include "secz/real.hpp"

namespace secz {

enum class ZeroOrigin { file, generated };

std::string to_string(ZeroOrigin origin);

/// Immutable, strictly increasing list of positive zero ordinates. Copies and
/// prefixes share storage, so a table can be handed to many threads.
class ZeroTable {
 public:
  /// Validates the invariants (nonempty, every entry > 14, strictly
  /// increasing) and throws on violation.
  ZeroTable(std::vector<Real> gammas, int source_digits, ZeroOrigin origin);

  std::span<const Real> gammas() const noexcept { return {storage_->data(), count_}; }
  std::size_t count() const noexcept { return count_; }
  const Real& operator[](std::size_t i) const { return (*storage_)[i]; }
  const Real& front() const { return (*storage_)[0]; }
  const Real& back() const { return (*storage_)[count_ - 1]; }
  /// Guaranteed-correct fractional digits of every entry.
  int source_digits() const noexcept { return source_digits_; }
  ZeroOrigin origin() const noexcept { return origin_; }

  /// The first `k` ordinates (1 <= k <= count()).
  ZeroTable prefix(std::size_t k) const;

 private:
  ZeroTable(std::shared_ptr<const std::vector<Real>> storage, std::size_t count, int digits, ZeroOrigin origin)
      : storage_(std::move(storage)), count_(count), source_digits_(digits), origin_(origin) {}

  std::shared_ptr<const std::vector<Real>> storage_;
  std::size_t count_;
  int source_digits_;
  ZeroOrigin origin_;
};

inline constexpr const char* kZeroTableGenerator = "secz-zeros/1.0";

/// Reads the plain-text format: one decimal ordinate per line, ascending,
/// '#' lines and blank lines ignored. Precision is inferred from the digit
/// counts, never from the header.
ZeroTable read_zeros(std::istream& in, int min_digits);
ZeroTable load_zeros(const std::filesystem::path& path, int min_digits);

/// Writes a '#' header (count, digits, generator) and one ordinate per line
/// with exactly source_digits() fractional digits.
void write_zeros(const ZeroTable& table, std::ostream& out);
void save_zeros(const ZeroTable& table, const std::filesystem::path& path);

struct GenerateOptions {
  /// Desk-scale cap on the number of zeros.
  std::size_t max_count = 100000;
  /// Initial scan points per Gram interval.
  int grid_density = 1;
  /// Multiplier on the high-precision polish bits.
  int precision_scale = 1;
  Parallelism parallelism{};
};

/// First `count` ordinates, each correct to `target_digits` fractional
/// digits. Zeros are isolated between Gram points (Rosser blocks, adaptive
/// densification), then refined by bisection-safeguarded Illinois steps in
/// extended precision and, when that cannot certify the requested digits,
/// again with MPFR arithmetic. The result is cross-checked against L(T).
ZeroTable generate_zeros(std::size_t count, int target_digits, const GenerateOptions& options = {});

/// N(T) = #{gamma < T}. Throws CoincidentCutoffError if T is within
/// 10^-source_digits of a tabulated ordinate and CoverageError if T lies more
/// than one mean gap past the last entry.
std::size_t count_below(const ZeroTable& table, const Real& cutoff);

/// Mean zero spacing 2 pi / log(T / 2 pi) at height T.
Real mean_gap(const Real& height);

/// Last ordinate plus half the local mean gap.
Real default_cutoff(const ZeroTable& table);

/// Midpoint between the k-th and (k+1)-th ordinate (1-based k < count).
Real midpoint_after(const ZeroTable& table, std::size_t k);

struct CountingCheck {
  double max_abs_q = 0.0;
  double worst_height = 0.0;
  bool within_bound = true;
};

/// Allowed |N(T) - L(T)|: 3 + log(T)/2.
double counting_slack(double height);

/// Checks |N(T) - L(T)| <= counting_slack(T) just below and just above every
/// tabulated ordinate (where N - L is extremal between jumps).
CountingCheck check_counting(const ZeroTable& table);

}  // namespace secz
