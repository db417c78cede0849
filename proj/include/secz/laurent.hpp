#pragma once

// Laurent expansion of Z(s) = sum gamma^-s about its double pole at s = 1:
//
//   Z(s) = 1/(2pi (s-1)^2) - log(2pi)/(2pi (s-1)) + sum_n C_n (s-1)^n / n!
//
// with a reference coefficient table and a direct evaluation for real s > 1
// (finite sum over zeros plus the smooth tail beyond the cutoff).

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

#include "secz/parallel.hpp"
#include "secz/real.hpp"
#include "secz/zero_source.hpp"

namespace secz {

/// C_0 to 111 decimals as published alongside the 50-digit table. Whether
/// these digits include a log^2(2pi)/(4pi) offset correction is unresolved;
/// the series evaluation uses the table entry instead.
extern const char* const kC0Extended;

/// Decimal coefficient strings keyed by n. Values are parsed at the caller's
/// working precision so the strings stay the source of truth.
class CoefficientTable {
 public:
  CoefficientTable() = default;
  CoefficientTable(std::map<int, std::string> entries, std::string provenance);

  /// The 15 published values: n = 0..10, 20, 30, 40, 50.
  static const CoefficientTable& reference();

  bool contains(int n) const { return entries_.count(n) != 0; }
  const std::string& text(int n) const;
  Real value(int n) const;
  /// Largest k such that 0..k are all present, or -1 if C_0 is missing.
  int contiguous_max() const;

  const std::map<int, std::string>& entries() const noexcept { return entries_; }
  const std::string& provenance() const noexcept { return provenance_; }

 private:
  std::map<int, std::string> entries_;
  std::string provenance_;
};

/// "n<TAB>value" lines, '#' comments and blank lines ignored.
CoefficientTable read_coefficients(std::istream& in, const std::string& provenance);
CoefficientTable load_coefficients(const std::filesystem::path& path);
void write_coefficients(std::ostream& out, const CoefficientTable& table);

struct LaurentPoint {
  Complex s;
  int terms_used = 0;
  Complex value;
  Complex principal_part;
  /// Regular sum, accumulated in increasing n.
  Complex regular_part;
  /// C_max (s-1)^max / max!, the truncation indicator.
  Complex last_term;
  /// Heuristic size of the omitted terms: the coefficients shrink like
  /// 2^-n n! (radius 2), so 2 |last_term| r / (1 - r) with r = |s-1|/2.
  Real truncation_envelope;
};

/// Strictly 0 < |s-1| < 2 and 0 <= max_n <= table.contiguous_max().
LaurentPoint laurent_eval(const Complex& s, const CoefficientTable& table, int max_n);

struct DirectValue {
  Real s;
  Real cutoff;
  Real value;
  Real finite_sum;
  Real smooth_tail;
  Real boundary_correction;  // -Q(T)/T^s
  /// Heuristic: [2s(A0 + A1 log T) + A1 + A2] / T^(s+1).
  Real error_envelope;
  std::size_t zeros_used = 0;
};

/// sum_{gamma<T} gamma^-s + int_T^inf t^-s dL(t) - Q(T)/T^s, for real s > 1.
DirectValue direct_z_tail(const Real& s, const ZeroTable& table, const Real& cutoff, Parallelism parallelism = {});

}  // namespace secz
