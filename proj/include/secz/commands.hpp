#pragma once

// Report builders behind the command-line tool. Each takes fully parsed
// arguments and returns a Report; argument parsing and exit codes live in the
// tool itself.

#include <optional>
#include <string>
#include <vector>

#include "secz/estimator.hpp"
#include "secz/laurent.hpp"
#include "secz/parallel.hpp"
#include "secz/real.hpp"
#include "secz/report.hpp"
#include "secz/zero_source.hpp"

namespace secz {

enum class MethodChoice { plain, bpt, both };

MethodChoice parse_method(const std::string& text);

/// Parses "0,1,2" into {0, 1, 2}; throws DomainError on malformed lists.
std::vector<int> parse_index_list(const std::string& text);

/// Cutoff from an optional decimal override, else default_cutoff(table).
Real resolve_cutoff(const ZeroTable& table, const std::optional<std::string>& override_text);

Report verify_report(const ZeroTable& table, const std::string& path);

Report estimate_report(const ZeroTable& table, const std::vector<int>& ns, MethodChoice method, const Real& cutoff,
                       Parallelism parallelism, const CoefficientTable& references = CoefficientTable::reference());

struct OracleOutcome {
  Report report;
  bool gate_passed = true;
};

/// Identity residual gate for the oracle command: 10^-(digits - 18) at the
/// working precision, i.e. 1e-40 at 192 bits.
Real oracle_gate();

OracleOutcome oracle_report(const ZeroTable& table, const std::vector<int>& ms, const Real& cutoff,
                            Parallelism parallelism, const CoefficientTable& references = CoefficientTable::reference());

/// `table` is optional; the direct evaluation runs only for real s > 1.
Report laurent_report(const Complex& s, int terms, const CoefficientTable& coefficients, const ZeroTable* table,
                      const std::optional<Real>& cutoff, Parallelism parallelism);

/// Geometric checkpoint counts ending at `total`, starting at min(total, 100).
std::vector<std::size_t> checkpoint_counts(std::size_t total, int checkpoints);

/// One row per checkpoint: the cutoff is the midpoint after the c-th ordinate,
/// or default_cutoff when c is the whole table.
Report converge_report(const ZeroTable& table, int n, int checkpoints, Parallelism parallelism,
                       const CoefficientTable& references = CoefficientTable::reference());

}  // namespace secz
