#include "secz/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "secz/asymptotics.hpp"
#include "secz/errors.hpp"
#include "secz/integral_oracle.hpp"

namespace secz {
namespace {

std::string fmt(const Real& x) { return x.to_string(); }

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

void add_common_inputs(Report& report, const ZeroTable& table, const Real& cutoff, Parallelism parallelism) {
  report.inputs.emplace_back("zeros", std::to_string(table.count()));
  report.inputs.emplace_back("zero_digits", std::to_string(table.source_digits()));
  report.inputs.emplace_back("zero_origin", to_string(table.origin()));
  report.inputs.emplace_back("precision_bits", std::to_string(working_precision()));
  report.inputs.emplace_back("threads", std::to_string(parallelism.workers));
  report.inputs.emplace_back("cutoff", fmt(cutoff));
}

// Fractional digits carried by a reference string; exponent forms give none
// we can compare against a fixed-point estimate, so they fall back to the
// significant digits shifted by the exponent.
int reference_digits(const std::string& text) {
  const auto dot = text.find('.');
  const auto e = text.find_first_of("eE");
  const std::size_t mantissa_end = e == std::string::npos ? text.size() : e;
  int fraction = dot == std::string::npos ? 0 : static_cast<int>(mantissa_end - dot - 1);
  if (e != std::string::npos) fraction -= std::stoi(text.substr(e + 1));
  return std::max(fraction, 0);
}

struct Comparison {
  std::string reference = "";
  std::string abs_error = "";
  std::string matched = "";
};

Comparison compare(const Real& estimate, int n, const CoefficientTable& references) {
  Comparison c;
  if (!references.contains(n)) return c;
  const Real reference = references.value(n);
  c.reference = references.text(n);
  c.abs_error = fmt(abs(estimate - reference));
  const int cap = std::min(reference_digits(c.reference), decimal_digits(working_precision()));
  const DigitMatch match = matched_digits(estimate, reference, cap);
  c.matched = std::to_string(match.digits) + (match.sign_mismatch ? " (magnitude)" : "");
  return c;
}

}  // namespace

MethodChoice parse_method(const std::string& text) {
  if (text == "plain") return MethodChoice::plain;
  if (text == "bpt") return MethodChoice::bpt;
  if (text == "both") return MethodChoice::both;
  throw DomainError("unknown method '" + text + "' (expected plain, bpt or both)");
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = -1;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || value < 0 || value > kMaxLogPower)
      throw DomainError("bad index '" + item + "' in list '" + text + "'");
    out.push_back(value);
  }
  if (out.empty()) throw DomainError("empty index list");
  return out;
}

Real resolve_cutoff(const ZeroTable& table, const std::optional<std::string>& override_text) {
  if (!override_text) return default_cutoff(table);
  try {
    return Real(*override_text);
  } catch (const std::invalid_argument&) {
    throw DomainError("cutoff '" + *override_text + "' is not a decimal number");
  }
}

Report verify_report(const ZeroTable& table, const std::string& path) {
  Report report;
  report.command = "zeros verify";
  report.inputs.emplace_back("path", path);
  report.columns = {"count", "digits", "first", "last", "max_abs_q", "worst_height", "within_bound"};
  const CountingCheck check = check_counting(table);
  std::ostringstream q;
  q.precision(6);
  q << check.max_abs_q;
  std::ostringstream h;
  h.precision(12);
  h << check.worst_height;
  report.add_row({std::to_string(table.count()), std::to_string(table.source_digits()),
                  table.front().to_fixed(table.source_digits()), table.back().to_fixed(table.source_digits()),
                  q.str(), h.str(), fmt_bool(check.within_bound)});
  return report;
}

Report estimate_report(const ZeroTable& table, const std::vector<int>& ns, MethodChoice method, const Real& cutoff,
                       Parallelism parallelism, const CoefficientTable& references) {
  Report report;
  report.command = "estimate";
  add_common_inputs(report, table, cutoff, parallelism);
  report.columns = {"n",         "method",      "zeros_used", "sum",       "a_main",    "bpt_correction",
                    "estimate",  "error_bound", "bound_kind", "input_error", "reference", "abs_error",
                    "matched_digits"};
  auto emit = [&](const Estimate& e) {
    const Comparison c = compare(e.value, e.n, references);
    report.add_row({std::to_string(e.n), to_string(e.method), std::to_string(e.zeros_used), fmt(e.sum),
                    fmt(e.smooth_term), fmt(e.boundary_correction), fmt(e.value), fmt(e.error_bound),
                    e.heuristic_bound ? "heuristic" : "explicit", fmt(e.input_error), c.reference, c.abs_error,
                    c.matched});
  };
  for (int n : ns) {
    if (method != MethodChoice::bpt) emit(estimate_plain(n, table, cutoff, parallelism));
    if (method != MethodChoice::plain) emit(estimate_bpt(n, table, cutoff, parallelism));
  }
  if (method != MethodChoice::bpt)
    report.notes.push_back("plain error bounds are a heuristic envelope 2(A0+A1) log^(n+1)(T)/T");
  return report;
}

Real oracle_gate() {
  return pow(Real(10), -static_cast<long>(decimal_digits(working_precision()) - 18));
}

OracleOutcome oracle_report(const ZeroTable& table, const std::vector<int>& ms, const Real& cutoff,
                            Parallelism parallelism, const CoefficientTable& references) {
  OracleOutcome outcome;
  Report& report = outcome.report;
  report.command = "oracle";
  add_common_inputs(report, table, cutoff, parallelism);
  const Real gate = oracle_gate();
  report.inputs.emplace_back("residual_gate", fmt(gate));
  report.columns = {"m",           "identity_residual", "integral",  "integral_estimate", "plain_estimate",
                    "plain_minus_integral", "boundary_term", "reference", "abs_error", "matched_digits"};
  for (int m : ms) {
    const Real residual = stieltjes_identity_residual(table, m, cutoff, parallelism);
    const Estimate via_integral = c_from_integral(table, m, cutoff, parallelism);
    const Estimate plain = estimate_plain(m, table, cutoff, parallelism);
    Real boundary = pow(log(cutoff), static_cast<long>(m)) / cutoff * q_emp(table, cutoff);
    if (m % 2 != 0) boundary = -boundary;
    if (!(abs(residual) < gate)) outcome.gate_passed = false;
    const Comparison c = compare(via_integral.value, m, references);
    report.add_row({std::to_string(m), fmt(residual), fmt(via_integral.sum), fmt(via_integral.value),
                    fmt(plain.value), fmt(plain.value - via_integral.value), fmt(boundary), c.reference,
                    c.abs_error, c.matched});
  }
  if (!outcome.gate_passed) report.notes.push_back("identity residual above the working-precision gate");
  return outcome;
}

Report laurent_report(const Complex& s, int terms, const CoefficientTable& coefficients, const ZeroTable* table,
                      const std::optional<Real>& cutoff, Parallelism parallelism) {
  Report report;
  report.command = "laurent";
  report.inputs.emplace_back("s_re", fmt(s.re));
  report.inputs.emplace_back("s_im", fmt(s.im));
  report.inputs.emplace_back("terms", std::to_string(terms));
  report.inputs.emplace_back("coefficients", coefficients.provenance());
  report.inputs.emplace_back("precision_bits", std::to_string(working_precision()));
  const LaurentPoint point = laurent_eval(s, coefficients, terms);
  report.columns = {"value_re", "value_im", "principal_re", "principal_im", "last_term_abs",
                    "truncation_envelope", "direct",   "direct_envelope", "cutoff", "zeros_used", "gap"};
  std::vector<std::string> row = {fmt(point.value.re), fmt(point.value.im), fmt(point.principal_part.re),
                                  fmt(point.principal_part.im), fmt(abs(point.last_term)),
                                  fmt(point.truncation_envelope)};
  const bool direct = table != nullptr && s.im.is_zero() && s.re > 1L;
  if (direct) {
    const Real t = cutoff ? *cutoff : default_cutoff(*table);
    const DirectValue d = direct_z_tail(s.re, *table, t, parallelism);
    row.insert(row.end(), {fmt(d.value), fmt(d.error_envelope), fmt(t), std::to_string(d.zeros_used),
                           fmt(abs(point.value.re - d.value))});
  } else {
    row.insert(row.end(), {"", "", "", "", ""});
    if (table != nullptr) report.notes.push_back("direct evaluation needs real s > 1; skipped");
  }
  report.add_row(std::move(row));
  return report;
}

std::vector<std::size_t> checkpoint_counts(std::size_t total, int checkpoints) {
  if (checkpoints < 1) throw DomainError("need at least one checkpoint");
  if (total == 0) throw DomainError("empty zero table");
  const std::size_t start = std::min<std::size_t>(total, 100);
  std::vector<std::size_t> counts;
  if (checkpoints == 1) return {total};
  const double ratio = std::log(static_cast<double>(total) / static_cast<double>(start));
  for (int k = 0; k < checkpoints; ++k) {
    const double c = static_cast<double>(start) * std::exp(ratio * k / (checkpoints - 1));
    const auto count = k + 1 == checkpoints ? total : static_cast<std::size_t>(std::llround(c));
    if (counts.empty() || count > counts.back()) counts.push_back(std::min(count, total));
  }
  return counts;
}

Report converge_report(const ZeroTable& table, int n, int checkpoints, Parallelism parallelism,
                       const CoefficientTable& references) {
  Report report;
  report.command = "converge";
  report.inputs.emplace_back("zeros", std::to_string(table.count()));
  report.inputs.emplace_back("n", std::to_string(n));
  report.inputs.emplace_back("checkpoints", std::to_string(checkpoints));
  report.inputs.emplace_back("precision_bits", std::to_string(working_precision()));
  report.columns = {"zeros", "cutoff", "plain", "bpt", "e2_bound", "plain_error", "bpt_error"};
  const bool has_reference = references.contains(n);
  const Real reference = has_reference ? references.value(n) : Real(0);
  for (std::size_t count : checkpoint_counts(table.count(), checkpoints)) {
    const Real cutoff = count < table.count() ? midpoint_after(table, count) : default_cutoff(table);
    const Estimate plain = estimate_plain(n, table, cutoff, parallelism);
    const Estimate bpt = estimate_bpt(n, table, cutoff, parallelism);
    report.add_row({std::to_string(count), fmt(cutoff), fmt(plain.value), fmt(bpt.value), fmt(bpt.error_bound),
                    has_reference ? fmt(abs(plain.value - reference)) : "",
                    has_reference ? fmt(abs(bpt.value - reference)) : ""});
  }
  return report;
}

}  // namespace secz
