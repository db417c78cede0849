#include "secz/zero_source.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "secz/asymptotics.hpp"
#include "secz/critical_line.hpp"
#include "secz/errors.hpp"

namespace secz {
namespace {

// Gram-interval subdivision depth before a block is declared unrecoverable.
constexpr int kMaxRefinementLevels = 12;
// Gram points whose signs are computed per parallel batch.
constexpr long kGramBatch = 256;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Fractional digits carried by a decimal literal, accounting for the exponent.
int fractional_digits(std::string_view literal) {
  const auto exp_pos = literal.find_first_of("eE");
  const std::string_view mantissa = literal.substr(0, exp_pos);
  long exponent = 0;
  if (exp_pos != std::string_view::npos) exponent = std::stol(std::string(literal.substr(exp_pos + 1)));
  const auto dot = mantissa.find('.');
  const long digits = dot == std::string_view::npos ? 0 : static_cast<long>(mantissa.size() - dot - 1);
  return static_cast<int>(std::max(0L, digits - exponent));
}

// ---------------------------------------------------------------------------
// Sign evaluation with precision escalation.

HardyZ<long double>& fast_evaluator() {
  thread_local HardyZ<long double> evaluator;
  return evaluator;
}

HardyZ<Real>& precise_evaluator(precision_t bits) {
  thread_local std::map<precision_t, std::unique_ptr<HardyZ<Real>>> evaluators;
  auto& slot = evaluators[bits];
  if (!slot) {
    PrecisionScope scope(bits);
    slot = std::make_unique<HardyZ<Real>>();
  }
  return *slot;
}

// Sign of Z(t); falls back to MPFR when extended precision cannot decide.
int z_sign(long double t) {
  const auto fast = fast_evaluator()(t);
  if (std::fabs(fast.value) > 4 * fast.error_bound) return fast.value > 0 ? 1 : -1;
  for (precision_t bits : {128, 256}) {
    PrecisionScope scope(bits);
    const auto precise = precise_evaluator(bits)(Real(t));
    if (abs(precise.value) > precise.error_bound * 4L) return precise.value.sign();
  }
  return 0;  // t is (numerically) a zero
}

struct Bracket {
  long double lo;
  long double hi;
};

// Sign changes of Z on [a, b] (Gram points, sign already known) after
// splitting into `parts` equal pieces.
std::vector<Bracket> sign_changes(long double a, int sign_a, long double b, int sign_b, int parts) {
  std::vector<Bracket> out;
  long double prev_t = a;
  int prev_s = sign_a;
  for (int i = 1; i <= parts; ++i) {
    const long double t = i == parts ? b : a + (b - a) * static_cast<long double>(i) / parts;
    const int s = i == parts ? sign_b : z_sign(t);
    if (s == 0) {
      // Exact hit: bracket it tightly.
      const long double w = std::max(std::fabs(t) * 64 * LDBL_EPSILON, 1e-15L);
      out.push_back({t - w, t + w});
      prev_t = t + w;
      prev_s = z_sign(prev_t);
      continue;
    }
    if (s != prev_s) out.push_back({prev_t, t});
    prev_t = t;
    prev_s = s;
  }
  return out;
}

// Finds all zeros below Gram points until at least `count` are isolated.
std::vector<Bracket> isolate_zeros(std::size_t count, const GenerateOptions& options) {
  std::vector<Bracket> brackets;
  std::vector<long double> gram;
  std::vector<int> signs;
  long next_index = -1;

  auto extend = [&] {
    const long first = next_index;
    const auto batch = parallel_map<std::pair<long double, int>>(
        kGramBatch, options.parallelism, [first](std::size_t i) {
          const long double g = gram_point(first + static_cast<long>(i));
          return std::pair<long double, int>{g, z_sign(g)};
        });
    for (const auto& [g, s] : batch) {
      gram.push_back(g);
      signs.push_back(s);
    }
    next_index += kGramBatch;
  };

  // Position p in `gram` is Gram index p - 1.
  auto is_good = [&](std::size_t p) {
    const long index = static_cast<long>(p) - 1;
    const int parity = (index % 2 == 0) ? 1 : -1;
    return signs[p] * parity > 0;
  };

  extend();
  if (!is_good(0)) throw ConvergenceError("Gram point g_-1 is not good");
  std::size_t block_start = 0;
  while (brackets.size() < count) {
    std::size_t block_end = block_start + 1;
    for (;;) {
      while (block_end >= gram.size()) extend();
      if (is_good(block_end)) break;
      ++block_end;
    }
    const std::size_t expected = block_end - block_start;

    std::vector<Bracket> found;
    bool isolated = false;
    for (int level = 0; level <= kMaxRefinementLevels && !isolated; ++level) {
      found.clear();
      const int parts = options.grid_density << level;
      for (std::size_t p = block_start; p < block_end; ++p) {
        auto piece = sign_changes(gram[p], signs[p], gram[p + 1], signs[p + 1], parts);
        found.insert(found.end(), piece.begin(), piece.end());
      }
      if (found.size() > expected) {
        throw ConvergenceError("Gram block starting near t=" + std::to_string(static_cast<double>(gram[block_start])) +
                               " holds more sign changes than Rosser's rule allows");
      }
      isolated = found.size() == expected;
    }
    if (!isolated) {
      throw ConvergenceError("missed zeros in Gram block near t=" +
                             std::to_string(static_cast<double>(gram[block_start])));
    }
    brackets.insert(brackets.end(), found.begin(), found.end());
    block_start = block_end;
  }
  brackets.resize(count);
  return brackets;
}

// ---------------------------------------------------------------------------
// Root refinement.

template <class Scalar, class Evaluate>
Scalar illinois(Scalar lo, Scalar hi, Scalar f_lo, Scalar f_hi, const Scalar& tolerance, Evaluate&& f, int max_iter) {
  using std::abs;
  using std::fabs;
  int side = 0;
  Scalar last_width = hi - lo;
  for (int iter = 0; iter < max_iter; ++iter) {
    const Scalar width = hi - lo;
    if (width <= tolerance) break;
    Scalar c = hi - f_hi * width / (f_hi - f_lo);
    // Bisection every third step unless the bracket keeps halving.
    if (iter % 3 == 2 && width > last_width / 2L) c = (lo + hi) / 2L;
    if (iter % 3 == 2) last_width = width;
    if (!(c > lo && c < hi)) c = (lo + hi) / 2L;
    const Scalar fc = f(c);
    if (fc == Scalar(0)) return c;
    if ((fc > Scalar(0)) == (f_hi > Scalar(0))) {
      hi = c;
      f_hi = fc;
      if (side == -1) f_lo /= 2L;
      side = -1;
    } else {
      lo = c;
      f_lo = fc;
      if (side == 1) f_hi /= 2L;
      side = 1;
    }
  }
  return (lo + hi) / 2L;
}

struct FastRoot {
  long double root;
  long double uncertainty;
};

FastRoot refine_fast(const Bracket& b) {
  auto& z = fast_evaluator();
  const auto v_lo = z(b.lo);
  const auto v_hi = z(b.hi);
  long double error = std::max(v_lo.error_bound, v_hi.error_bound);
  const long double tolerance = std::max(b.hi * 8 * LDBL_EPSILON, 1e-300L);
  long double lo = b.lo, hi = b.hi;
  long double f_lo = v_lo.value, f_hi = v_hi.value;
  if ((f_lo > 0) == (f_hi > 0)) {
    // Signs were decided at higher precision; only the midpoint is usable.
    return {(lo + hi) / 2, (hi - lo)};
  }
  long double root = illinois<long double>(lo, hi, f_lo, f_hi, tolerance, [&](long double t) {
    const auto v = z(t);
    error = std::max(error, v.error_bound);
    return v.value;
  }, 200);
  // Local slope from a symmetric difference around the root.
  const long double h = std::max(1e-6L, root * 1e-9L);
  const long double slope = std::fabs(z(root + h).value - z(root - h).value) / (2 * h);
  const long double uncertainty = tolerance + (slope > 0 ? 2 * error / slope : HUGE_VALL);
  return {root, uncertainty};
}

Real refine_precise(const FastRoot& start, const Bracket& outer, int target_digits, int precision_scale) {
  const double height = static_cast<double>(start.root);
  const auto bits = static_cast<precision_t>(
      std::ceil((target_digits + 6 + std::log10(height)) * 3.3219280948873623) * precision_scale + 16);
  PrecisionScope scope(bits);
  auto& z = precise_evaluator(bits);
  const Real root(start.root);
  Real half_width(std::max(static_cast<double>(start.uncertainty) * 16, height * 1e-17));
  Real lo, hi, f_lo, f_hi;
  for (;;) {
    lo = root - half_width;
    hi = root + half_width;
    if (lo < Real(outer.lo) || hi > Real(outer.hi)) {
      lo = Real(outer.lo);
      hi = Real(outer.hi);
    }
    f_lo = z(lo).value;
    f_hi = z(hi).value;
    if (f_lo.sign() * f_hi.sign() < 0) break;
    if (lo == Real(outer.lo) && hi == Real(outer.hi)) {
      throw ConvergenceError("lost sign change while refining zero near t=" + std::to_string(height));
    }
    half_width *= 16L;
  }
  const Real tolerance = pow(Real(10), -static_cast<long>(target_digits + 2));
  return illinois<Real>(lo, hi, f_lo, f_hi, tolerance, [&](const Real& t) { return z(t).value; },
                        4 * static_cast<int>(bits));
}

}  // namespace

std::string to_string(ZeroOrigin origin) { return origin == ZeroOrigin::file ? "file" : "generated"; }

ZeroTable::ZeroTable(std::vector<Real> gammas, int source_digits, ZeroOrigin origin)
    : count_(gammas.size()), source_digits_(source_digits), origin_(origin) {
  if (gammas.empty()) throw EmptyInputError("zero table is empty");
  if (source_digits <= 0) throw PrecisionError("source digits must be positive");
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (!(gammas[i] > 14L))
      throw DomainError("ordinate at index " + std::to_string(i) + " is not above 14");
    if (i > 0 && !(gammas[i - 1] < gammas[i]))
      throw MonotonicityError(i, 0, "monotonicity violation at index " + std::to_string(i));
  }
  storage_ = std::make_shared<const std::vector<Real>>(std::move(gammas));
}

ZeroTable ZeroTable::prefix(std::size_t k) const {
  if (k == 0 || k > count_) throw DomainError("prefix length must be in [1, count]");
  return ZeroTable(storage_, k, source_digits_, origin_);
}

ZeroTable read_zeros(std::istream& in, int min_digits) {
  std::vector<Real> gammas;
  std::vector<std::size_t> lines;
  int digits = -1;
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    Real value;
    try {
      value = Real(line);
    } catch (const std::invalid_argument&) {
      throw ParseError(line_number, "malformed ordinate '" + std::string(line) + "'");
    }
    if (!(value > 14L)) throw ParseError(line_number, "ordinate not above 14");
    if (!gammas.empty() && !(gammas.back() < value)) {
      throw MonotonicityError(gammas.size(), line_number,
                              "monotonicity violation at index " + std::to_string(gammas.size()) + " (line " +
                                  std::to_string(line_number) + ")");
    }
    const int d = fractional_digits(line);
    digits = digits < 0 ? d : std::min(digits, d);
    gammas.push_back(std::move(value));
  }
  if (gammas.empty()) throw EmptyInputError("zero table is empty");
  if (digits < min_digits) {
    throw PrecisionError("zero table carries " + std::to_string(digits) + " fractional digits, " +
                         std::to_string(min_digits) + " required");
  }
  if (digits == 0) throw PrecisionError("zero table carries no fractional digits");
  return ZeroTable(std::move(gammas), digits, ZeroOrigin::file);
}

ZeroTable load_zeros(const std::filesystem::path& path, int min_digits) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open zero table '" + path.string() + "'");
  return read_zeros(in, min_digits);
}

void write_zeros(const ZeroTable& table, std::ostream& out) {
  out << "# secz zero table\n"
      << "# count: " << table.count() << '\n'
      << "# digits: " << table.source_digits() << '\n'
      << "# generator: " << kZeroTableGenerator << '\n';
  for (const Real& g : table.gammas()) out << g.to_fixed(table.source_digits()) << '\n';
}

void save_zeros(const ZeroTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write zero table '" + path.string() + "'");
  write_zeros(table, out);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

ZeroTable generate_zeros(std::size_t count, int target_digits, const GenerateOptions& options) {
  if (count == 0) throw DomainError("zero count must be positive");
  if (count > options.max_count) {
    throw DomainError("zero count " + std::to_string(count) + " exceeds the desk-scale cap of " +
                      std::to_string(options.max_count));
  }
  if (target_digits <= 0) throw DomainError("target digits must be positive");
  if (options.grid_density < 1 || options.precision_scale < 1) throw DomainError("invalid generator options");
  // Heights stay below ~1e5 at the cap, i.e. five integer digits plus guards.
  if (target_digits + 8 > decimal_digits(working_precision())) {
    throw PrecisionError("target of " + std::to_string(target_digits) + " digits exceeds the working precision of " +
                         std::to_string(working_precision()) + " bits");
  }

  const auto brackets = isolate_zeros(count, options);
  const double required = std::pow(10.0, -target_digits) / 4.0;
  auto gammas = parallel_map<Real>(brackets.size(), options.parallelism, [&](std::size_t i) {
    const FastRoot fast = refine_fast(brackets[i]);
    if (options.precision_scale == 1 && fast.uncertainty <= required) return Real(fast.root);
    return refine_precise(fast, brackets[i], target_digits, options.precision_scale);
  });

  ZeroTable table(std::move(gammas), target_digits, ZeroOrigin::generated);
  const CountingCheck check = check_counting(table);
  if (!check.within_bound) {
    throw ConvergenceError("generated zeros violate the N(T) - L(T) sanity bound near T=" +
                           std::to_string(check.worst_height));
  }
  return table;
}

std::size_t count_below(const ZeroTable& table, const Real& cutoff) {
  const auto gammas = table.gammas();
  const auto it = std::lower_bound(gammas.begin(), gammas.end(), cutoff,
                                   [](const Real& g, const Real& t) { return g < t; });
  const auto index = static_cast<std::size_t>(it - gammas.begin());

  const Real tolerance = pow(Real(10), -static_cast<long>(table.source_digits()));
  if ((index < gammas.size() && abs(gammas[index] - cutoff) <= tolerance) ||
      (index > 0 && abs(cutoff - gammas[index - 1]) <= tolerance)) {
    throw CoincidentCutoffError("cutoff " + cutoff.to_string(30) + " coincides with a tabulated ordinate");
  }
  if (index == gammas.size() && cutoff > table.back() + mean_gap(table.back())) {
    throw CoverageError("cutoff " + cutoff.to_string(30) + " lies beyond the zero table's coverage");
  }
  return index;
}

Real mean_gap(const Real& height) { return pi() * 2L / log(height / (pi() * 2L)); }

Real default_cutoff(const ZeroTable& table) { return table.back() + mean_gap(table.back()) / 2L; }

Real midpoint_after(const ZeroTable& table, std::size_t k) {
  if (k == 0 || k >= table.count()) throw DomainError("midpoint index must be in [1, count)");
  return (table[k - 1] + table[k]) / 2L;
}

double counting_slack(double height) { return 3.0 + 0.5 * std::log(height); }

CountingCheck check_counting(const ZeroTable& table) {
  CountingCheck result;
  auto consider = [&](double q, double height) {
    if (std::fabs(q) > result.max_abs_q) {
      result.max_abs_q = std::fabs(q);
      result.worst_height = height;
    }
    if (std::fabs(q) > counting_slack(height)) result.within_bound = false;
  };
  const auto gammas = table.gammas();
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    const double g = gammas[k].to_double();
    const double l = l_main(g);
    consider(static_cast<double>(k) - l, g);      // just below gamma_(k+1)
    consider(static_cast<double>(k + 1) - l, g);  // just above
  }
  const double end = (table.back() + mean_gap(table.back())).to_double();
  consider(static_cast<double>(gammas.size()) - l_main(end), end);
  return result;
}

}  // namespace secz
