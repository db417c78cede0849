// secz: command-line front end for the secondary zeta toolkit.
//
// Exit codes: 0 ok, 1 usage error, 2 validation or compute failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "secz/commands.hpp"
#include "secz/errors.hpp"
#include "secz/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

struct Globals {
  unsigned precision = 192;
  unsigned threads = 0;
  std::string format = "json";
  std::string out;
};

void emit(const secz::Report& report, const Globals& g) {
  std::string body;
  if (g.format == "json") body = secz::to_json(report);
  else if (g.format == "csv") body = secz::to_csv(report);
  else body = secz::to_text(report);
  if (g.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw secz::Error("cannot write " + g.out);
  file << body;
}

std::optional<std::string> optional_text(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laurent coefficients of the secondary zeta function from zero tables"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--precision", g.precision, "Working precision in bits")->check(CLI::Range(16u, 1u << 20));
  app.add_option("--threads", g.threads, "Worker threads (0 = auto; results do not depend on it)");

  // zeros gen / verify
  auto* zeros = app.add_subcommand("zeros", "Generate or verify zero tables");
  zeros->require_subcommand(1);
  std::size_t gen_count = 0;
  int gen_digits = 15;
  std::string gen_out;
  int grid_density = 1;
  int precision_scale = 1;
  auto* gen = zeros->add_subcommand("gen", "Compute the first zeros on the critical line");
  gen->add_option("--count", gen_count, "Number of ordinates")->required();
  gen->add_option("--digits", gen_digits, "Correct fractional digits")->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_out, "Output file")->required();
  gen->add_option("--grid-density", grid_density, "Scan points per Gram interval")->check(CLI::PositiveNumber);
  gen->add_option("--precision-scale", precision_scale, "Multiplier on polish precision")->check(CLI::PositiveNumber);

  std::string verify_path;
  int verify_min_digits = 1;
  auto* verify = zeros->add_subcommand("verify", "Validate a zero table");
  verify->add_option("path", verify_path, "Zero table")->required();
  verify->add_option("--min-digits", verify_min_digits, "Required fractional digits");
  verify->add_option("--format", g.format)->check(CLI::IsMember({"json", "csv", "text"}));

  // estimate
  std::string zeros_path;
  std::string n_list = "0,1,2";
  std::string method = "both";
  std::string cutoff_text;
  int min_digits = 1;
  auto* estimate = app.add_subcommand("estimate", "Estimate C_n from a zero table");
  estimate->add_option("--zeros", zeros_path, "Zero table")->required();
  estimate->add_option("--n", n_list, "Comma-separated indices");
  estimate->add_option("--method", method)->check(CLI::IsMember({"plain", "bpt", "both"}));
  estimate->add_option("--T", cutoff_text, "Cutoff (default: last ordinate plus half a mean gap)");
  estimate->add_option("--format", g.format)->check(CLI::IsMember({"json", "csv", "text"}));
  estimate->add_option("--out", g.out, "Write the report here instead of stdout");
  estimate->add_option("--min-digits", min_digits, "Required fractional digits in the table");

  // oracle
  std::string m_list = "0,1,2";
  auto* oracle = app.add_subcommand("oracle", "Exact integral route and identity residuals");
  oracle->add_option("--zeros", zeros_path, "Zero table")->required();
  oracle->add_option("--m", m_list, "Comma-separated indices");
  oracle->add_option("--T", cutoff_text, "Cutoff");
  oracle->add_option("--format", g.format)->check(CLI::IsMember({"json", "csv", "text"}));
  oracle->add_option("--out", g.out);
  oracle->add_option("--min-digits", min_digits);

  // laurent
  std::string s_re;
  std::string s_im = "0";
  int terms = 10;
  std::string coeff_path;
  auto* laurent = app.add_subcommand("laurent", "Evaluate the Laurent expansion of Z(s)");
  laurent->add_option("--s", s_re, "Real part of s")->required();
  laurent->add_option("--im", s_im, "Imaginary part of s");
  laurent->add_option("--terms", terms, "Highest coefficient index used");
  laurent->add_option("--coeffs", coeff_path, "Coefficient file (n<TAB>value)");
  laurent->add_option("--zeros", zeros_path, "Zero table for the direct comparison");
  laurent->add_option("--T", cutoff_text, "Cutoff for the direct comparison");
  laurent->add_option("--format", g.format)->check(CLI::IsMember({"json", "csv", "text"}));
  laurent->add_option("--out", g.out);
  laurent->add_option("--min-digits", min_digits);

  // converge
  int converge_n = 0;
  int checkpoints = 10;
  auto* converge = app.add_subcommand("converge", "Estimates at geometrically spaced zero counts");
  converge->add_option("--n", converge_n, "Coefficient index")->check(CLI::NonNegativeNumber);
  converge->add_option("--zeros", zeros_path, "Zero table")->required();
  converge->add_option("--checkpoints", checkpoints)->check(CLI::PositiveNumber);
  converge->add_option("--out", g.out);
  converge->add_option("--min-digits", min_digits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  auto finish = [&](secz::Report report) {
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    emit(report, g);
  };

  try {
    secz::set_working_precision(g.precision);
    const secz::Parallelism par{g.threads};

    if (*gen) {
      secz::GenerateOptions options;
      options.grid_density = grid_density;
      options.precision_scale = precision_scale;
      options.parallelism = par;
      const secz::ZeroTable table = secz::generate_zeros(gen_count, gen_digits, options);
      secz::save_zeros(table, gen_out);
      std::cerr << "wrote " << table.count() << " zeros to " << gen_out << "\n";
      return kExitOk;
    }
    if (*verify) {
      const secz::ZeroTable table = secz::load_zeros(verify_path, verify_min_digits);
      const secz::Report report = secz::verify_report(table, verify_path);
      finish(report);
      return report.cell(0, "within_bound") == "true" ? kExitOk : kExitFailure;
    }
    if (*estimate) {
      const secz::ZeroTable table = secz::load_zeros(zeros_path, min_digits);
      const secz::Real cutoff = secz::resolve_cutoff(table, optional_text(cutoff_text));
      finish(secz::estimate_report(table, secz::parse_index_list(n_list), secz::parse_method(method), cutoff, par));
      return kExitOk;
    }
    if (*oracle) {
      const secz::ZeroTable table = secz::load_zeros(zeros_path, min_digits);
      const secz::Real cutoff = secz::resolve_cutoff(table, optional_text(cutoff_text));
      secz::OracleOutcome outcome = secz::oracle_report(table, secz::parse_index_list(m_list), cutoff, par);
      finish(outcome.report);
      return outcome.gate_passed ? kExitOk : kExitFailure;
    }
    if (*laurent) {
      const secz::Complex s{secz::Real(s_re), secz::Real(s_im)};
      const secz::CoefficientTable coefficients =
          coeff_path.empty() ? secz::CoefficientTable::reference() : secz::load_coefficients(coeff_path);
      std::optional<secz::ZeroTable> table;
      if (!zeros_path.empty()) table.emplace(secz::load_zeros(zeros_path, min_digits));
      std::optional<secz::Real> cutoff;
      if (!cutoff_text.empty()) cutoff = secz::Real(cutoff_text);
      finish(secz::laurent_report(s, terms, coefficients, table ? &*table : nullptr, cutoff, par));
      return kExitOk;
    }
    if (*converge) {
      g.format = "csv";
      const secz::ZeroTable table = secz::load_zeros(zeros_path, min_digits);
      finish(secz::converge_report(table, converge_n, checkpoints, par));
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: malformed number: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
