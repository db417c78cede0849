#include "secz/laurent.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "secz/asymptotics.hpp"
#include "secz/errors.hpp"
#include "secz/sums.hpp"

namespace secz {

const char* const kC0Extended =
    "0.25163675131270596653346632934264537551475958738"
    "3654550533059356530585960570182311791574050852516"
    "937760994148142";

CoefficientTable::CoefficientTable(std::map<int, std::string> entries, std::string provenance)
    : entries_(std::move(entries)), provenance_(std::move(provenance)) {
  for (const auto& [n, text] : entries_) {
    if (n < 0) throw DomainError("negative coefficient index " + std::to_string(n));
    try {
      (void)Real(text);
    } catch (const std::invalid_argument&) {
      throw ParseError(0, "coefficient C_" + std::to_string(n) + " is not a decimal: " + text);
    }
  }
}

const CoefficientTable& CoefficientTable::reference() {
  static const CoefficientTable table(
      {
          {0, "0.2516367513127059665334663293426453755147595873836"},
          {1, "-0.1300444859118885707285274533988846777460553964263"},
          {2, "0.0824214912550528039526632284933172430791521350021"},
          {3, "-0.0321581827282544905964296099391141952179545405019"},
          {4, "-0.0531801364893419772868761573698112582469915802523"},
          {5, "0.2110321083617385257637243839874627961215847994456"},
          {6, "-0.4933371057135871285817870279321636575675112589435"},
          {7, "0.9731261196976619662852108486791876458635644729040"},
          {8, "-1.8021253179931622367536330625155209079039086674443"},
          {9, "3.7133510644596133576858937986178468541115390150895"},
          {10, "-11.583138616714443418004214394156033470878899508634"},
          {20, "-7.6931751083769270011123002218244304577221846239268e9"},
          {30, "-8.1910409909869137068367900925700302382658971132757e20"},
          {40, "-2.4605043425772457379890548734866774381567481629777e33"},
          {50, "-8.9568228254793711194813512752380738598982095960590e46"},
      },
      "embedded reference table (50 digits)");
  return table;
}

const std::string& CoefficientTable::text(int n) const {
  auto it = entries_.find(n);
  if (it == entries_.end()) throw DomainError("no coefficient C_" + std::to_string(n) + " in table");
  return it->second;
}

Real CoefficientTable::value(int n) const { return Real(text(n)); }

int CoefficientTable::contiguous_max() const {
  int n = -1;
  while (entries_.count(n + 1) != 0) ++n;
  return n;
}

CoefficientTable read_coefficients(std::istream& in, const std::string& provenance) {
  std::map<int, std::string> entries;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    int n = -1;
    std::string value;
    std::string extra;
    if (!(fields >> n >> value) || (fields >> extra) || n < 0)
      throw ParseError(line_number, "expected 'n<TAB>value'");
    try {
      (void)Real(value);
    } catch (const std::invalid_argument&) {
      throw ParseError(line_number, "malformed coefficient");
    }
    if (!entries.emplace(n, value).second)
      throw ParseError(line_number, "duplicate index " + std::to_string(n));
  }
  if (entries.empty()) throw EmptyInputError("coefficient file has no entries");
  return CoefficientTable(std::move(entries), provenance);
}

CoefficientTable load_coefficients(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open coefficient file " + path.string());
  return read_coefficients(in, path.string());
}

void write_coefficients(std::ostream& out, const CoefficientTable& table) {
  out << "# " << table.provenance() << '\n';
  for (const auto& [n, text] : table.entries()) out << n << '\t' << text << '\n';
}

LaurentPoint laurent_eval(const Complex& s, const CoefficientTable& table, int max_n) {
  const Complex w = s - Complex(Real(1));
  if (w.re.is_zero() && w.im.is_zero()) throw DomainError("s = 1 is the double pole of Z(s)");
  const Real radius = abs(w);
  if (!(radius < 2L)) throw DomainError("|s - 1| = " + radius.to_string(12) + " is outside the Laurent disk |s - 1| < 2");
  if (max_n < 0) throw DomainError("max_n must be nonnegative");
  if (max_n > table.contiguous_max())
    throw DomainError("max_n = " + std::to_string(max_n) + " exceeds the contiguous coefficient range 0.." +
                      std::to_string(table.contiguous_max()));

  const Real two_pi = pi() * 2L;
  const Complex inverse = Complex(Real(1)) / w;
  LaurentPoint point;
  point.s = s;
  point.terms_used = max_n + 1;
  point.principal_part = (inverse * inverse) / two_pi - inverse * (log(two_pi) / two_pi);

  Complex power(Real(1));
  Real factorial(1);
  Complex regular;
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) {
      power = power * w;
      factorial *= static_cast<long>(n);
    }
    point.last_term = power * table.value(n) / factorial;
    regular = regular + point.last_term;
  }
  point.regular_part = regular;
  const Real ratio = radius / 2L;
  point.truncation_envelope = abs(point.last_term) * ratio * 2L / (Real(1) - ratio);
  point.value = point.principal_part + point.regular_part;
  return point;
}

DirectValue direct_z_tail(const Real& s, const ZeroTable& table, const Real& cutoff, Parallelism parallelism) {
  if (!(s > 1L)) throw DomainError("direct evaluation requires real s > 1");
  if (!(cutoff > 0L)) throw DomainError("cutoff must be positive");
  SumResult sum = power_sum(table, s, cutoff, parallelism);

  const Real two_pi = pi() * 2L;
  const Real sm1 = s - 1L;
  const Real t_power = pow(cutoff, Real(1) - s);  // T^(1-s)
  DirectValue d;
  d.s = s;
  d.cutoff = cutoff;
  d.zeros_used = sum.terms;
  d.finite_sum = std::move(sum.value);
  d.smooth_tail = (t_power * log(cutoff / two_pi) / sm1 + t_power / (sm1 * sm1)) / two_pi;
  d.boundary_correction = -(q_emp(table, cutoff) * t_power / cutoff);
  d.value = d.finite_sum + d.smooth_tail + d.boundary_correction;

  const BptConstants c;
  d.error_envelope = ((c.a0 + c.a1 * log(cutoff)) * s * 2L + c.a1 + c.a2) * t_power / (cutoff * cutoff);
  return d;
}

}  // namespace secz
