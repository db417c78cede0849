#include "doctest.h"
#include "secz/sums.hpp"

#include "secz/errors.hpp"
#include "support.hpp"

using secz::Real;

namespace {

// Terms at working precision, added left to right into an accumulator wide
// enough to be exact, rounded once at the end.
template <class Term>
Real sequential_reference(std::size_t terms, Term term) {
  const auto bits = secz::working_precision();
  Real total;
  {
    secz::PrecisionScope wide(8 * bits);
    total = Real(0);
  }
  for (std::size_t i = 0; i < terms; ++i) {
    const Real t = term(i);
    mpfr_add(total.get(), total.get(), t.get(), MPFR_RNDN);
  }
  return total.rounded(bits);
}

}  // namespace

TEST_SUITE("sums") {
  TEST_CASE("three-term arithmetic") {
    const auto table = test::first_three();
    const Real a("14.13472514"), b("21.02203963"), c("25.01085758");
    const auto harmonic = secz::power_log_sum(table, 0, Real(27));
    CHECK(harmonic.terms == 3);
    CHECK(test::within(harmonic.value, Real(1) / a + Real(1) / b + Real(1) / c, test::ten_to(-55)));
    CHECK(harmonic.value.to_fixed(10).substr(0, 8) == "0.158299");
    const auto squares = secz::power_sum(table, Real(2), Real(27));
    CHECK(test::within(squares.value, Real(1) / (a * a) + Real(1) / (b * b) + Real(1) / (c * c), test::ten_to(-55)));
    const auto logs = secz::power_log_sum(table, 2, Real(22));
    CHECK(logs.terms == 2);
    CHECK(test::within(logs.value, secz::pow(secz::log(a), 2L) / a + secz::pow(secz::log(b), 2L) / b,
                       test::ten_to(-55)));
  }

  TEST_CASE("empty sums below the first ordinate") {
    for (int n : {0, 1, 5}) CHECK(secz::power_log_sum(test::first_three(), n, Real(10)).value.is_zero());
    CHECK(secz::power_sum(test::first_three(), Real("2.5"), Real(10)).value.is_zero());
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(secz::power_log_sum(test::first_three(), -1, Real(27)), secz::DomainError);
    CHECK_THROWS_AS(secz::power_log_sum(test::first_three(), 201, Real(27)), secz::DomainError);
    CHECK_THROWS_AS(secz::power_sum(test::first_three(), Real(1), Real(27)), secz::DomainError);
    CHECK_THROWS_AS(secz::power_log_sum(test::first_three(), 0, Real("21.02203963")), secz::CoincidentCutoffError);
    // 25.01 plus one mean gap is about 29.56.
    CHECK_THROWS_AS(secz::power_log_sum(test::first_three(), 0, Real(30)), secz::CoverageError);
  }

  TEST_CASE("matches a sequential reference bit-exactly") {
    const auto& table = test::desk_table();
    const Real cutoff = secz::default_cutoff(table);
    for (int n : {0, 1, 2}) {
      CAPTURE(n);
      const Real reference = sequential_reference(table.count(), [&](std::size_t i) {
        return n == 0 ? Real(1) / table[i] : secz::pow(secz::log(table[i]), static_cast<long>(n)) / table[i];
      });
      CHECK(secz::power_log_sum(table, n, cutoff).value == reference);
    }
    const Real minus_two(-2);
    const Real squares =
        sequential_reference(table.count(), [&](std::size_t i) { return secz::pow(table[i], minus_two); });
    CHECK(secz::power_sum(table, Real(2), cutoff).value == squares);
  }

  TEST_CASE("worker count does not change a single bit") {
    const auto& table = test::desk_table();
    const Real cutoff = secz::default_cutoff(table);
    for (int n : {0, 1, 2, 7}) {
      const Real one = secz::power_log_sum(table, n, cutoff, {1}).value;
      CHECK(secz::power_log_sum(table, n, cutoff, {2}).value == one);
      CHECK(secz::power_log_sum(table, n, cutoff, {8}).value == one);
    }
    const Real one = secz::power_sum(table, Real("1.5"), cutoff, {1}).value;
    CHECK(secz::power_sum(table, Real("1.5"), cutoff, {2}).value == one);
    CHECK(secz::power_sum(table, Real("1.5"), cutoff, {8}).value == one);
  }

  TEST_CASE("sums over adjacent ranges add up") {
    const auto& table = test::desk_table();
    const Real t1 = secz::midpoint_after(table, 1234);
    const Real t2 = secz::midpoint_after(table, 7000);
    Real middle;
    {
      secz::PrecisionScope wide(4 * secz::working_precision());
      for (std::size_t i = 1234; i < 7000; ++i) middle += secz::log(table[i]) / table[i];
    }
    const Real difference = secz::power_log_sum(table, 1, t2).value - secz::power_log_sum(table, 1, t1).value;
    CHECK(test::within(difference, middle.rounded(secz::working_precision()), test::ten_to(-52)));
  }

  TEST_CASE("harmonic sum increases with each zero") {
    const auto& table = test::desk_table();
    Real previous = secz::power_log_sum(table, 0, Real(14)).value;
    for (std::size_t k = 1; k < 400; ++k) {
      const Real current = secz::power_log_sum(table, 0, secz::midpoint_after(table, k)).value;
      CHECK(current > previous);
      previous = current;
    }
  }

  TEST_CASE("result metadata and error bound") {
    const auto& table = test::desk_table();
    const Real cutoff = secz::midpoint_after(table, 5000);
    const auto r = secz::power_log_sum(table, 2, cutoff);
    CHECK(r.terms == 5000);
    CHECK(r.kind == secz::SumKind::log_power);
    CHECK(r.cutoff == cutoff);
    CHECK(r.accumulation_error_bound > 0L);
    // Dominated by 5000 terms of 12-digit input.
    CHECK(r.accumulation_error_bound < test::ten_to(-7));
  }
}
