#include "doctest.h"
#include "secz/zero_source.hpp"

#include <sstream>

#include "secz/asymptotics.hpp"
#include "secz/errors.hpp"
#include "support.hpp"

using secz::Real;

namespace {

secz::ZeroTable parse(const std::string& text, int min_digits = 1) {
  std::istringstream in(text);
  return secz::read_zeros(in, min_digits);
}

}  // namespace

TEST_SUITE("zero_source") {
  TEST_CASE("reading the three quoted ordinates") {
    const auto table = parse("# header\n14.13472514\n\n21.02203963\n25.01085758\n");
    CHECK(table.count() == 3);
    CHECK(table.source_digits() == 8);
    CHECK(table.origin() == secz::ZeroOrigin::file);
    CHECK(table[1] == Real("21.02203963"));
  }

  TEST_CASE("precision is inferred from the least precise line") {
    CHECK(parse("14.134725\n21.02203963\n").source_digits() == 6);
    CHECK(parse("1.4134725e1\n2.102203963e1\n").source_digits() == 6);
    CHECK_THROWS_AS(parse("14.13\n21.02203963\n", 3), secz::PrecisionError);
    CHECK_THROWS_AS(parse("15\n21\n"), secz::PrecisionError);
  }

  TEST_CASE("reader errors") {
    CHECK_THROWS_AS(parse(""), secz::EmptyInputError);
    CHECK_THROWS_AS(parse("# only comments\n\n"), secz::EmptyInputError);
    try {
      parse("14.13\n21.0x\n");
      FAIL("expected a parse error");
    } catch (const secz::ParseError& e) {
      CHECK(e.line() == 2);
    }
    try {
      parse("21.02\n14.13\n");
      FAIL("expected a monotonicity error");
    } catch (const secz::MonotonicityError& e) {
      CHECK(e.index() == 1);
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("index 1") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("14.5\n14.5\n"), secz::MonotonicityError);
    CHECK_THROWS_AS(parse("3.5\n14.5\n"), secz::Error);
  }

  TEST_CASE("write then read reproduces every entry bit-exactly") {
    const auto& table = test::desk_table();
    std::stringstream buffer;
    secz::write_zeros(table.prefix(500), buffer);
    const auto again = secz::read_zeros(buffer, 1);
    REQUIRE(again.count() == 500);
    CHECK(again.source_digits() == table.source_digits());
    for (std::size_t i = 0; i < again.count(); ++i) CHECK(again[i] == table[i]);
  }

  TEST_CASE("generator reproduces the quoted ordinates") {
    const auto table = secz::generate_zeros(3, 8);
    CHECK(table.origin() == secz::ZeroOrigin::generated);
    CHECK(table[0].to_fixed(8) == "14.13472514");
    CHECK(table[1].to_fixed(8) == "21.02203964");  // 21.022039638..., rounded
    CHECK(test::within(table[1], Real("21.02203963"), test::ten_to(-8)));
    CHECK(test::within(table[2], Real("25.01085758"), test::ten_to(-8)));
  }

  TEST_CASE("generator argument checks") {
    CHECK_THROWS_AS(secz::generate_zeros(0, 8), secz::DomainError);
    CHECK_THROWS_AS(secz::generate_zeros(200001, 8), secz::DomainError);
    CHECK_THROWS(secz::generate_zeros(3, 0));
    CHECK_THROWS_AS(secz::generate_zeros(3, 60), secz::PrecisionError);
  }

  TEST_CASE("generator agrees with itself at doubled precision and grid density") {
    const auto base = secz::generate_zeros(100, 20);
    secz::PrecisionScope wide(2 * secz::kDefaultPrecisionBits);
    secz::GenerateOptions finer;
    finer.grid_density = 2;
    finer.precision_scale = 2;
    const auto oracle = secz::generate_zeros(100, 20, finer);
    REQUIRE(oracle.count() == 100);
    for (std::size_t i = 0; i < 100; ++i) {
      CAPTURE(i);
      CHECK(secz::abs(base[i] - oracle[i]) < test::ten_to(-20));
    }
    // mpmath zetazero(100).
    CHECK(test::within(base[99], Real("236.5242296658162058024755079556629786895"), test::ten_to(-20)));
  }

  TEST_CASE("generate(k) is a prefix of generate(k+1)") {
    const auto shorter = secz::generate_zeros(40, 15);
    const auto longer = secz::generate_zeros(41, 15);
    for (std::size_t i = 0; i < shorter.count(); ++i) CHECK(shorter[i].to_fixed(15) == longer[i].to_fixed(15));
  }

  TEST_CASE("desk table against independently computed ordinates") {
    const auto& table = test::desk_table();
    REQUIRE(table.count() == 10001);
    // mpmath zetazero(n) for n = 1000, 5000, 10000.
    CHECK(test::within(table[999], Real("1419.422480945995686465989038079916819232"), test::ten_to(-12)));
    CHECK(test::within(table[4999], Real("5447.861998301299856412158673464292167683"), test::ten_to(-12)));
    CHECK(test::within(table[9999], Real("9877.782654005501142774099070690123577622"), test::ten_to(-12)));
  }

  TEST_CASE("count_below") {
    const auto table = test::first_three();
    CHECK(secz::count_below(table, Real(10)) == 0);
    CHECK(secz::count_below(table, Real(15)) == 1);
    CHECK(secz::count_below(table, Real(22)) == 2);
    CHECK_THROWS_AS(secz::count_below(table, Real("14.13472514")), secz::CoincidentCutoffError);
    CHECK_THROWS_AS(secz::count_below(table, Real("14.134725145")), secz::CoincidentCutoffError);
    CHECK_THROWS_AS(secz::count_below(table, Real(100)), secz::CoverageError);
  }

  TEST_CASE("count_below jumps by one across each ordinate") {
    const auto& table = test::desk_table();
    const Real eps = test::ten_to(-9);
    for (std::size_t i = 0; i < table.count(); i += 97) {
      CHECK(secz::count_below(table, table[i] - eps) == i);
      CHECK(secz::count_below(table, table[i] + eps) == i + 1);
    }
  }

  TEST_CASE("default cutoff sits inside the next gap") {
    const auto table = test::first_three();
    const Real t = secz::default_cutoff(table);
    const Real last = table.back();
    CHECK(t > last);
    const Real upper("25.0109");
    CHECK(t < upper + secz::pi() / secz::log(upper / (secz::pi() * 2L)));
    CHECK(secz::count_below(table, t) == 3);

    const secz::ZeroTable single({Real("14.134725")}, 6, secz::ZeroOrigin::file);
    const Real t1 = secz::default_cutoff(single);
    CHECK(t1 > Real("14.1347"));
    CHECK(t1 < Real("21.0220"));
  }

  TEST_CASE("midpoints") {
    const auto table = test::first_three();
    CHECK(secz::midpoint_after(table, 1) == (table[0] + table[1]) / 2L);
    CHECK_THROWS_AS(secz::midpoint_after(table, 0), secz::DomainError);
    CHECK_THROWS_AS(secz::midpoint_after(table, 3), secz::DomainError);
  }

  TEST_CASE("counting sanity bound holds across the desk table") {
    const auto check = secz::check_counting(test::desk_table());
    CHECK(check.within_bound);
    CHECK(check.max_abs_q < secz::counting_slack(check.worst_height));
    CHECK(check.max_abs_q > 0.5);  // |Q| is not identically small
  }
}
