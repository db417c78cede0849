#include "doctest.h"
#include "secz/integral_oracle.hpp"

#include <random>

#include "secz/asymptotics.hpp"
#include "secz/errors.hpp"
#include "secz/laurent.hpp"
#include "support.hpp"

using secz::Real;
using test::Big;

namespace {

Big l_big(const Big& t) {
  const Big two_pi = 2 * boost::math::constants::pi<Big>();
  return Big(7) / 8 + t / two_pi * log(t / two_pi) - t / two_pi;
}

Big kernel_big(int m, const Big& t) {
  const Big u = log(t);
  const Big lower = m == 0 ? Big(0) : m * pow(u, m - 1);
  return (pow(u, m) - lower) / (t * t);
}

}  // namespace

TEST_SUITE("integral_oracle") {
  TEST_CASE("antiderivative coefficients") {
    const secz::KernelAntiderivative f(4);
    REQUIRE(f.coefficients().size() == 5);
    CHECK(f.coefficients()[0] == 24L);
    CHECK(f.coefficients()[1] == 24L);
    CHECK(f.coefficients()[2] == 12L);
    CHECK(f.coefficients()[3] == 4L);
    CHECK(f.coefficients()[4] == 1L);
    CHECK(secz::KernelAntiderivative(0)(Real(4)) == Real(-1) / 4L);
    CHECK_THROWS_AS(secz::KernelAntiderivative(-1), secz::DomainError);
  }

  TEST_CASE("antiderivatives against quadrature over [1, 1e6]") {
    for (int k : {0, 1, 2, 5, 10}) {
      const secz::KernelAntiderivative f(k);
      auto integrand = [k](const Big& t) { return pow(log(t), k) / (t * t); };
      for (const char* upper : {"3.5", "100", "12345.678", "1000000"}) {
        const Real b(upper);
        const Real closed = f(b) - f(Real(1));
        const Real numeric = test::from_big(test::integrate(integrand, Big(1), test::to_big(b)));
        CAPTURE(k);
        CAPTURE(upper);
        CHECK(secz::abs(closed - numeric) <= secz::abs(numeric) * test::ten_to(-20));
      }
    }
  }

  TEST_CASE("Q kernel integral below the first zero against quadrature") {
    const auto table = test::first_three();
    for (int m : {0, 1, 3}) {
      auto integrand = [m](const Big& t) { return -kernel_big(m, t) * l_big(t); };
      for (const char* upper : {"2", "10", "14"}) {
        const Real numeric = test::from_big(test::integrate(integrand, Big(1), Big(upper)));
        CAPTURE(m);
        CAPTURE(upper);
        CHECK(test::within(secz::integral_q_kernel(table, m, Real(upper)), numeric, test::ten_to(-20)));
      }
    }
  }

  TEST_CASE("Q kernel integral across zeros against quadrature") {
    // Between ordinates N is constant, so each segment is a smooth integral.
    const auto table = test::first_three();
    const Big g[] = {Big("14.13472514"), Big("21.02203963"), Big("25.01085758")};
    for (int m : {0, 2}) {
      auto segment = [m](int count) {
        return [m, count](const Big& t) { return kernel_big(m, t) * (Big(count) - l_big(t)); };
      };
      Big total = test::integrate(segment(0), Big(1), g[0]);
      total += test::integrate(segment(1), g[0], g[1]);
      total += test::integrate(segment(2), g[1], g[2]);
      total += test::integrate(segment(3), g[2], Big(27));
      CAPTURE(m);
      CHECK(test::within(secz::integral_q_kernel(table, m, Real(27)), test::from_big(total), test::ten_to(-20)));
    }
  }

  TEST_CASE("empty interval") {
    for (int m : {0, 1, 4}) CHECK(secz::abs(secz::integral_q_kernel(test::first_three(), m, Real(1))) < test::ten_to(-55));
  }

  TEST_CASE("identity residual vanishes to working precision") {
    const auto hundred = test::desk_table().prefix(100);
    CHECK(secz::abs(secz::stieltjes_identity_residual(hundred, 0, secz::default_cutoff(hundred))) <
          test::ten_to(-40));
    CHECK(secz::abs(secz::stieltjes_identity_residual(test::first_three(), 0, Real(5))) < test::ten_to(-40));

    const auto thousand = test::desk_table().prefix(1000);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(1, 999);
    for (int m = 0; m <= 10; ++m) {
      for (int trial = 0; trial < 3; ++trial) {
        const Real t = secz::midpoint_after(thousand, pick(rng));
        CAPTURE(m);
        CHECK(secz::abs(secz::stieltjes_identity_residual(thousand, m, t)) < test::ten_to(-40));
      }
    }
  }

  TEST_CASE("integral route differs from the plain estimate by the boundary term") {
    const auto& table = test::desk_table();
    for (const Real& t : {secz::midpoint_after(table, 321), secz::default_cutoff(table)}) {
      for (int m : {0, 1, 2, 5}) {
        const auto integral = secz::c_from_integral(table, m, t);
        const auto plain = secz::estimate_plain(m, table, t);
        const auto bpt = secz::estimate_bpt(m, table, t);
        Real boundary = secz::pow(secz::log(t), static_cast<long>(m)) / t * secz::q_emp(table, t);
        if (m % 2 != 0) boundary = -boundary;
        CAPTURE(m);
        CHECK(test::within(plain.value - integral.value, boundary, test::ten_to(-50)));
        // Both rearrangements of the same identity: the integral route is the bpt estimate.
        CHECK(test::within(integral.value, bpt.value, test::ten_to(-50)));
      }
    }
  }

  TEST_CASE("integral route at T = 1 and at desk scale") {
    const auto at_one = secz::c_from_integral(test::first_three(), 0, Real(1));
    CHECK(test::within(at_one.value, Real("0.42333783699382573900"), test::ten_to(-20)));
    const auto& table = test::desk_table();
    const auto e = secz::c_from_integral(table, 0, secz::default_cutoff(table));
    CHECK(secz::matched_digits(e.value, secz::CoefficientTable::reference().value(0)).digits >= 3);
    CHECK(e.method == secz::Method::integral);
    CHECK(e.heuristic_bound);
  }

  TEST_CASE("worker count does not change the integral") {
    const auto& table = test::desk_table();
    const Real t = secz::default_cutoff(table);
    for (int m : {0, 3}) {
      const Real one = secz::integral_q_kernel(table, m, t, {1});
      CHECK(secz::integral_q_kernel(table, m, t, {2}) == one);
      CHECK(secz::integral_q_kernel(table, m, t, {8}) == one);
    }
  }
}
