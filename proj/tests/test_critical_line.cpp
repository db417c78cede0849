#include "doctest.h"
#include "secz/critical_line.hpp"

#include <cmath>

#include "support.hpp"

using secz::Real;

// Reference values below were computed independently with mpmath
// (siegeltheta, siegelz, grampoint) at 40 digits.

TEST_SUITE("critical_line") {
  TEST_CASE("theta matches an independent library") {
    struct Case {
      const char* t;
      const char* theta;
    };
    const Case cases[] = {{"10", "-3.067074396289895291702013534809485975988"},
                          {"100", "87.97216523178721962548312911374869086857"},
                          {"1000", "2034.546428038031608703345151207598766829"},
                          {"5000.5", "14199.56745913261626211337467766844031411"}};
    for (const auto& c : cases) {
      CAPTURE(c.t);
      CHECK(test::within(secz::riemann_siegel_theta(Real(c.t)), Real(c.theta), test::ten_to(-36)));
      CHECK(std::fabs(static_cast<double>(secz::riemann_siegel_theta(std::stold(c.t)) - std::stold(c.theta))) <
            1e-13);
    }
  }

  TEST_CASE("Hardy Z matches an independent library in both precisions") {
    struct Case {
      const char* t;
      const char* z;
    };
    const Case cases[] = {{"20", "1.147842412185197277635034087179664116973"},
                          {"100.5", "2.272101529181880702632366567358825060731"},
                          {"1000", "0.9977946375215866139860026851881570924102"},
                          {"7000.25", "3.458059843394669966486652230193990031574"}};
    secz::HardyZ<Real> exact;
    secz::HardyZ<long double> fast;
    for (const auto& c : cases) {
      CAPTURE(c.t);
      const auto hp = exact(Real(c.t));
      CHECK(test::within(hp.value, Real(c.z), test::ten_to(-35)));
      const auto ld = fast(std::stold(c.t));
      const double diff = std::fabs(static_cast<double>(ld.value - std::stold(c.z)));
      CHECK(diff < 1e-11);
      CHECK(diff <= static_cast<double>(ld.error_bound) * 10);
    }
  }

  TEST_CASE("Hardy Z vanishes at the first zero") {
    secz::HardyZ<Real> z;
    CHECK(secz::abs(z(Real("14.13472514173469379045725198356247027078")).value) < test::ten_to(-35));
  }

  TEST_CASE("Gram points") {
    CHECK(std::fabs(static_cast<double>(secz::gram_point(-1) - 9.666908056130192141L)) < 1e-12);
    CHECK(std::fabs(static_cast<double>(secz::gram_point(0) - 17.845599540410860817L)) < 1e-12);
    CHECK(std::fabs(static_cast<double>(secz::gram_point(1) - 23.170282701246309279L)) < 1e-12);
    CHECK(std::fabs(static_cast<double>(secz::gram_point(100) - 238.58259051450292333L)) < 1e-11);
    // theta(g_n) = n pi by definition.
    for (long n : {5L, 50L, 500L, 5000L}) {
      const long double g = secz::gram_point(n);
      CHECK(std::fabs(static_cast<double>(secz::riemann_siegel_theta(g) - n * 3.14159265358979323846L)) < 1e-9);
    }
  }
}
