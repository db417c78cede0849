#pragma once

// Shared fixtures and test-only oracles.

#include <string>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "secz/real.hpp"
#include "secz/zero_source.hpp"

namespace test {

using Big = boost::multiprecision::cpp_bin_float_50;

inline Big to_big(const secz::Real& x) { return Big(x.to_string(60)); }
inline secz::Real from_big(const Big& x) { return secz::Real(x.str(55, std::ios_base::scientific)); }

/// Tanh-sinh quadrature at 50 digits, split at powers of ten so long
/// logarithmic ranges stay well resolved.
template <class F>
Big integrate(F f, Big a, const Big& b) {
  boost::math::quadrature::tanh_sinh<Big> rule;
  Big total = 0;
  while (a < b) {
    Big next = a * 10;
    if (next > b) next = b;
    total += rule.integrate(f, a, next);
    a = next;
  }
  return total;
}

/// First 10001 ordinates at 12 digits, written by the fixture step.
inline const secz::ZeroTable& desk_table() {
  static const secz::ZeroTable table = secz::load_zeros(SECZ_FIXTURE_ZEROS, 9);
  return table;
}

/// The three ordinates commonly quoted to 8 decimals.
inline secz::ZeroTable first_three() {
  return secz::ZeroTable({secz::Real("14.13472514"), secz::Real("21.02203963"), secz::Real("25.01085758")}, 8,
                         secz::ZeroOrigin::file);
}

inline bool within(const secz::Real& a, const secz::Real& b, const secz::Real& tolerance) {
  return secz::abs(a - b) <= tolerance;
}

inline secz::Real ten_to(long k) { return secz::pow(secz::Real(10), k); }

}  // namespace test
