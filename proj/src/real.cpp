#include "secz/real.hpp"

#include <cctype>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace secz {
namespace {

thread_local precision_t t_working_precision = kDefaultPrecisionBits;

struct MpfrStringDeleter {
  void operator()(char* p) const noexcept { mpfr_free_str(p); }
};

std::string format(const char* fmt, int digits, mpfr_srcptr value) {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, fmt, digits, value) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::unique_ptr<char, MpfrStringDeleter> owned(raw);
  return std::string(owned.get());
}

bool is_decimal_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t mantissa_digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++mantissa_digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++mantissa_digits;
  }
  if (mantissa_digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exponent_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++exponent_digits;
    if (exponent_digits == 0) return false;
  }
  return i == s.size();
}

}  // namespace

precision_t working_precision() noexcept { return t_working_precision; }

void set_working_precision(precision_t bits) {
  if (bits < 16 || bits > (1 << 20))
    throw std::invalid_argument("working precision must be within [16, 2^20] bits");
  t_working_precision = bits;
}

int decimal_digits(precision_t bits) noexcept {
  return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30102999566398120));
}

PrecisionScope::PrecisionScope(precision_t bits) : saved_(t_working_precision) {
  set_working_precision(bits);
}

PrecisionScope::~PrecisionScope() { t_working_precision = saved_; }

Real::Real(std::string_view text) {
  init(working_precision());
  if (!is_decimal_literal(text))
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  const std::string buffer(text);
  mpfr_set_str(value_, buffer.c_str(), 10, MPFR_RNDN);
}

Real Real::rounded(precision_t bits) const {
  PrecisionScope scope(bits);
  Real r;
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string Real::to_fixed(int fraction_digits) const {
  return format("%.*RNf", fraction_digits, value_);
}

std::string Real::to_scientific(int significant_digits) const {
  return format("%.*RNe", significant_digits > 0 ? significant_digits - 1 : 0, value_);
}

std::string Real::to_string(int significant_digits) const {
  return format("%.*RNg", significant_digits, value_);
}

#define SECZ_UNARY(name, fn)            \
  Real name(const Real& x) {            \
    Real r;                             \
    fn(r.get(), x.get(), MPFR_RNDN);    \
    return r;                           \
  }

SECZ_UNARY(abs, mpfr_abs)
SECZ_UNARY(sqrt, mpfr_sqrt)
SECZ_UNARY(log, mpfr_log)
SECZ_UNARY(exp, mpfr_exp)
SECZ_UNARY(sin, mpfr_sin)
SECZ_UNARY(cos, mpfr_cos)
SECZ_UNARY(atan, mpfr_atan)

#undef SECZ_UNARY

Real pi() {
  Real r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r;
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, long exponent) {
  Real r;
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.get(), x.get());
  return r;
}

Real zeta(unsigned long n) {
  Real r;
  mpfr_zeta_ui(r.get(), n, MPFR_RNDN);
  return r;
}

void sin_cos(const Real& x, Real& sine, Real& cosine) {
  mpfr_sin_cos(sine.get(), cosine.get(), x.get(), MPFR_RNDN);
}

Real abs(const Complex& z) {
  Real r;
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

}  // namespace secz
