#pragma once

// Thin RAII value type over an MPFR float.
//
// Every freshly produced value (constructors, binary operators, free
// functions) is rounded to the calling thread's working precision. Compound
// assignment keeps the precision of its left operand. Copies replicate the
// source precision exactly, so copying never rounds.

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace secz {

using precision_t = mpfr_prec_t;

inline constexpr precision_t kDefaultPrecisionBits = 192;

/// Working precision (bits) of the calling thread.
precision_t working_precision() noexcept;
void set_working_precision(precision_t bits);

/// Decimal digits carried by `bits` of binary precision, ceil(bits * log10 2).
int decimal_digits(precision_t bits) noexcept;

class PrecisionScope {
 public:
  explicit PrecisionScope(precision_t bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  precision_t saved_;
};

class Real {
 public:
  Real() { init(working_precision()); mpfr_set_zero(value_, +1); }

  template <std::signed_integral I>
  Real(I v) {  // NOLINT(google-explicit-constructor)
    init(working_precision());
    mpfr_set_si(value_, static_cast<long>(v), MPFR_RNDN);
  }
  template <std::unsigned_integral I>
  Real(I v) {  // NOLINT(google-explicit-constructor)
    init(working_precision());
    mpfr_set_ui(value_, static_cast<unsigned long>(v), MPFR_RNDN);
  }
  explicit Real(double v) { init(working_precision()); mpfr_set_d(value_, v, MPFR_RNDN); }
  explicit Real(long double v) { init(working_precision()); mpfr_set_ld(value_, v, MPFR_RNDN); }

  /// Parses a decimal literal (optional sign, fraction, exponent). Throws
  /// std::invalid_argument on anything else.
  explicit Real(std::string_view text);

  Real(const Real& other) {
    init(mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  Real(Real&& other) noexcept {
    init(MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
  }
  Real& operator=(const Real& other) {
    if (this != &other) {
      if (mpfr_get_prec(value_) != mpfr_get_prec(other.value_))
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~Real() { mpfr_clear(value_); }

  /// Same value rounded to `bits`.
  [[nodiscard]] Real rounded(precision_t bits) const;

  precision_t precision() const noexcept { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const noexcept { return mpfr_get_ld(value_, MPFR_RNDN); }
  /// Largest integer not exceeding the value (saturates at long range).
  long floor_long() const noexcept { return mpfr_get_si(value_, MPFR_RNDD); }

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  /// Fixed notation with exactly `fraction_digits` digits after the point.
  std::string to_fixed(int fraction_digits) const;
  /// Scientific notation with `significant_digits` significant digits.
  std::string to_scientific(int significant_digits) const;
  /// Shortest of fixed/scientific carrying `significant_digits` digits.
  std::string to_string(int significant_digits) const;
  /// All digits carried at this value's own precision.
  std::string to_string() const { return to_string(decimal_digits(precision())); }

  Real& operator+=(const Real& o) { mpfr_add(value_, value_, o.value_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(value_, value_, o.value_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(value_, value_, o.value_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(value_, value_, o.value_, MPFR_RNDN); return *this; }
  Real& operator+=(long o) { mpfr_add_si(value_, value_, o, MPFR_RNDN); return *this; }
  Real& operator-=(long o) { mpfr_sub_si(value_, value_, o, MPFR_RNDN); return *this; }
  Real& operator*=(long o) { mpfr_mul_si(value_, value_, o, MPFR_RNDN); return *this; }
  Real& operator/=(long o) { mpfr_div_si(value_, value_, o, MPFR_RNDN); return *this; }

  Real operator-() const {
    Real r;
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN); return r; }
  friend Real operator+(const Real& a, long b) { Real r; mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, long b) { Real r; mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, long b) { Real r; mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, long b) { Real r; mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN); return r; }
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(long a, const Real& b) { Real r; mpfr_si_sub(r.value_, a, b.value_, MPFR_RNDN); return r; }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(long a, const Real& b) { Real r; mpfr_si_div(r.value_, a, b.value_, MPFR_RNDN); return r; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b) {
    if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp_si(a.value_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  friend void swap(Real& a, Real& b) noexcept { mpfr_swap(a.value_, b.value_); }

 private:
  void init(precision_t bits) { mpfr_init2(value_, bits); }

  mpfr_t value_;
};

Real pi();
Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real floor(const Real& x);
Real zeta(unsigned long n);
/// Sine and cosine of `x` written into preallocated outputs (their precision is kept).
void sin_cos(const Real& x, Real& sine, Real& cosine);

/// Minimal complex number over Real, enough for series evaluation.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i = Real()) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
  friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

Real abs(const Complex& z);
inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

}  // namespace secz
