#include "secz/critical_line.hpp"

#include <boost/math/special_functions/lambert_w.hpp>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>

#include "secz/errors.hpp"

namespace secz {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
// Euler-Maclaurin corrections stay below this ratio of the optimal scale, so
// successive correction terms shrink by at least r^2.
constexpr double kCorrectionRatio = 0.75;
constexpr long kThetaTerms = 120;

inline double as_double(long double x) { return static_cast<double>(x); }
inline double as_double(const Real& x) { return x.to_double(); }

// The phase is reduced modulo 2 pi in extended precision; sine and cosine of
// the reduced angle only need double accuracy.
inline void sin_cos(long double x, long double& s, long double& c) {
  constexpr long double kTwoPiHi = 6.283185307179586477025617918810L;  // exact in 64-bit mantissa
  constexpr long double kTwoPiLo = -1.0033115225336664047e-19L;       // 2 pi - kTwoPiHi
  constexpr long double kInvTwoPi = 0.159154943091895335768883763372514362L;
  const auto k = static_cast<long double>(static_cast<long long>(x * kInvTwoPi));
  const double r = static_cast<double>((x - k * kTwoPiHi) - k * kTwoPiLo);
  double sd, cd;
  ::sincos(r, &sd, &cd);
  s = sd;
  c = cd;
}

template <class Scalar>
Scalar make_pi();
template <>
long double make_pi<long double>() { return 3.141592653589793238462643383279502884L; }
template <>
Real make_pi<Real>() { return pi(); }

template <class Scalar>
Scalar from_real(const Real& x);
template <>
long double from_real<long double>(const Real& x) { return x.to_long_double(); }
template <>
Real from_real<Real>(const Real& x) { return x; }

template <class Scalar>
precision_t scalar_bits();
template <>
precision_t scalar_bits<long double>() { return LDBL_MANT_DIG; }
template <>
precision_t scalar_bits<Real>() { return working_precision(); }

// B_2k / (2k)! = (-1)^(k+1) 2 zeta(2k) / (2 pi)^(2k), at the current precision.
Real bernoulli_ratio(unsigned long k) {
  Real r = zeta(2 * k) * 2L / pow(pi() * 2L, static_cast<long>(2 * k));
  return (k % 2 == 1) ? r : -r;
}

// (1 - 2^(1-2k)) |B_2k| / (4k(2k-1)), the theta asymptotic coefficients.
std::vector<Real> theta_coefficients_at(precision_t bits) {
  PrecisionScope scope(bits);
  std::vector<Real> out;
  out.reserve(kThetaTerms);
  Real factorial = 1;
  for (long k = 1; k <= kThetaTerms; ++k) {
    factorial *= (2 * k - 1) * (2 * k);
    const Real b = abs(bernoulli_ratio(static_cast<unsigned long>(k))) * factorial;
    const Real weight = 1L - pow(Real(2), 1 - 2 * k);
    out.push_back(weight * b / (4 * k * (2 * k - 1)));
  }
  return out;
}

const std::vector<Real>& theta_coefficients(precision_t bits) {
  thread_local std::map<precision_t, std::vector<Real>> cache;
  auto it = cache.find(bits);
  if (it == cache.end()) it = cache.emplace(bits, theta_coefficients_at(bits)).first;
  return it->second;
}

template <class Scalar>
Scalar theta_series(const Scalar& t, const std::vector<Scalar>& coefficients, double eps) {
  using std::log;
  const Scalar pi_s = make_pi<Scalar>();
  Scalar result = t / 2L * log(t / (pi_s * 2L)) - t / 2L - pi_s / 8L;
  const Scalar inv_t = Scalar(1) / t;
  const Scalar inv_t2 = inv_t * inv_t;
  Scalar power = inv_t;
  double previous = HUGE_VAL;
  for (const Scalar& c : coefficients) {
    Scalar term = c * power;
    const double magnitude = std::fabs(as_double(term));
    if (magnitude >= previous) break;  // asymptotic series started to diverge
    result += term;
    if (magnitude < eps) break;
    previous = magnitude;
    power *= inv_t2;
  }
  return result;
}

const std::vector<long double>& theta_coefficients_ld() {
  static const std::vector<long double> coefficients = [] {
    std::vector<long double> out;
    for (const Real& c : theta_coefficients_at(128)) out.push_back(c.to_long_double());
    return out;
  }();
  return coefficients;
}

// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi. Below the height where
// the asymptotic series reaches the working precision, Stirling is applied at
// w = z + N and the shift is undone with the arguments of z, ..., z + N - 1.
Real theta_shifted(const Real& t, precision_t bits) {
  const Real x0 = Real(1) / 4L;
  const Real y = t / 2L;
  const double radius = static_cast<double>(bits + 8) * std::log(2.0) / kTwoPi + 2.0;
  const long shift = std::max(0L, static_cast<long>(std::ceil(radius)));

  Real result;
  for (long k = 0; k < shift; ++k) result -= atan(y / (x0 + k));

  const Real x = x0 + shift;
  const Real r2 = x * x + y * y;
  const Real phi = atan(y / x);
  result += (x - Real(1) / 2L) * phi + y * log(r2) / 2L - y;

  // Im sum B_2k / (2k (2k-1) w^(2k-1)), with w^-1 = conj(w) / |w|^2.
  const Real inv_re = x / r2, inv_im = -y / r2;
  const Real sq_re = inv_re * inv_re - inv_im * inv_im, sq_im = inv_re * inv_im * 2L;
  Real p_re = inv_re, p_im = inv_im;
  const Real eps = pow(Real(2), -static_cast<long>(bits) - 8);
  Real factorial = 1;
  for (long k = 1; k <= kThetaTerms; ++k) {
    factorial *= (2 * k - 1) * (2 * k);
    const Real c = bernoulli_ratio(static_cast<unsigned long>(k)) * factorial / ((2 * k) * (2 * k - 1));
    const Real term = c * p_im;
    result += term;
    if (abs(term) < eps) break;
    const Real next_re = p_re * sq_re - p_im * sq_im;
    p_im = p_re * sq_im + p_im * sq_re;
    p_re = next_re;
  }
  return result - y * log(pi());
}

}  // namespace

long double riemann_siegel_theta(long double t) {
  return theta_series(t, theta_coefficients_ld(), LDBL_EPSILON * 1e-3);
}

Real riemann_siegel_theta(const Real& t) {
  const precision_t bits = working_precision();
  // The asymptotic series cannot beat exp(-pi t).
  if (t.to_double() * kTwoPi / 2 < static_cast<double>(bits + 8) * std::log(2.0)) {
    PrecisionScope scope(bits + 32);
    return theta_shifted(t, bits).rounded(bits);
  }
  return theta_series(t, theta_coefficients(working_precision()),
                      std::ldexp(1.0, -static_cast<int>(working_precision()) - 8));
}

long double gram_point(long n) {
  if (n < -1) throw DomainError("Gram points are indexed from -1");
  // theta(t) ~ (t/2) log(t/(2 pi e)) - pi/8 gives the Lambert-W start.
  const double x = (static_cast<double>(n) + 0.125) / std::exp(1.0);
  long double t = kTwoPi * std::exp(1.0) * std::exp(boost::math::lambert_w0(x));
  const long double target = static_cast<long double>(n) * make_pi<long double>();
  for (int iter = 0; iter < 60; ++iter) {
    const long double slope = 0.5L * std::log(t / static_cast<long double>(kTwoPi));
    const long double step = (riemann_siegel_theta(t) - target) / slope;
    t -= step;
    if (std::fabs(step) < 4 * LDBL_EPSILON * t) return t;
  }
  throw ConvergenceError("Gram point iteration did not converge for n=" + std::to_string(n));
}

template <class Scalar>
HardyZ<Scalar>::HardyZ() : bits_(scalar_bits<Scalar>()) {
  max_corrections_ = static_cast<std::size_t>(
      std::ceil(static_cast<double>(bits_) * std::log(2.0) / (-2.0 * std::log(kCorrectionRatio)))) + 4;
  PrecisionScope scope(std::max<precision_t>(bits_, 128));
  bernoulli_ratio_.reserve(max_corrections_ + 1);
  for (std::size_t k = 1; k <= max_corrections_ + 1; ++k)
    bernoulli_ratio_.push_back(from_real<Scalar>(bernoulli_ratio(k)));
  if constexpr (std::is_same_v<Scalar, Real>) {
    for (auto& b : bernoulli_ratio_) b = b.rounded(bits_);
  }
  log_n_.emplace_back(Scalar(0));
  inv_sqrt_n_.emplace_back(Scalar(0));
}

template <class Scalar>
void HardyZ<Scalar>::ensure_terms(std::size_t n) {
  using std::log;
  using std::sqrt;
  for (std::size_t k = log_n_.size(); k <= n; ++k) {
    const Scalar value(static_cast<long>(k));
    log_n_.push_back(log(value));
    inv_sqrt_n_.push_back(Scalar(1) / sqrt(value));
  }
}

template <class Scalar>
HardyValue<Scalar> HardyZ<Scalar>::operator()(const Scalar& t) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  PrecisionScope scope(bits_ < 16 ? 16 : bits_);

  const double td = as_double(t);
  if (!(td >= 1.0)) throw DomainError("Hardy Z evaluation requires t >= 1");
  const double eps = std::ldexp(1.0, -static_cast<int>(bits_));
  const auto terms = static_cast<std::size_t>(
      std::floor((td + 2.0 * static_cast<double>(max_corrections_) + 1.0) / (kTwoPi * kCorrectionRatio))) + 2;
  ensure_terms(terms);

  Scalar re(0), im(0), arg(0), sn(0), cs(0);
  for (std::size_t n = 1; n < terms; ++n) {
    arg = t;
    arg *= log_n_[n];
    sin_cos(arg, sn, cs);
    cs *= inv_sqrt_n_[n];
    sn *= inv_sqrt_n_[n];
    re += cs;
    im -= sn;
  }

  // P = N^(-s) = N^(-1/2) (cos(t log N) - i sin(t log N))
  const Scalar big_n(static_cast<long>(terms));
  arg = t;
  arg *= log_n_[terms];
  sin_cos(arg, sn, cs);
  const Scalar p_re = cs * inv_sqrt_n_[terms];
  const Scalar p_im = -(sn * inv_sqrt_n_[terms]);

  // N^(1-s)/(s-1) = N P / (-1/2 + i t)
  {
    const Scalar half(Scalar(1) / 2L);
    const Scalar denom = half * half + t * t;
    const Scalar np_re = big_n * p_re;
    const Scalar np_im = big_n * p_im;
    // (a + ib)/(-1/2 + it) = (a + ib)(-1/2 - it)/|d|^2
    re += (np_re * (-half) + np_im * t) / denom;
    im += (np_im * (-half) - np_re * t) / denom;
    re += p_re * half;
    im += p_im * half;
  }

  // Corrections: sum_k B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-2k+1), times P.
  const Scalar s_re = Scalar(1) / 2L;
  const Scalar inv_n2 = Scalar(1) / (big_n * big_n);
  Scalar v_re = s_re / big_n;
  Scalar v_im = t / big_n;
  Scalar u_re(0), u_im(0);
  const double scale = 1.0 / std::sqrt(static_cast<double>(terms));
  double truncation = 0.0;
  bool converged = false;
  for (std::size_t k = 1; k <= max_corrections_; ++k) {
    const Scalar& b = bernoulli_ratio_[k - 1];
    u_re += b * v_re;
    u_im += b * v_im;
    // v <- v (s + 2k - 1)(s + 2k) / N^2
    const Scalar a1 = s_re + static_cast<long>(2 * k - 1);
    const Scalar a2 = s_re + static_cast<long>(2 * k);
    const Scalar f_re = a1 * a2 - t * t;
    const Scalar f_im = t * (a1 + a2);
    const Scalar next_re = (v_re * f_re - v_im * f_im) * inv_n2;
    const Scalar next_im = (v_re * f_im + v_im * f_re) * inv_n2;
    v_re = next_re;
    v_im = next_im;
    const double next_mag = std::fabs(as_double(bernoulli_ratio_[k])) *
                            std::hypot(as_double(v_re), as_double(v_im)) * scale;
    const double growth = std::hypot(0.5 + 2.0 * static_cast<double>(k) + 1.0, td) /
                          (0.5 + 2.0 * static_cast<double>(k) + 1.0);
    truncation = next_mag * growth;
    if (truncation < eps * 1e-2) {
      converged = true;
      break;
    }
  }
  if (!converged && truncation > eps) {
    throw ConvergenceError("Euler-Maclaurin corrections did not converge at t=" + std::to_string(td));
  }
  re += u_re * p_re - u_im * p_im;
  im += u_re * p_im + u_im * p_re;

  const Scalar theta = riemann_siegel_theta(t);
  Scalar value = cos(theta) * re - sin(theta) * im;

  // Phase rounding dominates: each of the N terms carries an independent error
  // of about eps * t log n, so the total grows like the root-sum-square.
  const double log_terms = std::log(static_cast<double>(terms));
  double rounding = 2.0 * eps * (td * log_terms + 8.0) * std::sqrt(1.0 + log_terms);
  if constexpr (std::is_same_v<Scalar, long double>) rounding += 4.0 * DBL_EPSILON * std::sqrt(1.0 + log_terms);
  return {std::move(value), Scalar(truncation + rounding)};
}

template class HardyZ<long double>;
template class HardyZ<Real>;

}  // namespace secz
