#include "divsum/numerics/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace divsum {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

Bits wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real::Real(Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, kRound);
}

Real::Real(double value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, kRound);
}

Real::Real(const mpz_class& value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

Real::Real(const mpq_class& value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

Real Real::parse(std::string_view text, Bits bits) {
  Real out(bits);
  const std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(out.value_, s.c_str(), &end, 10, kRound);
  if (end == nullptr || end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real&& other) noexcept {
  value_[0] = other.value_[0];
  other.value_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (value_[0]._mpfr_d == nullptr) {
    mpfr_init2(value_, other.precision());
  } else if (precision() != other.precision()) {
    mpfr_set_prec(value_, other.precision());
  }
  mpfr_set(value_, other.value_, kRound);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) std::swap(value_[0], other.value_[0]);
  return *this;
}

Real::~Real() {
  if (value_[0]._mpfr_d != nullptr) mpfr_clear(value_);
}

Real Real::rounded(Bits bits) const {
  Real out(bits);
  mpfr_set(out.value_, value_, kRound);
  return out;
}

long Real::exponent2() const {
  if (!mpfr_regular_p(value_)) return std::numeric_limits<long>::min() / 2;
  return mpfr_get_exp(value_);
}

std::string Real::to_string(int significant) const {
  if (significant < 1) significant = 1;
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", significant - 1, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

Real Real::operator-() const {
  Real out(precision());
  mpfr_neg(out.value_, value_, kRound);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), kRound);
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), kRound);
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), kRound);
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), kRound);
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRound);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRound);
  return *this;
}

Real operator+(Real lhs, long rhs) {
  mpfr_add_si(lhs.value_, lhs.value_, rhs, kRound);
  return lhs;
}

Real operator-(long lhs, const Real& rhs) {
  Real out(rhs.precision());
  mpfr_si_sub(out.value_, lhs, rhs.value_, kRound);
  return out;
}

Real operator/(long lhs, const Real& rhs) {
  Real out(rhs.precision());
  mpfr_si_div(out.value_, lhs, rhs.value_, kRound);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define DIVSUM_UNARY(name, mpfr_fn)                  \
  Real name(const Real& x) {                         \
    Real out(x.precision());                         \
    mpfr_fn(out.raw(), x.raw(), kRound);             \
    return out;                                      \
  }

DIVSUM_UNARY(abs, mpfr_abs)
DIVSUM_UNARY(sqrt, mpfr_sqrt)
DIVSUM_UNARY(exp, mpfr_exp)
DIVSUM_UNARY(log, mpfr_log)
DIVSUM_UNARY(log10, mpfr_log10)
DIVSUM_UNARY(sin, mpfr_sin)
DIVSUM_UNARY(cos, mpfr_cos)
DIVSUM_UNARY(sinh, mpfr_sinh)
DIVSUM_UNARY(cosh, mpfr_cosh)
DIVSUM_UNARY(tgamma, mpfr_gamma)

#undef DIVSUM_UNARY

Real floor(const Real& x) {
  Real out(x.precision());
  mpfr_floor(out.raw(), x.raw());
  return out;
}

Real lgamma(const Real& x) {
  Real out(x.precision());
  int sign = 0;
  mpfr_lgamma(out.raw(), &sign, x.raw(), kRound);
  return out;
}

Real atan2(const Real& y, const Real& x) {
  Real out(wider(y, x));
  mpfr_atan2(out.raw(), y.raw(), x.raw(), kRound);
  return out;
}

Real pow(const Real& base, const Real& exponent) {
  Real out(wider(base, exponent));
  mpfr_pow(out.raw(), base.raw(), exponent.raw(), kRound);
  return out;
}

Real pow(const Real& base, long exponent) {
  Real out(base.precision());
  mpfr_pow_si(out.raw(), base.raw(), exponent, kRound);
  return out;
}

Real hypot(const Real& a, const Real& b) {
  Real out(wider(a, b));
  mpfr_hypot(out.raw(), a.raw(), b.raw(), kRound);
  return out;
}

Real min(const Real& a, const Real& b) { return a < b ? a : b; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pi(Bits bits) {
  Real out(bits);
  mpfr_const_pi(out.raw(), kRound);
  return out;
}

Real euler_gamma(Bits bits) {
  Real out(bits);
  mpfr_const_euler(out.raw(), kRound);
  return out;
}

Bits bits_for_digits(int digits) {
  return static_cast<Bits>(std::ceil(digits * 3.321928094887362)) + 1;
}

int digits_for_bits(Bits bits) { return static_cast<int>(std::floor((bits - 1) * 0.30102999566398120)); }

mpq_class to_rational(const Real& x) {
  if (!x.is_finite()) throw std::domain_error("to_rational: non-finite value");
  mpz_class mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), x.raw());
  mpq_class out(mantissa);
  if (e >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  out.canonicalize();
  return out;
}

}  // namespace divsum
