#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace divsum {

using Bits = mpfr_prec_t;

/// Arbitrary-precision real number backed by an MPFR value.
///
/// Every Real carries its own precision. Binary operations produce a result at
/// the larger of the operand precisions, rounding to nearest. Moved-from values
/// may only be destroyed or assigned to.
class Real {
 public:
  explicit Real(Bits bits);
  Real(long value, Bits bits);
  Real(int value, Bits bits) : Real(static_cast<long>(value), bits) {}
  Real(double value, Bits bits);
  Real(const mpz_class& value, Bits bits);
  Real(const mpq_class& value, Bits bits);
  /// Parses a decimal literal ("1.25", "-3e-7"). Throws std::invalid_argument.
  static Real parse(std::string_view text, Bits bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Bits precision() const { return mpfr_get_prec(value_); }
  /// Value rounded to a new precision.
  Real rounded(Bits bits) const;

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; zero maps to a very small value.
  long exponent2() const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }
  /// Scientific notation with `significant` digits, e.g. "1.66017720e+00".
  std::string to_string(int significant) const;

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator*(long lhs, Real rhs) { return rhs *= lhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }
  friend Real operator+(Real lhs, long rhs);
  friend Real operator+(long lhs, Real rhs) { return std::move(rhs) + lhs; }
  friend Real operator-(Real lhs, long rhs) { return std::move(lhs) + (-rhs); }
  friend Real operator-(long lhs, const Real& rhs);
  friend Real operator/(long lhs, const Real& rhs);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real hypot(const Real& a, const Real& b);
Real floor(const Real& x);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
/// Γ(x) via MPFR; callers check poles.
Real tgamma(const Real& x);
/// ln|Γ(x)|.
Real lgamma(const Real& x);

Real pi(Bits bits);
Real euler_gamma(Bits bits);

/// Number of bits needed to carry `digits` decimal digits.
Bits bits_for_digits(int digits);
/// Decimal digits carried by `bits`.
int digits_for_bits(Bits bits);

/// Exact binary value of x as a rational (x must be finite).
mpq_class to_rational(const Real& x);

}  // namespace divsum
