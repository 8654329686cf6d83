#pragma once

#include "divsum/numerics/real.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace divsum {

/// Arbitrary-precision complex number with BigReal parts.
struct Complex {
  Real re;
  Real im;

  explicit Complex(Bits bits) : re(bits), im(bits) {}
  Complex(Real real_part) : re(std::move(real_part)), im(re.precision()) {}  // NOLINT(google-explicit-constructor)
  Complex(Real real_part, Real imag_part) : re(std::move(real_part)), im(std::move(imag_part)) {}

  Bits precision() const { return std::max(re.precision(), im.precision()); }
  Complex rounded(Bits bits) const { return {re.rounded(bits), im.rounded(bits)}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator+=(const Real& rhs);
  Complex& operator-=(const Real& rhs);
  Complex& operator*=(const Real& rhs);
  Complex& operator/=(const Real& rhs);
  Complex& operator*=(long rhs);
  Complex& operator/=(long rhs);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator+(Complex a, const Real& b) { return a += b; }
  friend Complex operator-(Complex a, const Real& b) { return a -= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }
  friend Complex operator*(const Real& a, Complex b) { return b *= a; }
  friend Complex operator+(const Real& a, Complex b) { return b += a; }
  friend Complex operator-(const Real& a, const Complex& b) { return -b + a; }
  friend Complex operator*(Complex a, long b) { return a *= b; }
  friend Complex operator/(Complex a, long b) { return a /= b; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

Complex conj(const Complex& z);
/// |z|² without the square root.
Real norm(const Complex& z);
Real abs(const Complex& z);
/// Principal argument in (−π, π]; a negative real axis point with −0 imaginary part maps to +π.
Real arg(const Complex& z);
Complex polar(const Real& modulus, const Real& angle);
Complex exp(const Complex& z);
/// Principal logarithm.
Complex log(const Complex& z);
/// Principal square root.
Complex sqrt(const Complex& z);
/// Principal power exp(a·log z); 0^a is 0 for Re a > 0.
Complex pow(const Complex& z, const Real& a);
Complex pow(const Complex& z, const Complex& a);
Complex pow(const Complex& z, long n);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex sinh(const Complex& z);

/// "re" or "re+imi" in scientific notation.
std::string to_string(const Complex& z, int significant);

}  // namespace divsum
