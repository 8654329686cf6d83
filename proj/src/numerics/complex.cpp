#include "divsum/numerics/complex.hpp"

#include "divsum/numerics/errors.hpp"

namespace divsum {

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  Real r = re * rhs.re - im * rhs.im;
  im = re * rhs.im + im * rhs.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  if (rhs.im.is_zero()) return *this /= rhs.re;
  // Smith's algorithm keeps the intermediate products in range.
  if (abs(rhs.re) >= abs(rhs.im)) {
    const Real ratio = rhs.im / rhs.re;
    const Real denom = rhs.re + rhs.im * ratio;
    Real r = (re + im * ratio) / denom;
    im = (im - re * ratio) / denom;
    re = std::move(r);
  } else {
    const Real ratio = rhs.re / rhs.im;
    const Real denom = rhs.re * ratio + rhs.im;
    Real r = (re * ratio + im) / denom;
    im = (im * ratio - re) / denom;
    re = std::move(r);
  }
  return *this;
}

Complex& Complex::operator+=(const Real& rhs) {
  re += rhs;
  return *this;
}

Complex& Complex::operator-=(const Real& rhs) {
  re -= rhs;
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

Complex& Complex::operator/=(const Real& rhs) {
  re /= rhs;
  im /= rhs;
  return *this;
}

Complex& Complex::operator*=(long rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

Complex& Complex::operator/=(long rhs) {
  re /= rhs;
  im /= rhs;
  return *this;
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Real arg(const Complex& z) {
  Real a = atan2(z.im, z.re);
  if (z.im.is_zero() && z.re.sign() < 0) a = pi(z.precision());
  return a;
}

Complex polar(const Real& modulus, const Real& angle) {
  return {modulus * cos(angle), modulus * sin(angle)};
}

Complex exp(const Complex& z) {
  if (z.im.is_zero()) return Complex(exp(z.re), Real(z.precision()));
  return polar(exp(z.re), z.im);
}

Complex log(const Complex& z) {
  if (z.is_zero()) throw DomainError("log(0)");
  return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
  const Bits bits = z.precision();
  if (z.is_zero()) return Complex(bits);
  // Principal root via |z|: avoids cancellation for either sign of Re z.
  const Real modulus = abs(z);
  if (z.re.sign() >= 0) {
    Real r = sqrt((modulus + z.re) / 2);
    Real i = z.im / (2 * r);
    return {std::move(r), std::move(i)};
  }
  Real i = sqrt((modulus - z.re) / 2);
  if (z.im.sign() < 0) i = -i;
  Real r = z.im / (2 * i);
  return {std::move(r), std::move(i)};
}

Complex pow(const Complex& z, const Real& a) {
  if (z.is_zero()) {
    if (a.sign() > 0) return Complex(std::max(z.precision(), a.precision()));
    throw DomainError("pow(0, a) with a <= 0");
  }
  if (z.im.is_zero() && z.re.sign() > 0) return Complex(pow(z.re, a), Real(std::max(z.precision(), a.precision())));
  const Complex l = log(z);
  return polar(exp(a * l.re), a * l.im);
}

Complex pow(const Complex& z, const Complex& a) {
  if (a.im.is_zero()) return pow(z, a.re);
  return exp(a * log(z));
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(Real(1L, z.precision())) / pow(z, -n);
  Complex result(Real(1L, z.precision()));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Complex sin(const Complex& z) { return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)}; }

Complex cos(const Complex& z) { return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))}; }

Complex sinh(const Complex& z) { return {sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im)}; }

std::string to_string(const Complex& z, int significant) {
  if (z.im.is_zero()) return z.re.to_string(significant);
  std::string im = z.im.to_string(significant);
  if (im.front() != '-') im.insert(im.begin(), '+');
  return z.re.to_string(significant) + im + "i";
}

}  // namespace divsum
