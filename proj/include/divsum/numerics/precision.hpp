#pragma once

#include "divsum/numerics/complex.hpp"
#include "divsum/numerics/real.hpp"

namespace divsum {

/// Working precision shared by every numeric operation.
///
/// Operations compute at `digits + guard_digits` decimal digits. Results that
/// leave the library for reporting are rounded back with round().
class PrecisionContext {
 public:
  static constexpr int kDefaultDigits = 150;
  static constexpr int kDefaultGuard = 20;
  static constexpr int kMinDigits = 50;

  /// Throws std::invalid_argument when digits < 50 or guard_digits < 0.
  explicit PrecisionContext(int digits = kDefaultDigits, int guard_digits = kDefaultGuard);

  int digits() const { return digits_; }
  int guard_digits() const { return guard_digits_; }
  int working_digits() const { return digits_ + guard_digits_; }
  Bits bits() const { return bits_for_digits(working_digits()); }
  Bits output_bits() const { return bits_for_digits(digits_); }

  /// Same digits with at least `guard` guard digits.
  PrecisionContext with_guard(int guard) const;
  /// Context for a transformation of order k: guard >= max(20, ceil(k/2)).
  PrecisionContext for_order(int k) const;
  /// Context with extra digits of precision (guard kept).
  PrecisionContext with_digits(int digits) const { return PrecisionContext(digits, guard_digits_); }

  Real real(long value) const { return Real(value, bits()); }
  Real real(const mpq_class& value) const { return Real(value, bits()); }
  Real round(const Real& x) const { return x.rounded(output_bits()); }
  Complex round(const Complex& z) const { return z.rounded(output_bits()); }
  /// 10^(-digits) at working precision.
  Real epsilon() const;

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int digits_;
  int guard_digits_;
};

}  // namespace divsum
