#include "divsum/numerics/precision.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace divsum {

PrecisionContext::PrecisionContext(int digits, int guard_digits) : digits_(digits), guard_digits_(guard_digits) {
  if (digits < kMinDigits) {
    throw std::invalid_argument("precision must be at least " + std::to_string(kMinDigits) + " digits, got " +
                                std::to_string(digits));
  }
  if (guard_digits < 0) throw std::invalid_argument("guard digits must be non-negative");
}

PrecisionContext PrecisionContext::with_guard(int guard) const {
  return PrecisionContext(digits_, std::max(guard_digits_, guard));
}

PrecisionContext PrecisionContext::for_order(int k) const {
  return with_guard(std::max(20, (k + 1) / 2));
}

Real PrecisionContext::epsilon() const {
  return pow(Real(10L, bits()), static_cast<long>(-digits_));
}

}  // namespace divsum
