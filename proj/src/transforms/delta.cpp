#include "divsum/transforms/delta.hpp"

#include "divsum/numerics/errors.hpp"
#include "divsum/numerics/special.hpp"
#include "divsum/transforms/difference.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace divsum {

namespace {

struct Sums {
  Complex value;
  bool vanished;
};

Sums delta_sums(const PartialSumSequence& fs, std::size_t n, const std::vector<Real>& weights, Bits bits,
                int working_digits) {
  Complex numerator(bits), denominator(bits);
  Real scale(bits);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const Complex inverse = Complex(Real(1L, bits)) / fs.difference(n + j).rounded(bits);
    const Complex weighted = inverse * weights[j];
    denominator += weighted;
    numerator += weighted * fs[n + j].rounded(bits);
    scale += abs(weighted);
  }
  // Fewer than ~3 significant digits survived the cancellation.
  const Real threshold = scale * pow(Real(10L, bits), -static_cast<long>(working_digits - 3));
  if (denominator.is_zero() || abs(denominator) <= threshold) return {Complex(bits), true};
  return {numerator / denominator, false};
}

Complex delta_with_retry(const PartialSumSequence& fs, std::size_t n, unsigned long k,
                         const std::function<std::vector<Real>(Bits)>& weights, const PrecisionContext& ctx) {
  if (fs.size() < n + k + 2) {
    throw std::out_of_range("weniger_delta: need partial sums through index " + std::to_string(n + k + 1));
  }
  if (k == 0) return fs[n];

  const PrecisionContext order_ctx = ctx.for_order(static_cast<int>(k));
  const Bits bits = std::max(fs.precision(), order_ctx.bits());
  const int digits = digits_for_bits(bits);
  Sums first = delta_sums(fs, n, weights(bits), bits, digits);
  if (!first.vanished) return first.value;

  const PrecisionContext doubled(2 * order_ctx.working_digits(), order_ctx.guard_digits());
  const Bits wide = doubled.bits();
  Sums second = [&] {
    if (fs.family) {
      const auto rebuilt = partial_sums(*fs.family, fs.z, n + k + 1, doubled, fs.convention);
      return delta_sums(rebuilt, n, weights(wide), wide, digits_for_bits(wide));
    }
    return delta_sums(fs, n, weights(wide), wide, digits_for_bits(wide));
  }();
  const std::string where = "weniger_delta(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
  if (second.vanished) {
    throw VanishingDenominator(where + ": denominator vanishes at doubled precision; the approximant has a pole here",
                               VanishingDenominator::Cause::pole);
  }
  throw VanishingDenominator(where + ": denominator cancelled at working precision; increase digits",
                             VanishingDenominator::Cause::precision_exhausted);
}

}  // namespace

std::vector<mpq_class> delta_weights(std::size_t n, unsigned long k, const mpq_class& gamma) {
  if (k == 0) return {mpq_class(1)};
  const auto binomials = binomial_row(k);
  std::vector<mpq_class> out;
  out.reserve(k + 1);
  for (unsigned long j = 0; j <= k; ++j) {
    mpq_class w = pochhammer(mpq_class(gamma + static_cast<unsigned long>(n + j)), k - 1) * binomials[j];
    if (j % 2 != 0) w = -w;
    out.push_back(w);
  }
  return out;
}

Complex weniger_delta(const PartialSumSequence& fs, std::size_t n, unsigned long k, const mpq_class& gamma,
                      const PrecisionContext& ctx) {
  if (gamma <= 0) throw DomainError("weniger_delta: gamma must be positive");
  const auto exact = delta_weights(n, k, gamma);
  return delta_with_retry(
      fs, n, k,
      [&](Bits bits) {
        std::vector<Real> out;
        out.reserve(exact.size());
        for (const auto& w : exact) out.emplace_back(w, bits);
        return out;
      },
      ctx);
}

Complex weniger_delta(const PartialSumSequence& fs, std::size_t n, unsigned long k, const Real& gamma,
                      const PrecisionContext& ctx) {
  if (gamma.sign() <= 0) throw DomainError("weniger_delta: gamma must be positive");
  return delta_with_retry(
      fs, n, k,
      [&](Bits bits) {
        const auto binomials = binomial_row(k);
        const PrecisionContext local(std::max(digits_for_bits(bits), PrecisionContext::kMinDigits), 0);
        std::vector<Real> out;
        out.reserve(k + 1);
        for (unsigned long j = 0; j <= k; ++j) {
          const Real base = gamma.rounded(bits) + static_cast<long>(n + j);
          Real w = pochhammer(base, k - 1, local).rounded(bits) * Real(binomials[j], bits);
          if (j % 2 != 0) w = -w;
          out.push_back(std::move(w));
        }
        return out;
      },
      ctx);
}

}  // namespace divsum
