#pragma once

#include "divsum/series/partial_sums.hpp"

#include <gmpxx.h>

#include <cstddef>

namespace divsum {

/// Weniger's δₖ⁽ⁿ⁾(γ) on the sequence f:
///
///   Σⱼ (−1)ʲ C(k,j) (n+j+γ)_{k−1} f_{n+j}/Δf_{n+j}
///   ─────────────────────────────────────────────
///   Σⱼ (−1)ʲ C(k,j) (n+j+γ)_{k−1} /Δf_{n+j}
///
/// evaluated as direct binomial sums with exact rational weights. Needs f
/// through index n+k+1 and γ > 0; k = 0 returns f_n. The sums are formed at the
/// precision of `fs` raised to ctx.for_order(k).
///
/// When the denominator cancels to below a few significant digits the call is
/// repeated at doubled precision (the sequence is rebuilt from its family when
/// it has one). VanishingDenominator reports `pole` if it still vanishes and
/// `precision_exhausted` if the doubled run disagrees.
Complex weniger_delta(const PartialSumSequence& fs, std::size_t n, unsigned long k, const mpq_class& gamma,
                      const PrecisionContext& ctx);

/// δ with a non-rational γ; weights are formed at working precision.
Complex weniger_delta(const PartialSumSequence& fs, std::size_t n, unsigned long k, const Real& gamma,
                      const PrecisionContext& ctx);

/// The weights (−1)ʲ C(k,j) (n+j+γ)_{k−1}, j = 0..k, exactly.
std::vector<mpq_class> delta_weights(std::size_t n, unsigned long k, const mpq_class& gamma);

}  // namespace divsum
