#pragma once

#include "divsum/numerics/precision.hpp"
#include "divsum/series/family.hpp"
#include "divsum/series/partial_sums.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace divsum {

/// ℰₖ(z,q) = f(z) − δₖ⁽⁰⁾(1+q/2) for the superfactorial family with z > 0, from
///
///   ℰₖ = −(Γ(q+3)/z) · N / ₂F₃(−k, k+q/2; q/2+1, q/2+3/2, q/2+2; −z/4),
///   N  = ∫₀¹ t^{q/2} ₂F₁(−k, k+q/2; 1+q/2; t) Φ(t) dt.
///
/// N is integrated on the rotated contour t = (1+is)^{−2}. Throws DomainError
/// for z <= 0, q outside (−1, 1) or k = 0.
Real exact_error_representation(const Real& z, const mpq_class& q, unsigned long k, const PrecisionContext& ctx);

/// The numerator integral N of exact_error_representation().
Real error_numerator(const Real& z, const mpq_class& q, unsigned long k, const PrecisionContext& ctx);

struct ErrorAsymptotic {
  /// −2π z^{(q−1)/2} exp(−2√2 z^{1/4} √k) sin(2√2 z^{1/4} √k − √z − qπ/4)
  Complex value;
  /// 2π |z|^{(q−1)/2} exp(−2√2 Re{z^{1/4}} √k)
  Real envelope;
};

/// Leading large-k behaviour of ℰₖ with principal branches throughout.
/// Throws DomainError for z on the cut.
ErrorAsymptotic error_asymptotic(const Complex& z, const mpq_class& q, unsigned long k, const PrecisionContext& ctx);

/// The same formula with the constant phase offset −√z − qπ/4 replaced by
/// `offset` (real z only).
Real error_asymptotic_with_offset(const Real& z, const mpq_class& q, unsigned long k, const Real& offset,
                                  const PrecisionContext& ctx);

/// Leading-order ₂F₃ growth
/// Γ(q/2+1)Γ(q/2+3/2)Γ(q/2+2)/(2(2π)^{3/2}) (z/4)^{−3(q+2)/8} k^{−3(q+2)/4} exp(2√2 k^{1/2} z^{1/4}).
Real denominator_envelope(unsigned long k, const mpq_class& q, const Real& z, const PrecisionContext& ctx);

/// Leading-order N: Γ(q/2+1)/2^{2+q/4} k^{−3(2+q)/4} z^{(q−2)/8} sin(2√2 z^{1/4} k^{1/2} − √z − qπ/4).
Real numerator_asymptotic(unsigned long k, const mpq_class& q, const Real& z, const PrecisionContext& ctx);

/// Saddle-point part of the θ-integral: √π z^{(2+q)/8} (2k)^{−1−q/4} sin(…).
/// `amplitude` drops the sine.
Real saddle_contribution(unsigned long k, const mpq_class& q, const Real& z, const PrecisionContext& ctx,
                         bool amplitude = false);

/// Endpoint part: (−1)^k 3√(2π)/(32 k^{5/2}) sin((q+2)π/4).
Real endpoint_contribution(unsigned long k, const mpq_class& q, const PrecisionContext& ctx);

struct ErrorRecord {
  unsigned long k = 0;
  Complex actual_error;  ///< f − δₖ⁽⁰⁾(γ)
  Real envelope;
  Complex phase_estimate;
  std::optional<Real> exact_rep;
};

/// Per-k comparison of the actual δ error with the asymptotic formula.
struct ErrorCurve {
  SeriesFamily family;
  Complex z;
  mpq_class gamma;
  Complex reference;
  int reference_digits = 0;
  std::vector<ErrorRecord> records;
};

/// Error curve for k = k_min..k_max on the raw partial sums of the
/// superfactorial family with γ = 1 + q/2. With `with_exact` (z > 0 only) each
/// record also carries exact_error_representation().
ErrorCurve error_curve(const SeriesFamily& family, const Complex& z, unsigned long k_min, unsigned long k_max,
                       const PrecisionContext& ctx, bool with_exact = false);

/// Least-squares slope of y against x.
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace divsum
