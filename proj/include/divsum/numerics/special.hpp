#pragma once

#include "divsum/numerics/precision.hpp"

#include <gmpxx.h>

namespace divsum {

/// Rising factorial a(a+1)···(a+j−1); j = 0 gives 1.
Real pochhammer(const Real& a, unsigned long j, const PrecisionContext& ctx);
/// Exact rising factorial over the rationals.
mpq_class pochhammer(const mpq_class& a, unsigned long j);

/// Γ(x). Throws DomainError at non-positive integers.
Real gamma_fn(const Real& x, const PrecisionContext& ctx);

/// K₀(x) = ∫₀^∞ exp(−x cosh s) ds for x > 0. Throws DomainError for x <= 0.
Real bessel_k0(const Real& x, const PrecisionContext& ctx);

/// Upper incomplete gamma Γ(a, w) on the principal branch, by the Legendre
/// continued fraction. Throws DomainError for w = 0 or w on the negative real axis,
/// ConvergenceError if the fraction does not settle.
Complex upper_incomplete_gamma(const Real& a, const Complex& w, const PrecisionContext& ctx);

}  // namespace divsum
