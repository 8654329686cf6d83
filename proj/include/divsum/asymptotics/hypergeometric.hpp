#pragma once

#include "divsum/numerics/precision.hpp"

#include <gmpxx.h>

#include <cstddef>

namespace divsum {

namespace detail {

inline Real lift(const mpq_class& r, const Real& like) { return Real(r, like.precision()); }
inline Real lift(const mpq_class& r, const Complex& like) { return Real(r, like.precision()); }
inline mpq_class lift(const mpq_class& r, const mpq_class&) { return r; }

}  // namespace detail

/// Terminating ₂F₁(−k, b; c; t) by Horner's rule on the term ratios
/// (j−k)(b+j)/((c+j)(j+1)), which are formed exactly. T is Real, Complex or
/// mpq_class; floating arguments are evaluated at their own precision.
template <class T>
T hyp2f1_terminating(unsigned long k, const mpq_class& b, const mpq_class& c, const T& t) {
  T acc = t - t + detail::lift(mpq_class(1), t);
  for (unsigned long jj = k; jj-- > 0;) {
    const mpq_class j(jj);
    const mpq_class ratio = (j - k) * (b + j) / ((c + j) * (j + 1));
    acc = acc * t * detail::lift(ratio, t) + detail::lift(mpq_class(1), t);
  }
  return acc;
}

/// ₂F₁(−k, k+n+γ−1; n+γ; t).
Real hyp2f1_polynomial(unsigned long k, std::size_t n, const mpq_class& gamma, const Real& t,
                       const PrecisionContext& ctx);
mpq_class hyp2f1_polynomial(unsigned long k, std::size_t n, const mpq_class& gamma, const mpq_class& t);

/// Σ_{j=0}^{k} (−k)_j (k+q/2)_j / ((q/2+1)_j (q/2+3/2)_j (q/2+2)_j j!) (−z/4)^j,
/// summed at ctx.for_order(k) precision.
Complex hyp2f3_polynomial(unsigned long k, const mpq_class& q, const Complex& z, const PrecisionContext& ctx);

}  // namespace divsum
