#pragma once

#include "divsum/numerics/precision.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace divsum {

/// C(k, j) for j = 0..k.
std::vector<mpz_class> binomial_row(unsigned long k);

namespace detail {

inline Real scaled(const Real& x, const mpz_class& c) { return x * Real(c, x.precision()); }
inline Complex scaled(const Complex& x, const mpz_class& c) { return x * Real(c, x.precision()); }
inline mpq_class scaled(const mpq_class& x, const mpz_class& c) { return x * c; }

}  // namespace detail

/// Δᵏ g(n) = (−1)ᵏ Σ_{j=0}^{k} (−1)ʲ C(k,j) g(n+j). Works for Real, Complex and
/// mpq_class; floating values are combined at their own precision, so callers
/// wanting guard digits supply g at the raised precision.
template <class T>
T forward_difference(const std::vector<T>& g, unsigned long k, std::size_t n) {
  if (n + k >= g.size()) throw std::out_of_range("forward_difference: sequence too short");
  const auto binomials = binomial_row(k);
  T sum = g[n] - g[n];
  for (unsigned long j = 0; j <= k; ++j) {
    const T term = detail::scaled(g[n + j], binomials[j]);
    if ((k - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace divsum
