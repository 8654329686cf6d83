#pragma once

#include "divsum/series/family.hpp"

namespace divsum {

struct ConvergingFactor {
  long n = 0;
  Real z;
  Real value;
  /// log10 of the estimated relative error of `value`.
  double log10_error = 0.0;
};

/// φ_n(z) = ∫₀¹ t^{n+q/2−1} Φ(t) dt with Φ(t) = sin(√z(t^{−1/2} − 1))/(2√z).
///
/// With u = t^{−1/2} and then u = 1 + i s the integral becomes
/// (1/√z)·Re ∫₀^∞ (1+is)^{−(2n+q+1)} e^{−√z s} ds, which is free of oscillation.
/// Requires the superfactorial family, z > 0 and n >= 1. Throws DomainError
/// otherwise and ConvergenceError if the quadrature does not converge.
ConvergingFactor converging_factor(const SeriesFamily& family, const Real& z, long n, const PrecisionContext& ctx);

/// φ_n from the truncation error: f − f_{n−1} = (−1)^n z^{−n} μ_n φ_n, where
/// `f` is the value of the Stieltjes function at z and f_{n−1} a raw partial sum.
Real converging_factor_from_value(const SeriesFamily& family, const Real& z, long n, const Real& f,
                                  const PrecisionContext& ctx);

}  // namespace divsum
