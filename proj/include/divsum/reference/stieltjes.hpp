#pragma once

#include "divsum/numerics/precision.hpp"
#include "divsum/series/family.hpp"

#include <string>

namespace divsum {

enum class ReferenceMethod { quadrature, closed_form };

struct ReferenceValue {
  SeriesFamily family;
  Complex z;
  Complex value;
  int achieved_digits = 0;
  ReferenceMethod method = ReferenceMethod::quadrature;
};

/// f(z) = ∫₀^∞ dμ(t)/(z+t) by quadrature of a smooth substituted integrand:
///   euler              ∫₀^∞ e^{−t}/(z+t) dt
///   superfactorial     ∫₀^∞ u^q e^{−u}/(u²+z) du
///   factorial-squared  4∫₀^∞ u K₀(2u)/(u²+z) du   (z > 0 only)
/// Throws DomainError off the cut plane, ConvergenceError if the quadrature stalls.
ReferenceValue stieltjes_value(const SeriesFamily& family, const Complex& z, const PrecisionContext& ctx);

/// f(z) = −(Γ(q+1)/√z)·Im{(−z)^{q/2} e^{i√z} Γ(−q, i√z)} for the superfactorial
/// family, with the principal branch of (−z)^{q/2}. A cross-check only.
Real closed_form_qclass(const Real& z, const mpq_class& q, const PrecisionContext& ctx);

std::string to_string(ReferenceMethod method);

}  // namespace divsum
