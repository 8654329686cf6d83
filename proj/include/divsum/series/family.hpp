#pragma once

#include "divsum/numerics/precision.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>

namespace divsum {

enum class FamilyKind {
  euler,              ///< μ_m = m!
  superfactorial,     ///< μ_m = Γ(2m+1+q), q ∈ (−1, 1)
  factorial_squared,  ///< μ_m = (m!)²
};

/// One of the three Stieltjes moment families.
struct SeriesFamily {
  FamilyKind kind = FamilyKind::euler;
  mpq_class q = 0;  ///< superfactorial only

  static SeriesFamily euler() { return {FamilyKind::euler, 0}; }
  /// Throws DomainError unless −1 < q < 1.
  static SeriesFamily superfactorial(const mpq_class& q);
  static SeriesFamily factorial_squared() { return {FamilyKind::factorial_squared, 0}; }

  /// β of the inverse-factorial model of the converging factor: q/2 or 0.
  mpq_class beta() const { return kind == FamilyKind::superfactorial ? mpq_class(q / 2) : mpq_class(0); }
  /// The usual δ parameter γ = β + 1.
  mpq_class default_gamma() const { return beta() + 1; }
  std::string name() const;

  friend bool operator==(const SeriesFamily& a, const SeriesFamily& b) { return a.kind == b.kind && a.q == b.q; }
};

/// μ_m exactly, when it is an integer (Euler, factorial-squared, superfactorial with integer q).
std::optional<mpz_class> exact_moment(const SeriesFamily& family, unsigned long m);

/// μ_m at working precision.
Real moment(const SeriesFamily& family, unsigned long m, const PrecisionContext& ctx);

/// μ_{m}/μ_{m−1} for m >= 1, exactly.
mpq_class moment_ratio(const SeriesFamily& family, unsigned long m);

}  // namespace divsum
