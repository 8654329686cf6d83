#pragma once

#include "divsum/series/family.hpp"

#include <vector>

namespace divsum {

struct CarlemanDiagnostics {
  SeriesFamily family;
  std::vector<Real> terms;         ///< μ_m^{−1/(2m)}, m = 1..M (index m−1)
  std::vector<Real> asymptote;     ///< Stirling limit of each term
  std::vector<Real> partial_sums;  ///< running sums of `terms`
};

/// Carleman series terms for m = 1..m_max. The asymptote is e/(2m) for the
/// superfactorial family, e/m for factorial-squared and √(e/m) for Euler.
CarlemanDiagnostics carleman_terms(const SeriesFamily& family, unsigned long m_max, const PrecisionContext& ctx);

}  // namespace divsum
