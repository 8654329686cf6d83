#pragma once

#include "divsum/series/family.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace divsum {

enum class Convention {
  raw,       ///< Σ (−1)^m μ_m z^{−m−1}
  z_scaled,  ///< z times the raw sum
};

/// Partial sums f_0..f_N of a series together with its individual terms.
///
/// terms[0] = f_0 and terms[m] = f_m − f_{m−1}, so Δf_n = terms[n+1] is exact
/// rather than the difference of two nearly equal large numbers.
struct PartialSumSequence {
  std::optional<SeriesFamily> family;  ///< empty for sequences built from raw values
  Complex z;
  Convention convention = Convention::raw;
  std::vector<Complex> terms;
  std::vector<Complex> values;

  std::size_t size() const { return values.size(); }
  const Complex& operator[](std::size_t n) const { return values[n]; }
  /// Δf_n = f_{n+1} − f_n; needs n + 1 < size().
  const Complex& difference(std::size_t n) const { return terms.at(n + 1); }
  Bits precision() const { return values.empty() ? z.precision() : values.front().precision(); }

  /// Wraps an arbitrary sequence; differences are formed by subtraction.
  static PartialSumSequence from_values(std::vector<Complex> values);
};

/// f_n for n = 0..n_max, each obtained from f_{n−1} plus one term.
/// Throws DomainError for z = 0 or z on the negative real axis.
PartialSumSequence partial_sums(const SeriesFamily& family, const Complex& z, std::size_t n_max,
                                const PrecisionContext& ctx, Convention convention = Convention::raw);

/// Throws DomainError unless z is nonzero and off the cut (−∞, 0].
void require_cut_plane(const Complex& z, const char* what);

}  // namespace divsum
