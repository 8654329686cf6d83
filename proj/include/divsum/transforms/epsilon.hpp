#pragma once

#include "divsum/numerics/precision.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace divsum {

namespace detail {

inline bool is_zero(const Real& x) { return x.is_zero(); }
inline bool is_zero(const Complex& x) { return x.is_zero(); }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool is_finite(const Real& x) { return x.is_finite(); }
inline bool is_finite(const Complex& x) { return x.is_finite(); }
inline bool is_finite(const mpq_class&) { return true; }
inline Real reciprocal(const Real& x) { return 1L / x; }
inline Complex reciprocal(const Complex& x) { return Complex(Real(1L, x.precision())) / x; }
inline mpq_class reciprocal(const mpq_class& x) { return 1 / x; }

}  // namespace detail

/// Wynn's ε table. Entry (k, n) is εₖ⁽ⁿ⁾ for k = −1..k_max; an empty optional
/// marks an entry lost to a zero difference and everything computed from it.
template <class T>
class EpsilonTable {
 public:
  EpsilonTable(std::vector<std::vector<std::optional<T>>> columns) : columns_(std::move(columns)) {}

  int max_column() const { return static_cast<int>(columns_.size()) - 2; }
  /// Number of n values available in column k.
  std::size_t column_size(int k) const { return columns_.at(static_cast<std::size_t>(k + 1)).size(); }
  const std::optional<T>& at(int k, std::size_t n) const { return columns_.at(static_cast<std::size_t>(k + 1)).at(n); }
  bool valid(int k, std::size_t n) const { return at(k, n).has_value(); }

 private:
  std::vector<std::vector<std::optional<T>>> columns_;
};

/// ε_{−1}⁽ⁿ⁾ = 0, ε₀⁽ⁿ⁾ = s_n, ε_{k+1}⁽ⁿ⁾ = ε_{k−1}⁽ⁿ⁺¹⁾ + 1/(εₖ⁽ⁿ⁺¹⁾ − εₖ⁽ⁿ⁾).
/// Columns are built up to k_max or until the input is exhausted; ε₂ₖ⁽ⁿ⁾ is the
/// Padé approximant [n+k/k].
template <class T>
EpsilonTable<T> wynn_epsilon(const std::vector<T>& s, int k_max) {
  if (s.empty()) throw std::invalid_argument("wynn_epsilon: empty sequence");
  if (k_max < 0) throw std::invalid_argument("wynn_epsilon: negative order");
  const T zero = s.front() - s.front();
  std::vector<std::vector<std::optional<T>>> columns;
  columns.emplace_back(s.size() + 1, zero);
  columns.emplace_back(s.begin(), s.end());
  for (int k = 0; k < k_max && columns.back().size() > 1; ++k) {
    const auto& prev = columns[columns.size() - 2];
    const auto& cur = columns.back();
    std::vector<std::optional<T>> next(cur.size() - 1);
    for (std::size_t n = 0; n + 1 < cur.size(); ++n) {
      if (!cur[n] || !cur[n + 1] || !prev[n + 1]) continue;
      const T diff = *cur[n + 1] - *cur[n];
      if (detail::is_zero(diff)) continue;
      T value = *prev[n + 1] + detail::reciprocal(diff);
      if (!detail::is_finite(value)) continue;
      next[n] = std::move(value);
    }
    columns.push_back(std::move(next));
  }
  return EpsilonTable<T>(std::move(columns));
}

/// ([k/k], [k+1/k]) = (ε₂ₖ⁽⁰⁾, ε₂ₖ⁽¹⁾); needs at least 2k+2 partial sums.
template <class T>
std::pair<std::optional<T>, std::optional<T>> pade_staircase(const std::vector<T>& s, int k) {
  if (k < 0 || s.size() < static_cast<std::size_t>(2 * k + 2)) {
    throw std::invalid_argument("pade_staircase: need 2k+2 partial sums");
  }
  const std::vector<T> head(s.begin(), s.begin() + 2 * k + 2);
  const auto table = wynn_epsilon(head, 2 * k);
  return {table.at(2 * k, 0), table.at(2 * k, 1)};
}

/// [L/M] of Σ cᵢ xⁱ at x, from the Padé equations solved exactly. Needs
/// coeffs c₀..c_{L+M}. Throws SingularSystem when the denominator system is
/// singular or the denominator vanishes at x.
mpq_class pade_small_oracle(const std::vector<mpq_class>& coeffs, int L, int M, const mpq_class& x);

}  // namespace divsum
