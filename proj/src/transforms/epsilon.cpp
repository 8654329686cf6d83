#include "divsum/transforms/epsilon.hpp"

#include "divsum/numerics/errors.hpp"

#include <utility>

namespace divsum {

mpq_class pade_small_oracle(const std::vector<mpq_class>& coeffs, int L, int M, const mpq_class& x) {
  if (L < 0 || M < 0) throw std::invalid_argument("pade_small_oracle: negative degree");
  if (coeffs.size() < static_cast<std::size_t>(L + M + 1)) {
    throw std::invalid_argument("pade_small_oracle: need L+M+1 coefficients");
  }
  auto c = [&](int i) { return i < 0 ? mpq_class(0) : coeffs[static_cast<std::size_t>(i)]; };

  // Denominator b₀ = 1, b₁..b_M from Σ_{j=1}^{M} b_j c_{L+i−j} = −c_{L+i}, i = 1..M.
  std::vector<std::vector<mpq_class>> a(static_cast<std::size_t>(M), std::vector<mpq_class>(M + 1));
  for (int i = 0; i < M; ++i) {
    for (int j = 0; j < M; ++j) a[i][j] = c(L + i + 1 - (j + 1));
    a[i][M] = -c(L + i + 1);
  }
  for (int col = 0; col < M; ++col) {
    int pivot = col;
    while (pivot < M && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == M) throw SingularSystem("pade_small_oracle: singular denominator system");
    std::swap(a[col], a[pivot]);
    for (int r = 0; r < M; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const mpq_class factor = a[r][col] / a[col][col];
      for (int k = col; k <= M; ++k) a[r][k] -= factor * a[col][k];
    }
  }
  std::vector<mpq_class> b(static_cast<std::size_t>(M + 1));
  b[0] = 1;
  for (int j = 0; j < M; ++j) b[j + 1] = a[j][M] / a[j][j];

  mpq_class numerator = 0, denominator = 0, power = 1;
  for (int i = 0; i <= std::max(L, M); ++i) {
    if (i <= L) {
      mpq_class ai = 0;
      for (int j = 0; j <= std::min(i, M); ++j) ai += b[j] * c(i - j);
      numerator += ai * power;
    }
    if (i <= M) denominator += b[i] * power;
    power *= x;
  }
  if (sgn(denominator) == 0) throw SingularSystem("pade_small_oracle: denominator vanishes at the evaluation point");
  return numerator / denominator;
}

}  // namespace divsum
