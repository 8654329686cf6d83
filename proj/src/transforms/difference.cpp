#include "divsum/transforms/difference.hpp"

namespace divsum {

std::vector<mpz_class> binomial_row(unsigned long k) {
  std::vector<mpz_class> row(k + 1);
  row[0] = 1;
  for (unsigned long j = 1; j <= k; ++j) {
    row[j] = row[j - 1] * (k - j + 1) / j;
  }
  return row;
}

}  // namespace divsum
