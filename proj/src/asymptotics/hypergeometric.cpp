#include "divsum/asymptotics/hypergeometric.hpp"

namespace divsum {

Real hyp2f1_polynomial(unsigned long k, std::size_t n, const mpq_class& gamma, const Real& t,
                       const PrecisionContext& ctx) {
  const mpq_class c = gamma + static_cast<unsigned long>(n);
  const Bits bits = std::max(t.precision(), ctx.for_order(static_cast<int>(k)).bits());
  return hyp2f1_terminating(k, c + k - 1, c, t.rounded(bits));
}

mpq_class hyp2f1_polynomial(unsigned long k, std::size_t n, const mpq_class& gamma, const mpq_class& t) {
  const mpq_class c = gamma + static_cast<unsigned long>(n);
  return hyp2f1_terminating(k, c + k - 1, c, t);
}

Complex hyp2f3_polynomial(unsigned long k, const mpq_class& q, const Complex& z, const PrecisionContext& ctx) {
  const Bits bits = std::max(z.precision(), ctx.for_order(static_cast<int>(k)).bits());
  const Complex x = -z.rounded(bits) / 4L;
  const mpq_class h = q / 2;
  Complex acc(Real(1L, bits));
  for (unsigned long jj = k; jj-- > 0;) {
    const mpq_class j(jj);
    const mpq_class ratio = (j - k) * (k + h + j) / ((h + 1 + j) * (h + mpq_class(3, 2) + j) * (h + 2 + j) * (j + 1));
    acc = acc * x * Real(ratio, bits) + Real(1L, bits);
  }
  return acc;
}

}  // namespace divsum
