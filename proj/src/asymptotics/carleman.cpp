#include "divsum/asymptotics/carleman.hpp"

#include "divsum/numerics/errors.hpp"

namespace divsum {

CarlemanDiagnostics carleman_terms(const SeriesFamily& family, unsigned long m_max, const PrecisionContext& ctx) {
  if (m_max < 1) throw DomainError("carleman_terms: m_max must be at least 1");
  const Bits bits = ctx.bits();
  const Real e = exp(Real(1L, bits));
  CarlemanDiagnostics out{family, {}, {}, {}};
  Real running(bits);
  for (unsigned long m = 1; m <= m_max; ++m) {
    const Real mm(static_cast<long>(m), bits);
    Real log_moment(bits);
    Real asymptote(bits);
    switch (family.kind) {
      case FamilyKind::euler:
        log_moment = lgamma(mm + 1L);
        asymptote = sqrt(e / mm);
        break;
      case FamilyKind::factorial_squared:
        log_moment = 2L * lgamma(mm + 1L);
        asymptote = e / mm;
        break;
      case FamilyKind::superfactorial:
        log_moment = lgamma(Real(mpq_class(2 * m + 1 + family.q), bits));
        asymptote = e / (2L * mm);
        break;
    }
    Real term = exp(-log_moment / (2L * mm));
    running += term;
    out.terms.push_back(std::move(term));
    out.asymptote.push_back(std::move(asymptote));
    out.partial_sums.push_back(running);
  }
  return out;
}

}  // namespace divsum
