#include "divsum/series/family.hpp"

#include "divsum/numerics/errors.hpp"
#include "divsum/numerics/special.hpp"

namespace divsum {

SeriesFamily SeriesFamily::superfactorial(const mpq_class& q) {
  if (q <= -1 || q >= 1) throw DomainError("superfactorial family needs -1 < q < 1, got " + q.get_str());
  return {FamilyKind::superfactorial, q};
}

std::string SeriesFamily::name() const {
  switch (kind) {
    case FamilyKind::euler:
      return "euler";
    case FamilyKind::superfactorial:
      return "superfactorial(q=" + q.get_str() + ")";
    case FamilyKind::factorial_squared:
      return "factorial-squared";
  }
  return "unknown";
}

std::optional<mpz_class> exact_moment(const SeriesFamily& family, unsigned long m) {
  mpz_class out;
  switch (family.kind) {
    case FamilyKind::euler:
      mpz_fac_ui(out.get_mpz_t(), m);
      return out;
    case FamilyKind::factorial_squared:
      mpz_fac_ui(out.get_mpz_t(), m);
      return out * out;
    case FamilyKind::superfactorial:
      if (family.q != 0) return std::nullopt;
      mpz_fac_ui(out.get_mpz_t(), 2 * m);
      return out;
  }
  return std::nullopt;
}

Real moment(const SeriesFamily& family, unsigned long m, const PrecisionContext& ctx) {
  if (auto exact = exact_moment(family, m)) return Real(*exact, ctx.bits());
  // Γ(2m+1+q)
  return gamma_fn(Real(mpq_class(2 * m + 1 + family.q), ctx.bits()), ctx);
}

mpq_class moment_ratio(const SeriesFamily& family, unsigned long m) {
  switch (family.kind) {
    case FamilyKind::euler:
      return m;
    case FamilyKind::factorial_squared:
      return mpz_class(m) * m;
    case FamilyKind::superfactorial:
      return (2 * m - 1 + family.q) * (2 * m + family.q);
  }
  return 0;
}

}  // namespace divsum
