#include "divsum/series/converging_factor.hpp"

#include "divsum/numerics/errors.hpp"
#include "divsum/reference/quadrature.hpp"
#include "divsum/series/partial_sums.hpp"

namespace divsum {

ConvergingFactor converging_factor(const SeriesFamily& family, const Real& z, long n, const PrecisionContext& ctx) {
  if (family.kind != FamilyKind::superfactorial) {
    throw DomainError("converging_factor: only the superfactorial family has the Φ(t) representation");
  }
  if (z.sign() <= 0) throw DomainError("converging_factor: z must be positive");
  if (n < 1) throw DomainError("converging_factor: n must be at least 1");

  const Bits bits = ctx.bits();
  const Real root = sqrt(z.rounded(bits));
  const Real exponent = -Real(mpq_class(2 * n + 1 + family.q), bits);

  auto spec = quadrature::QuadratureSpec::semi_infinite(Real(bits), ctx.digits());
  // |integrand| <= e^{−√z s}
  spec.tail_cutoff = Real(static_cast<long>(ctx.working_digits() + 10), bits) * log(Real(10L, bits)) / root;
  const auto result = quadrature::integrate_or_throw(
      [&](const Real& s) {
        const Complex w(Real(1L, bits), s);
        return Complex(pow(w, exponent) * exp(-(root * s)));
      },
      spec, ctx, "converging_factor");
  return {n, z, result.value.re / root, result.log10_error};
}

Real converging_factor_from_value(const SeriesFamily& family, const Real& z, long n, const Real& f,
                                  const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("converging_factor_from_value: n must be at least 1");
  const auto sums = partial_sums(family, Complex(z), static_cast<std::size_t>(n - 1), ctx, Convention::raw);
  Real remainder = f.rounded(ctx.bits()) - sums.values.back().re;
  // φ_n = (f − f_{n−1})·(−z)^n / μ_n
  Real scale = pow(z.rounded(ctx.bits()), n) / moment(family, static_cast<unsigned long>(n), ctx);
  if (n % 2 != 0) scale = -scale;
  return remainder * scale;
}

}  // namespace divsum
