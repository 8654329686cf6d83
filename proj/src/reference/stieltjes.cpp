#include "divsum/reference/stieltjes.hpp"

#include "divsum/numerics/errors.hpp"
#include "divsum/numerics/special.hpp"
#include "divsum/reference/quadrature.hpp"
#include "divsum/series/partial_sums.hpp"

#include <algorithm>

namespace divsum {

namespace {

template <class F>
ReferenceValue integrate_family(const SeriesFamily& family, const Complex& z, F&& integrand, const Real& cutoff,
                                const PrecisionContext& ctx) {
  auto spec = quadrature::QuadratureSpec::semi_infinite(Real(ctx.bits()), ctx.digits());
  spec.tail_cutoff = cutoff;
  const auto result = quadrature::integrate_or_throw(std::forward<F>(integrand), spec, ctx, "stieltjes_value");
  return {family, z, result.value, std::min(result.achieved_digits(), ctx.working_digits()),
          ReferenceMethod::quadrature};
}

}  // namespace

ReferenceValue stieltjes_value(const SeriesFamily& family, const Complex& z, const PrecisionContext& ctx) {
  require_cut_plane(z, "stieltjes_value");
  const Bits bits = ctx.bits();
  const Complex zz = z.rounded(bits);
  const Real ln10 = log(Real(10L, bits));
  // e^{−x}·max(1, x^q) < 10^{−(digits+10)} beyond this x.
  const Real decay = Real(static_cast<long>(ctx.working_digits() + 10), bits) * ln10;

  switch (family.kind) {
    case FamilyKind::euler:
      return integrate_family(
          family, zz, [&](const Real& t) { return Complex(exp(-t)) / (zz + t); }, decay + log(decay), ctx);
    case FamilyKind::superfactorial: {
      const Real q(family.q, bits);
      const Real cutoff = decay + max(Real(bits), q) * log(decay) + 1L;
      if (family.q == 0) {
        return integrate_family(
            family, zz, [&](const Real& u) { return Complex(exp(-u)) / (zz + u * u); }, cutoff, ctx);
      }
      return integrate_family(
          family, zz, [&](const Real& u) { return Complex(pow(u, q) * exp(-u)) / (zz + u * u); }, cutoff, ctx);
    }
    case FamilyKind::factorial_squared: {
      if (!zz.is_real()) throw DomainError("stieltjes_value: factorial-squared family is evaluated for z > 0 only");
      // K₀(2u) ~ √(π/4u) e^{−2u}
      const Real cutoff = decay / 2L + log(decay);
      const Real& x = zz.re;
      // Below this u the integrand, bounded by 4u(1 + ln(1/u))/z, is negligible.
      const Real negligible = pow(Real(10L, bits), -static_cast<long>(ctx.working_digits() + 15));
      return integrate_family(
          family, zz,
          [&](const Real& u) {
            if (u < negligible) return Complex(Real(bits));
            return Complex(4L * u * bessel_k0(2L * u, ctx) / (x + u * u));
          },
          cutoff, ctx);
    }
  }
  throw DomainError("stieltjes_value: unknown family");
}

Real closed_form_qclass(const Real& z, const mpq_class& q, const PrecisionContext& ctx) {
  if (z.sign() <= 0) throw DomainError("closed_form_qclass: z must be positive");
  if (q <= -1 || q >= 1) throw DomainError("closed_form_qclass: q must lie in (-1, 1)");
  const Bits bits = ctx.bits();
  const Real zr = z.rounded(bits);
  const Real root = sqrt(zr);
  const Real qr(q, bits);
  const Complex i_root(Real(bits), root);
  const Complex minus_z(-zr, Real(bits));
  const Complex power = q == 0 ? Complex(Real(1L, bits)) : pow(minus_z, Real(mpq_class(q / 2), bits));
  const Complex product = power * exp(i_root) * upper_incomplete_gamma(-qr, i_root, ctx);
  return -(gamma_fn(qr + 1L, ctx) / root) * product.im;
}

std::string to_string(ReferenceMethod method) {
  return method == ReferenceMethod::quadrature ? "quadrature" : "closed_form";
}

}  // namespace divsum
