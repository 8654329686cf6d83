#include "divsum/asymptotics/error.hpp"

#include "divsum/asymptotics/hypergeometric.hpp"
#include "divsum/numerics/errors.hpp"
#include "divsum/numerics/special.hpp"
#include "divsum/reference/quadrature.hpp"
#include "divsum/reference/stieltjes.hpp"
#include "divsum/transforms/delta.hpp"

#include <cmath>
#include <stdexcept>

namespace divsum {

namespace {

void require_q(const mpq_class& q, const char* what) {
  if (q <= -1 || q >= 1) throw DomainError(std::string(what) + ": q must lie in (-1, 1)");
}

// 2√2 z^{1/4} √k − √z − qπ/4 for real z.
Real phase(unsigned long k, const mpq_class& q, const Real& z, Bits bits) {
  const Real zz = z.rounded(bits);
  return 2L * sqrt(Real(2L, bits)) * sqrt(sqrt(zz)) * sqrt(Real(static_cast<long>(k), bits)) - sqrt(zz) -
         Real(mpq_class(q / 4), bits) * pi(bits);
}

}  // namespace

Real error_numerator(const Real& z, const mpq_class& q, unsigned long k, const PrecisionContext& ctx) {
  if (z.sign() <= 0) throw DomainError("error_numerator: z must be positive");
  require_q(q, "error_numerator");
  // The polynomial loses up to ~0.77k digits to cancellation on the contour.
  const int guard = static_cast<int>(std::ceil(0.8 * static_cast<double>(k))) + 20;
  const PrecisionContext local = ctx.with_guard(guard);
  const Bits bits = local.bits();
  const Real root = sqrt(z.rounded(bits));
  const mpq_class h = q / 2;
  const Real outer_exponent = -Real(mpq_class(q + 3), bits);

  auto spec = quadrature::QuadratureSpec::semi_infinite(Real(bits), ctx.digits());
  spec.tail_cutoff = Real(static_cast<long>(local.working_digits() + 10), bits) * log(Real(10L, bits)) / root;
  const auto result = quadrature::integrate_or_throw(
      [&](const Real& s) {
        const Complex w(Real(1L, bits), s);
        const Complex inv_sq = Complex(Real(1L, bits)) / (w * w);
        const Complex poly = hyp2f1_terminating(k, mpq_class(h + k), mpq_class(h + 1), inv_sq);
        return Complex(pow(w, outer_exponent) * poly * exp(-(root * s)));
      },
      spec, local, "error_numerator");
  return (result.value.re / root).rounded(ctx.bits());
}

Real exact_error_representation(const Real& z, const mpq_class& q, unsigned long k, const PrecisionContext& ctx) {
  if (k == 0) throw DomainError("exact_error_representation: k must be at least 1");
  const Real numerator = error_numerator(z, q, k, ctx);
  const Bits bits = ctx.bits();
  const Complex denominator = hyp2f3_polynomial(k, q, Complex(z.rounded(bits)), ctx);
  // The ₂F₃ zeros in z are real and negative, and every term is positive for z > 0.
  if (!(denominator.re > 0L)) {
    throw std::logic_error("exact_error_representation: 2F3 denominator is not positive for z > 0");
  }
  const Real gamma_q3 = gamma_fn(Real(mpq_class(q + 3), bits), ctx);
  return -(gamma_q3 / z.rounded(bits)) * numerator / denominator.re.rounded(bits);
}

ErrorAsymptotic error_asymptotic(const Complex& z, const mpq_class& q, unsigned long k, const PrecisionContext& ctx) {
  require_cut_plane(z, "error_asymptotic");
  require_q(q, "error_asymptotic");
  const Bits bits = ctx.bits();
  const Complex zz = z.rounded(bits);
  const Complex quarter = pow(zz, Real(0.25, bits));
  const Complex root = sqrt(zz);
  const Real scale = 2L * sqrt(Real(2L, bits)) * sqrt(Real(static_cast<long>(k), bits));
  const Complex exponent = quarter * scale;
  const Real q_offset = Real(mpq_class(q / 4), bits) * pi(bits);
  const Complex prefactor = pow(zz, Real(mpq_class((q - 1) / 2), bits)) * (-2L * pi(bits));
  ErrorAsymptotic out{prefactor * exp(-exponent) * sin(exponent - root - q_offset),
                      2L * pi(bits) * pow(abs(zz), Real(mpq_class((q - 1) / 2), bits)) * exp(-exponent.re)};
  return out;
}

Real error_asymptotic_with_offset(const Real& z, const mpq_class& q, unsigned long k, const Real& offset,
                                  const PrecisionContext& ctx) {
  if (z.sign() <= 0) throw DomainError("error_asymptotic_with_offset: z must be positive");
  const Bits bits = ctx.bits();
  const Real zz = z.rounded(bits);
  const Real exponent = 2L * sqrt(Real(2L, bits)) * sqrt(sqrt(zz)) * sqrt(Real(static_cast<long>(k), bits));
  return -2L * pi(bits) * pow(zz, Real(mpq_class((q - 1) / 2), bits)) * exp(-exponent) * sin(exponent + offset);
}

Real denominator_envelope(unsigned long k, const mpq_class& q, const Real& z, const PrecisionContext& ctx) {
  if (z.sign() <= 0) throw DomainError("denominator_envelope: z must be positive");
  if (k == 0) throw DomainError("denominator_envelope: k must be at least 1");
  const Bits bits = ctx.bits();
  const Real h(mpq_class(q / 2), bits);
  const Real kk(static_cast<long>(k), bits);
  const Real zz = z.rounded(bits);
  const Real gammas = gamma_fn(h + 1L, ctx) * gamma_fn(h + Real(1.5, bits), ctx) * gamma_fn(h + 2L, ctx);
  const Real two_pi = 2L * pi(bits);
  const Real power = Real(mpq_class(3 * (q + 2) / 8), bits);
  return gammas / (2L * two_pi * sqrt(two_pi)) * pow(zz / 4L, -power) * pow(kk, -(2L * power)) *
         exp(2L * sqrt(Real(2L, bits)) * sqrt(kk) * sqrt(sqrt(zz)));
}

Real numerator_asymptotic(unsigned long k, const mpq_class& q, const Real& z, const PrecisionContext& ctx) {
  if (z.sign() <= 0) throw DomainError("numerator_asymptotic: z must be positive");
  const Bits bits = ctx.bits();
  const Real kk(static_cast<long>(k), bits);
  const Real zz = z.rounded(bits);
  const Real lead = gamma_fn(Real(mpq_class(q / 2 + 1), bits), ctx) / pow(Real(2L, bits), Real(mpq_class(2 + q / 4), bits));
  return lead * pow(kk, -Real(mpq_class(3 * (2 + q) / 4), bits)) * pow(zz, Real(mpq_class((q - 2) / 8), bits)) *
         sin(phase(k, q, z, bits));
}

Real saddle_contribution(unsigned long k, const mpq_class& q, const Real& z, const PrecisionContext& ctx,
                         bool amplitude) {
  if (z.sign() <= 0) throw DomainError("saddle_contribution: z must be positive");
  const Bits bits = ctx.bits();
  const Real value = sqrt(pi(bits)) * pow(z.rounded(bits), Real(mpq_class((2 + q) / 8), bits)) /
                     pow(Real(2L * static_cast<long>(k), bits), Real(mpq_class(1 + q / 4), bits));
  return amplitude ? value : value * sin(phase(k, q, z, bits));
}

Real endpoint_contribution(unsigned long k, const mpq_class& q, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  Real value = 3L * sqrt(2L * pi(bits)) / (32L * pow(Real(static_cast<long>(k), bits), Real(2.5, bits))) *
               sin(Real(mpq_class((q + 2) / 4), bits) * pi(bits));
  return k % 2 == 0 ? value : -value;
}

ErrorCurve error_curve(const SeriesFamily& family, const Complex& z, unsigned long k_min, unsigned long k_max,
                       const PrecisionContext& ctx, bool with_exact) {
  if (family.kind != FamilyKind::superfactorial) throw DomainError("error_curve: superfactorial family only");
  if (k_min > k_max) throw std::invalid_argument("error_curve: empty k range");
  if (with_exact && !z.is_real()) throw DomainError("error_curve: the exact representation needs z > 0");
  const PrecisionContext order_ctx = ctx.for_order(static_cast<int>(k_max));
  const auto reference = stieltjes_value(family, z, ctx);
  const auto sums = partial_sums(family, z, k_max + 1, order_ctx, Convention::raw);
  const mpq_class gamma = family.default_gamma();

  ErrorCurve curve{family, z, gamma, reference.value, reference.achieved_digits, {}};
  for (unsigned long k = k_min; k <= k_max; ++k) {
    const Complex delta = weniger_delta(sums, 0, k, gamma, order_ctx);
    const auto asym = error_asymptotic(z, family.q, k, ctx);
    ErrorRecord record{k, (reference.value - delta).rounded(ctx.bits()), asym.envelope, asym.value, std::nullopt};
    if (with_exact && k >= 1) record.exact_rep = exact_error_representation(z.re, family.q, k, ctx);
    curve.records.push_back(std::move(record));
  }
  return curve;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("least_squares_slope: need two or more points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace divsum
