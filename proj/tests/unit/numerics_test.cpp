#include <doctest.h>

#include "divsum/numerics/errors.hpp"
#include "divsum/numerics/special.hpp"
#include "divsum/reference/quadrature.hpp"

#include <random>

using namespace divsum;

namespace {

const PrecisionContext kCtx(60, 20);

bool close(const Real& a, const Real& b, int digits) {
  const Real scale = max(abs(b), Real(1e-300, a.precision()));
  return abs(a - b) / scale < pow(Real(10L, a.precision()), -static_cast<long>(digits));
}

// Ascending series K₀(x) = −(ln(x/2)+γ_E) I₀(x) + Σ (x²/4)^m H_m/(m!)².
Real k0_series(const Real& x, Bits bits) {
  const Real y = x * x / 4L;
  Real i0(1L, bits), tail(bits), term(1L, bits), harmonic(bits);
  for (long m = 1; m < 400; ++m) {
    term *= y;
    term /= m * m;
    harmonic += Real(1L, bits) / Real(m, bits);
    i0 += term;
    tail += term * harmonic;
  }
  return -(log(x / 2L) + euler_gamma(bits)) * i0 + tail;
}

// E₁(1) = −γ_E + Σ_{m≥1} (−1)^{m+1}/(m·m!).
Real e1_of_one(Bits bits) {
  Real sum = -euler_gamma(bits);
  Real factorial(1L, bits);
  for (long m = 1; m < 200; ++m) {
    factorial *= m;
    Real term = Real(1L, bits) / (factorial * m);
    if (m % 2 == 0) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("real arithmetic and parsing") {
  const Bits b = kCtx.bits();
  const Real x = Real::parse("1.25", b);
  CHECK(x == Real(5L, b) / 4L);
  CHECK_THROWS_AS(Real::parse("1.2x", b), std::invalid_argument);
  CHECK_THROWS_AS(Real::parse("", b), std::invalid_argument);
  CHECK(to_rational(Real(0.75, b)) == mpq_class(3, 4));
  CHECK(Real(3L, b) > 2L);
}

TEST_CASE("complex principal branches") {
  const Bits b = kCtx.bits();
  const Complex minus_one(Real(-1L, b), Real(b));
  CHECK(arg(minus_one) == pi(b));
  const Complex r = sqrt(minus_one);
  CHECK(r.re.is_zero());
  CHECK(r.im == 1L);
  const Complex i(Real(b), Real(1L, b));
  const Complex q = pow(i, Real(0.5, b));
  CHECK(close(q.re, sqrt(Real(2L, b)) / 2L, 55));
  CHECK(close(q.im, sqrt(Real(2L, b)) / 2L, 55));
  CHECK_THROWS_AS(log(Complex(b)), DomainError);
}

TEST_CASE("pochhammer") {
  const Bits b = kCtx.bits();
  CHECK(pochhammer(Real(3L, b), 0, kCtx) == 1L);
  CHECK(pochhammer(Real(2L, b), 3, kCtx) == 24L);
  CHECK(pochhammer(Real(0.5, b), 2, kCtx) == Real(0.75, b));
  CHECK(pochhammer(mpq_class(1, 2), 3) == mpq_class(15, 8));
  // (a)_j = Γ(a+j)/Γ(a)
  for (double a : {0.3, 1.7, 12.25}) {
    const Real ra(a, b);
    CHECK(close(pochhammer(ra, 7, kCtx), gamma_fn(ra + 7L, kCtx) / gamma_fn(ra, kCtx), 55));
  }
}

TEST_CASE("gamma function") {
  const Bits b = kCtx.bits();
  CHECK(gamma_fn(Real(3L, b), kCtx) == 2L);
  CHECK(close(gamma_fn(Real(0.5, b), kCtx), sqrt(pi(b)), 58));
  const Real half(0.5, b);
  CHECK(close(gamma_fn(Real(20.5, b), kCtx), pochhammer(half, 20, kCtx) * gamma_fn(half, kCtx), 55));
  CHECK_THROWS_AS(gamma_fn(Real(0L, b), kCtx), DomainError);
  CHECK_THROWS_AS(gamma_fn(Real(-3L, b), kCtx), DomainError);

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> dist(0.1, 50.0);
  for (int i = 0; i < 100; ++i) {
    const Real x(dist(rng), b);
    CHECK(close(gamma_fn(x + 1L, kCtx), x * gamma_fn(x, kCtx), 55));
  }
}

TEST_CASE("gamma function is stable under extra precision") {
  const Real x(7.3, kCtx.bits());
  const PrecisionContext wider = kCtx.with_digits(kCtx.digits() + 20);
  CHECK(kCtx.round(gamma_fn(x, kCtx)) == kCtx.round(gamma_fn(x, wider)));
}

TEST_CASE("bessel K0 against independent forms") {
  const Bits b = kCtx.bits();
  const Real one(1L, b), two(2L, b);
  // Small arguments: K₀(x) = ∫₀^∞ e^{−x cosh s} ds, cut at s = 8 where the
  // integrand is below 1e-80 for x >= 1/8.
  for (const Real& x : {one, two, Real(0.125, b)}) {
    auto spec = quadrature::QuadratureSpec::finite(Real(b), Real(8L, b), 58);
    const auto integral = quadrature::integrate([&](const Real& s) { return exp(-x * cosh(s)); }, spec, kCtx);
    CHECK(close(bessel_k0(x, kCtx), integral.value, 55));
  }
  // Larger arguments: the ascending series with room for its cancellation.
  for (long x : {3L, 5L}) {
    CHECK(close(bessel_k0(Real(x, b), kCtx), k0_series(Real(x, b + 64), b + 64).rounded(b), 55));
  }
  CHECK(bessel_k0(one, kCtx).to_double() == doctest::Approx(0.4210244382));
  CHECK(bessel_k0(two, kCtx).to_double() == doctest::Approx(0.1138938727));
  CHECK(bessel_k0(Real(3L, b), kCtx).to_double() == doctest::Approx(0.03473950439));
  Real previous = bessel_k0(Real(1e-3, b), kCtx);
  for (double x : {1e-2, 0.1, 0.5, 1.0, 3.0, 10.0}) {
    const Real next = bessel_k0(Real(x, b), kCtx);
    CHECK(next < previous);
    previous = next;
  }
  CHECK_THROWS_AS(bessel_k0(Real(b), kCtx), DomainError);
  CHECK_THROWS_AS(bessel_k0(Real(-1L, b), kCtx), DomainError);
}

TEST_CASE("upper incomplete gamma") {
  const Bits b = kCtx.bits();
  for (double x : {0.5, 1.0, 3.0}) {
    const Complex g = upper_incomplete_gamma(Real(1L, b), Complex(Real(x, b)), kCtx);
    CHECK(close(g.re, exp(-Real(x, b)), 55));
    CHECK(abs(g.im) < Real(1e-55, b));
  }
  const Complex g01 = upper_incomplete_gamma(Real(b), Complex(Real(1L, b)), kCtx);
  CHECK(close(g01.re, e1_of_one(b), 55));
  CHECK(g01.re.to_double() == doctest::Approx(0.2193839343));

  // Γ(−1/2, i) along the ray w = i(1+s): Γ(a,w) = ∫_w^∞ τ^{a−1}e^{−τ}dτ taken on
  // the path τ = i + s.
  const Real a(-0.5, b);
  const Complex w(Real(b), Real(1L, b));
  const auto spec = quadrature::QuadratureSpec::semi_infinite(Real(b), 55);
  const auto oracle = quadrature::integrate_or_throw(
      [&](const Real& s) {
        const Complex tau(s, Real(1L, b));
        return pow(tau, Complex(a - 1L)) * exp(-tau);
      },
      spec, kCtx, "gamma ray");
  const Complex g = upper_incomplete_gamma(a, w, kCtx);
  CHECK(close(g.re, oracle.value.re, 50));
  CHECK(close(g.im, oracle.value.im, 50));

  CHECK_THROWS_AS(upper_incomplete_gamma(a, Complex(b), kCtx), DomainError);
  CHECK_THROWS_AS(upper_incomplete_gamma(a, Complex(Real(-2L, b)), kCtx), DomainError);
}

TEST_CASE("double-exponential quadrature") {
  const PrecisionContext ctx(150, 20);
  const Bits b = ctx.bits();
  const auto unit = quadrature::integrate([&](const Real&) { return Real(1L, b); },
                                         quadrature::QuadratureSpec::finite(Real(b), Real(1L, b), 150), ctx);
  CHECK(unit.converged);
  CHECK(close(unit.value, Real(1L, b), 148));

  const auto decay = quadrature::integrate([](const Real& t) { return exp(-t); },
                                          quadrature::QuadratureSpec::semi_infinite(Real(b), 150), ctx);
  CHECK(decay.converged);
  CHECK(close(decay.value, Real(1L, b), 148));

  const auto singular = quadrature::integrate([](const Real& t) { return 1L / sqrt(t); },
                                             quadrature::QuadratureSpec::finite(Real(b), Real(1L, b), 150), ctx);
  CHECK(singular.converged);
  CHECK(singular.achieved_digits() >= 150);
  CHECK(close(singular.value, Real(2L, b), 148));

  const auto gauss = quadrature::integrate([](const Real& t) { return exp(-(t * t)); },
                                          quadrature::QuadratureSpec::semi_infinite(Real(b), 150), ctx);
  CHECK(close(gauss.value, sqrt(pi(b)) / 2L, 148));
}

TEST_CASE("quadrature non-convergence is reported") {
  const PrecisionContext ctx(60, 20);
  const Bits b = ctx.bits();
  auto spec = quadrature::QuadratureSpec::finite(Real(b), Real(1L, b), 60);
  spec.max_level = 2;
  const auto f = [&](const Real& t) { return sin(Real(200L, b) * t); };
  CHECK_FALSE(quadrature::integrate(f, spec, ctx).converged);
  CHECK_THROWS_AS(quadrature::integrate_or_throw(f, spec, ctx, "oscillatory"), ConvergenceError);
}
