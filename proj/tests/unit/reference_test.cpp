#include <doctest.h>

#include "divsum/numerics/errors.hpp"
#include "divsum/numerics/special.hpp"
#include "divsum/reference/stieltjes.hpp"
#include "divsum/series/partial_sums.hpp"
#include "divsum/transforms/delta.hpp"

using namespace divsum;

namespace {

const PrecisionContext kCtx(60, 20);

Complex cz(double x) { return Complex(Real(x, kCtx.bits())); }

double rel(const Real& a, const Real& b) { return (abs(a - b) / abs(b)).to_double(); }

}  // namespace

TEST_CASE("Euler reference against e^z Γ(0, z)") {
  const Bits b = kCtx.bits();
  const auto value = stieltjes_value(SeriesFamily::euler(), cz(1), kCtx);
  CHECK(value.achieved_digits >= kCtx.digits());
  CHECK(value.method == ReferenceMethod::quadrature);
  const Complex closed = exp(cz(1)) * upper_incomplete_gamma(Real(b), cz(1), kCtx);
  CHECK(rel(value.value.re, closed.re) < 1e-55);
  CHECK(value.value.re.to_double() == doctest::Approx(0.5963473623));

  const Complex i(Real(b), Real(1L, b));
  const auto complex_value = stieltjes_value(SeriesFamily::euler(), i, kCtx);
  const Complex complex_closed = exp(i) * upper_incomplete_gamma(Real(b), i, kCtx);
  CHECK(abs(complex_value.value - complex_closed) < Real(1e-55, b));
}

TEST_CASE("superfactorial reference") {
  const Bits b = kCtx.bits();
  const auto large = stieltjes_value(SeriesFamily::superfactorial(0), cz(1e6), kCtx);
  CHECK((large.value.re * Real(1e6, b)).to_double() == doctest::Approx(1.0).epsilon(1e-5));

  const Real z = Real(45L, b) * pi(b) * pi(b) / 64L;
  const auto j3 = stieltjes_value(SeriesFamily::superfactorial(mpq_class(-1, 2)), Complex(z), kCtx);
  CHECK(rel(j3.value.re * z, Real::parse("1.6601772066680467353089", b)) < 1e-22);
}

TEST_CASE("closed form cross-check") {
  const Bits b = kCtx.bits();
  const Real z = Real(45L, b) * pi(b) * pi(b) / 64L;
  const mpq_class q(-1, 2);
  CHECK(rel(closed_form_qclass(z, q, kCtx), stieltjes_value(SeriesFamily::superfactorial(q), Complex(z), kCtx).value.re) <
        1e-30);
  const Real one(1L, b);
  const mpq_class half(1, 2);
  CHECK(rel(closed_form_qclass(one, half, kCtx),
            stieltjes_value(SeriesFamily::superfactorial(half), Complex(one), kCtx).value.re) < 1e-30);

  // q → 0: the symmetric average at ±10⁻⁶ agrees with q = 0 to O(10⁻¹²).
  const mpq_class eps(1, 1000000);
  const Real average = (closed_form_qclass(one, eps, kCtx) + closed_form_qclass(one, -eps, kCtx)) / 2L;
  const Real at_zero = stieltjes_value(SeriesFamily::superfactorial(0), Complex(one), kCtx).value.re;
  CHECK(rel(average, at_zero) < 1e-10);
  CHECK(rel(closed_form_qclass(one, 0, kCtx), at_zero) < 1e-50);

  CHECK_THROWS_AS(closed_form_qclass(-one, half, kCtx), DomainError);
}

TEST_CASE("reference values are positive and decreasing for z > 0") {
  const PrecisionContext ctx(50, 10);
  for (const auto& family : {SeriesFamily::euler(), SeriesFamily::superfactorial(mpq_class(-1, 2)),
                             SeriesFamily::superfactorial(mpq_class(1, 2)), SeriesFamily::factorial_squared()}) {
    Real previous(ctx.bits());
    bool first = true;
    for (double z : {0.5, 1.0, 2.0}) {
      const Real f = stieltjes_value(family, Complex(Real(z, ctx.bits())), ctx).value.re;
      CHECK(f.sign() > 0);
      if (!first) CHECK(f < previous);
      previous = f;
      first = false;
    }
  }
}

TEST_CASE("reference values are self-consistent under more digits") {
  const PrecisionContext wide(100, 20);
  const auto family = SeriesFamily::superfactorial(mpq_class(1, 2));
  const Real narrow = stieltjes_value(family, cz(2), kCtx).value.re;
  const Real wider = stieltjes_value(family, Complex(Real(2L, wide.bits())), wide).value.re;
  CHECK(rel(narrow, wider) < 1e-60);
}

TEST_CASE("factorial-squared reference agrees with the resummed series") {
  const PrecisionContext ctx(50, 10);
  const Bits b = ctx.bits();
  const Complex z(Real(2L, b));
  const auto family = SeriesFamily::factorial_squared();
  const auto reference = stieltjes_value(family, z, ctx);
  CHECK(reference.achieved_digits >= 50);
  const PrecisionContext order = ctx.for_order(60);
  const auto sums = partial_sums(family, z, 61, order);
  const Complex delta = weniger_delta(sums, 0, 60, mpq_class(1), order);
  CHECK(rel(delta.re, reference.value.re) < 1e-12);
}

TEST_CASE("reference domain errors") {
  CHECK_THROWS_AS(stieltjes_value(SeriesFamily::euler(), cz(-2), kCtx), DomainError);
  CHECK_THROWS_AS(stieltjes_value(SeriesFamily::euler(), cz(0), kCtx), DomainError);
  const Complex off_axis(Real(1L, kCtx.bits()), Real(1L, kCtx.bits()));
  CHECK_THROWS_AS(stieltjes_value(SeriesFamily::factorial_squared(), off_axis, kCtx), DomainError);
}
