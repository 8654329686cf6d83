#include <doctest.h>

#include "divsum/asymptotics/carleman.hpp"
#include "divsum/asymptotics/error.hpp"
#include "divsum/asymptotics/hypergeometric.hpp"
#include "divsum/numerics/errors.hpp"
#include "divsum/numerics/special.hpp"
#include "divsum/reference/stieltjes.hpp"
#include "divsum/transforms/delta.hpp"
#include "divsum/transforms/difference.hpp"

#include <cmath>

using namespace divsum;

namespace {

const PrecisionContext kCtx(60, 20);

double rel(const Real& a, const Real& b) { return (abs(a - b) / abs(b)).to_double(); }

}  // namespace

TEST_CASE("2F3 polynomial") {
  const Bits b = kCtx.bits();
  CHECK(hyp2f3_polynomial(0, 0, Complex(Real(3L, b)), kCtx).re == 1L);
  const Complex v = hyp2f3_polynomial(1, 0, Complex(Real(4L, b)), kCtx);
  CHECK(rel(v.re, Real(4L, b) / 3L) < 1e-55);
}

TEST_CASE("2F3 polynomial is the delta denominator") {
  // For q = 0, z = 1, γ = 1: Σⱼ (−1)ʲ C(k,j)(j+1)_{k−1}/Δf_j = −z² (1)_{k−1}/μ₁ · ₂F₃,
  // with Δf_j = (−1)^{j+1} (2j+2)! z^{−j−2}.
  const unsigned long k = 20;
  const auto binomials = binomial_row(k);
  mpq_class direct = 0;
  mpz_class factorial;
  for (unsigned long j = 0; j <= k; ++j) {
    mpz_fac_ui(factorial.get_mpz_t(), 2 * j + 2);
    const mpq_class inverse_difference = (j % 2 == 0 ? -1 : 1) * mpq_class(1, 1) / factorial;
    mpq_class term = binomials[j] * pochhammer(mpq_class(j + 1), k - 1) * inverse_difference;
    if (j % 2 != 0) term = -term;
    direct += term;
  }
  const Bits b = kCtx.bits();
  const Real expected(direct, b);
  const Real via_2f3 = -Real(pochhammer(mpq_class(1), k - 1), b) / 2L *
                       hyp2f3_polynomial(k, 0, Complex(Real(1L, b)), kCtx).re;
  CHECK(rel(via_2f3, expected) < 1e-55);
}

TEST_CASE("2F1 polynomial") {
  const Bits b = kCtx.bits();
  CHECK(hyp2f1_polynomial(5, 0, mpq_class(3, 4), Real(b), kCtx) == 1L);
  CHECK(hyp2f1_polynomial(1, 0, mpq_class(1), Real(1L, b), kCtx).is_zero());
  CHECK(hyp2f1_polynomial(1, 0, mpq_class(1), mpq_class(1)) == 0);
  // Δ⁸{(n+γ)₇ tⁿ} at n = 0 equals (γ)₇ ₂F₁(−8, 8+γ−1; γ; t)
  const mpq_class gamma(3, 4), t(1, 3);
  std::vector<mpq_class> g;
  mpq_class power = 1;
  for (unsigned long m = 0; m <= 8; ++m) {
    g.push_back(pochhammer(mpq_class(gamma + m), 7) * power);
    power *= t;
  }
  CHECK(forward_difference(g, 8, 0) == pochhammer(gamma, 7) * hyp2f1_polynomial(8, 0, gamma, t));
  const Real as_real = hyp2f1_polynomial(8, 0, gamma, Real(t, b), kCtx);
  CHECK(rel(as_real, Real(hyp2f1_polynomial(8, 0, gamma, t), b)) < 1e-55);
}

TEST_CASE("2F3 zeros in z are real and negative") {
  const Bits b = kCtx.bits();
  for (const mpq_class& q : {mpq_class(-1, 2), mpq_class(0), mpq_class(1, 2)}) {
    for (unsigned long k = 1; k <= 10; ++k) {
      auto value = [&](const Real& z) { return hyp2f3_polynomial(k, q, Complex(z), kCtx).re; };
      // Scan −z on a geometric grid up to beyond the largest root, 16k⁴.
      const double top = 16.0 * std::pow(static_cast<double>(k), 4) + 100.0;
      int changes = 0;
      Real previous_z(-1e-3, b);
      Real previous = value(previous_z);
      for (double x = 1e-3 * 1.01; x < top; x *= 1.01) {
        const Real z(-x, b);
        const Real current = value(z);
        if (current.sign() != previous.sign()) {
          ++changes;
          // Polish by bisection and check the residual.
          Real lo = previous_z, hi = z;
          for (int it = 0; it < 120; ++it) {
            const Real mid = (lo + hi) / 2L;
            if (value(mid).sign() == value(lo).sign()) {
              lo = mid;
            } else {
              hi = mid;
            }
          }
          CHECK(hi.sign() < 0);
          CHECK(abs(hi - lo) < abs(hi) * Real(1e-30, b));
        }
        previous_z = z;
        previous = current;
      }
      INFO("q=" << q.get_str() << " k=" << k);
      CHECK(changes == static_cast<int>(k));
      CHECK(value(Real(0.5, b)).sign() > 0);
    }
  }
}

TEST_CASE("exact error representation matches f minus delta") {
  const Bits b = kCtx.bits();
  struct Case {
    double z;
    mpq_class q;
    unsigned long k;
  };
  for (const Case& c : {Case{1.0, 0, 5}, Case{1.0, mpq_class(-1, 2), 12}}) {
    const auto family = SeriesFamily::superfactorial(c.q);
    const Real z(c.z, b);
    const Real f = stieltjes_value(family, Complex(z), kCtx).value.re;
    const PrecisionContext order = kCtx.for_order(static_cast<int>(c.k));
    const auto sums = partial_sums(family, Complex(z), c.k + 1, order);
    const Real delta = weniger_delta(sums, 0, c.k, family.default_gamma(), order).re;
    CHECK(rel(exact_error_representation(z, c.q, c.k, kCtx), f - delta) < 1e-30);
  }
  CHECK_THROWS_AS(exact_error_representation(Real(-1L, b), 0, 3, kCtx), DomainError);
  CHECK_THROWS_AS(exact_error_representation(Real(1L, b), 0, 0, kCtx), DomainError);
}

TEST_CASE("error sign follows the asymptotic phase") {
  const PrecisionContext ctx(50, 20);
  const auto curve = error_curve(SeriesFamily::superfactorial(0), Complex(Real(1L, ctx.bits())), 50, 100, ctx);
  int compared = 0;
  for (const auto& r : curve.records) {
    const double s = std::sin(2.0 * std::sqrt(2.0) * std::sqrt(static_cast<double>(r.k)) - 1.0);
    if (std::fabs(s) < 0.3) continue;
    ++compared;
    CHECK(r.actual_error.re.sign() == r.phase_estimate.re.sign());
  }
  CHECK(compared > 20);
}

TEST_CASE("error asymptotic") {
  const Bits b = kCtx.bits();
  const auto at_one = error_asymptotic(Complex(Real(1L, b)), 0, 100, kCtx);
  CHECK(at_one.envelope.to_double() == doctest::Approx(2 * M_PI * std::exp(-20 * std::sqrt(2.0))).epsilon(1e-12));
  CHECK(at_one.envelope.to_double() == doctest::Approx(3.26e-12).epsilon(0.01));
  const double phase = 2 * std::sqrt(2.0) * 10 - 1;
  CHECK(at_one.value.re.to_double() == doctest::Approx(-at_one.envelope.to_double() * std::sin(phase)).epsilon(1e-12));

  const Complex i(Real(b), Real(1L, b));
  const auto rotated = error_asymptotic(i, 0, 64, kCtx);
  const double exponent = 2 * std::sqrt(2.0) * std::cos(M_PI / 8) * 8;
  CHECK(std::log(rotated.envelope.to_double() / (2 * M_PI)) == doctest::Approx(-exponent).epsilon(1e-12));

  const Real offset = -Real(1L, b);
  CHECK(rel(error_asymptotic_with_offset(Real(1L, b), 0, 100, offset, kCtx), at_one.value.re) < 1e-50);

  CHECK_THROWS_AS(error_asymptotic(Complex(Real(-1L, b)), 0, 10, kCtx), DomainError);
}

TEST_CASE("denominator envelope") {
  const Bits b = kCtx.bits();
  const Real one(1L, b);
  // q = 0 prefactor (√π/2)/(2(2π)^{3/2}) at k = 1, z = 4: remaining factors are 1·exp(2√2·√2)
  const Real prefactor = sqrt(pi(b)) / 2L / (2L * pow(2L * pi(b), Real(1.5, b)));
  CHECK(rel(denominator_envelope(1, 0, Real(4L, b), kCtx), prefactor * exp(Real(4L, b))) < 1e-55);

  const double r100 = (hyp2f3_polynomial(100, 0, Complex(one), kCtx).re / denominator_envelope(100, 0, one, kCtx)).to_double();
  const double r400 = (hyp2f3_polynomial(400, 0, Complex(one), kCtx).re / denominator_envelope(400, 0, one, kCtx)).to_double();
  CHECK(r400 > 0.8);
  CHECK(r400 < 1.25);
  CHECK(std::fabs(r400 - 1) < std::fabs(r100 - 1));
}

TEST_CASE("numerator asymptotic near envelope peaks") {
  const PrecisionContext ctx(50, 10);
  const Bits b = ctx.bits();
  const Real one(1L, b);
  for (unsigned long k0 : {100UL, 225UL, 400UL}) {
    // Nearest k with |sin| maximal.
    unsigned long best = k0;
    double best_sin = 0;
    for (unsigned long k = k0 - 10; k <= k0 + 10; ++k) {
      const double s = std::fabs(std::sin(2 * std::sqrt(2.0) * std::sqrt(static_cast<double>(k)) - 1));
      if (s > best_sin) {
        best_sin = s;
        best = k;
      }
    }
    const double quad = error_numerator(one, 0, best, ctx).to_double();
    const double asym = numerator_asymptotic(best, 0, one, ctx).to_double();
    INFO("k=" << best << " quadrature=" << quad << " asymptotic=" << asym);
    CHECK(std::fabs(quad / asym - 1) < 0.25);
  }
}

TEST_CASE("endpoint contribution is subdominant") {
  // |I₋/I₊| with the saddle amplitude; the exponent implied by the two leading
  // forms is −(6−q)/4.
  const Bits b = kCtx.bits();
  const mpq_class q(-1, 2);
  std::vector<double> x, y;
  for (unsigned long k = 100; k <= 1600; k += 50) {
    const double ratio = (abs(endpoint_contribution(k, q, kCtx)) / saddle_contribution(k, q, Real(1L, b), kCtx, true)).to_double();
    x.push_back(std::log(static_cast<double>(k)));
    y.push_back(std::log(ratio));
  }
  const double slope = least_squares_slope(x, y);
  const double implied = -(6.0 - (-0.5)) / 4.0;
  CHECK(slope == doctest::Approx(implied).epsilon(0.01));
  CHECK(slope < 0);
}

TEST_CASE("Carleman diagnostics") {
  const PrecisionContext ctx(50, 10);
  const auto sf = carleman_terms(SeriesFamily::superfactorial(0), 1000, ctx);
  const double ratio = (sf.terms.back() / sf.asymptote.back()).to_double();
  CHECK(ratio > 0.99);
  CHECK(ratio < 1.01);
  for (std::size_t i = 1; i < sf.partial_sums.size(); ++i) {
    CHECK(sf.terms[i].sign() > 0);
    CHECK(sf.partial_sums[i] > sf.partial_sums[i - 1]);
  }

  const auto euler = carleman_terms(SeriesFamily::euler(), 1000, ctx);
  std::vector<double> x, y;
  for (unsigned long m = 100; m <= 1000; ++m) {
    x.push_back(std::log(static_cast<double>(m)));
    y.push_back(std::log(euler.terms[m - 1].to_double()));
  }
  CHECK(least_squares_slope(x, y) == doctest::Approx(-0.5).epsilon(0.1));

  const auto squared = carleman_terms(SeriesFamily::factorial_squared(), 1000, ctx);
  const double e = std::exp(1.0);
  for (unsigned long m : {100UL, 500UL, 1000UL}) {
    const double scaled = squared.terms[m - 1].to_double() * static_cast<double>(m);
    CHECK(scaled > 0.5 * e / 2);
    CHECK(scaled < 2 * e / 2);
  }
  CHECK_THROWS_AS(carleman_terms(SeriesFamily::euler(), 0, ctx), DomainError);
}
