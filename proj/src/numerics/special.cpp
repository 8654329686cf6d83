#include "divsum/numerics/special.hpp"

#include "divsum/numerics/errors.hpp"
#include "divsum/reference/quadrature.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

namespace divsum {

Real pochhammer(const Real& a, unsigned long j, const PrecisionContext& ctx) {
  const Bits bits = std::max(ctx.bits(), a.precision());
  Real product(1L, bits);
  Real term = a.rounded(bits);
  for (unsigned long i = 0; i < j; ++i) {
    product *= term;
    term = term + 1L;
  }
  return product;
}

mpq_class pochhammer(const mpq_class& a, unsigned long j) {
  mpq_class product = 1;
  mpq_class term = a;
  for (unsigned long i = 0; i < j; ++i) {
    product *= term;
    term += 1;
  }
  return product;
}

Real gamma_fn(const Real& x, const PrecisionContext& ctx) {
  if (x.is_integer() && x.sign() <= 0) {
    throw DomainError("gamma_fn: pole at non-positive integer " + x.to_string(10));
  }
  return tgamma(x.rounded(std::max(ctx.bits(), x.precision())));
}

namespace {

// The K₀ abscissae are the same for every argument at a given precision, so
// e^{−w} is remembered per thread. Keys are the exact binary value of w.
const Real& cached_exp_minus(const Real& w) {
  thread_local std::unordered_map<std::string, Real> cache;
  mpfr_srcptr raw = w.raw();
  const std::size_t limbs = (static_cast<std::size_t>(mpfr_get_prec(raw)) + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
  std::string key(reinterpret_cast<const char*>(&raw->_mpfr_exp), sizeof(raw->_mpfr_exp));
  key.append(reinterpret_cast<const char*>(&raw->_mpfr_prec), sizeof(raw->_mpfr_prec));
  if (mpfr_regular_p(raw)) key.append(reinterpret_cast<const char*>(raw->_mpfr_d), limbs * sizeof(mp_limb_t));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (cache.size() > 500000) cache.clear();
  return cache.emplace(std::move(key), exp(-w)).first->second;
}

}  // namespace

Real bessel_k0(const Real& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("bessel_k0: argument must be positive");
  const Bits bits = ctx.bits();
  const Real arg = x.rounded(bits);
  if (arg <= 2L) {
    // K₀(x) = −(ln(x/2) + γ) I₀(x) + Σₖ Hₖ (x²/4)ᵏ/(k!)²
    const Real t = arg * arg / 4L;
    const Real lead = -(log(arg / 2L) + euler_gamma(bits));
    Real term(1L, bits);
    Real harmonic(bits);
    Real sum = lead;
    const Real eps = pow(Real(2L, bits), -static_cast<long>(bits));
    for (long k = 1;; ++k) {
      term *= t;
      term /= k * k;
      harmonic += Real(1L, bits) / k;
      const Real add = term * (lead + harmonic);
      sum += add;
      if (abs(add) <= eps * abs(sum)) break;
    }
    return sum;
  }
  // w = x(cosh s − 1) turns ∫₀^∞ e^{−x cosh s} ds into
  // e^{−x} ∫₀^∞ e^{−w} / √(w(w + 2x)) dw, whose scale no longer depends on x.
  auto spec = quadrature::QuadratureSpec::semi_infinite(Real(bits), ctx.digits() + 5);
  const Real decay = Real(static_cast<long>(ctx.working_digits() + 10), bits) * log(Real(10L, bits));
  spec.tail_cutoff = decay + log(decay);
  const Real two_x = 2L * arg;
  const auto result = quadrature::integrate_or_throw(
      [&](const Real& w) { return cached_exp_minus(w) / sqrt(w * (w + two_x)); }, spec, ctx, "bessel_k0");
  return exp(-arg) * result.value;
}

Complex upper_incomplete_gamma(const Real& a, const Complex& w, const PrecisionContext& ctx) {
  if (w.is_zero()) throw DomainError("upper_incomplete_gamma: w = 0");
  if (w.im.is_zero() && w.re.sign() < 0) throw DomainError("upper_incomplete_gamma: w on the branch cut");
  const Bits bits = ctx.bits();
  const Real alpha = a.rounded(bits);
  const Complex z = w.rounded(bits);

  // Modified Lentz on Γ(a,z) = e^{−z} z^a / (b₀ + a₁/(b₁ + a₂/(b₂ + …))),
  // b_n = z + 2n + 1 − a, a_n = −n(n − a).
  const Real tiny = pow(Real(2L, bits), -static_cast<long>(4 * bits));
  const Real tolerance = pow(Real(2L, bits), -static_cast<long>(bits - 4));
  auto guard_zero = [&](Complex& v) {
    if (abs(v) < tiny) v = Complex(tiny);
  };
  Complex b = z + (1L - alpha);
  Complex value = b;
  guard_zero(value);
  Complex c = value;
  Complex d(bits);
  constexpr long kMaxTerms = 2'000'000;
  for (long n = 1; n <= kMaxTerms; ++n) {
    const Real an = -(Real(n, bits) * (Real(n, bits) - alpha));
    b += Real(2L, bits);
    if (an.is_zero()) break;
    d = b + an * d;
    guard_zero(d);
    c = b + Complex(an) / c;
    guard_zero(c);
    d = Complex(Real(1L, bits)) / d;
    const Complex delta = c * d;
    value *= delta;
    if (abs(delta - Real(1L, bits)) < tolerance) {
      return exp(-z) * pow(z, alpha) / value;
    }
    if (n == kMaxTerms) {
      throw ConvergenceError("upper_incomplete_gamma: continued fraction did not converge",
                             quadrature::detail::log10_abs(abs(delta - Real(1L, bits))));
    }
  }
  return exp(-z) * pow(z, alpha) / value;
}

}  // namespace divsum
