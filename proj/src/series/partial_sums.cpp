#include "divsum/series/partial_sums.hpp"

#include "divsum/numerics/errors.hpp"

#include <string>
#include <utility>

namespace divsum {

void require_cut_plane(const Complex& z, const char* what) {
  if (!z.is_finite()) throw DomainError(std::string(what) + ": z is not finite");
  if (z.is_zero()) throw DomainError(std::string(what) + ": z = 0");
  if (z.im.is_zero() && z.re.sign() < 0) throw DomainError(std::string(what) + ": z lies on the branch cut");
}

PartialSumSequence PartialSumSequence::from_values(std::vector<Complex> values) {
  PartialSumSequence out{std::nullopt, Complex(Real(1L, values.empty() ? 64 : values.front().precision())),
                         Convention::raw, {}, std::move(values)};
  out.terms.reserve(out.values.size());
  for (std::size_t n = 0; n < out.values.size(); ++n) {
    out.terms.push_back(n == 0 ? out.values[0] : out.values[n] - out.values[n - 1]);
  }
  return out;
}

PartialSumSequence partial_sums(const SeriesFamily& family, const Complex& z, std::size_t n_max,
                                const PrecisionContext& ctx, Convention convention) {
  require_cut_plane(z, "partial_sums");
  const Bits bits = ctx.bits();
  const Complex zz = z.rounded(bits);
  const Complex inv_z = Complex(Real(1L, bits)) / zz;

  PartialSumSequence out{family, zz, convention, {}, {}};
  out.terms.reserve(n_max + 1);
  out.values.reserve(n_max + 1);

  // μ_0 = Γ(1+q) for the superfactorial family, 1 otherwise.
  Complex term(moment(family, 0, ctx));
  if (convention == Convention::raw) term *= inv_z;
  Complex sum = term;
  out.terms.push_back(term);
  out.values.push_back(sum);
  for (std::size_t m = 1; m <= n_max; ++m) {
    // term_m = −term_{m−1}·(μ_m/μ_{m−1})/z; the ratio is an exact rational.
    term *= inv_z;
    term *= Real(moment_ratio(family, m), bits);
    term = -term;
    sum += term;
    out.terms.push_back(term);
    out.values.push_back(sum);
  }
  return out;
}

}  // namespace divsum
