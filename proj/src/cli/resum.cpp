#include "divsum/cli/experiments.hpp"

#include "divsum/numerics/errors.hpp"
#include "divsum/reference/stieltjes.hpp"
#include "divsum/transforms/delta.hpp"
#include "divsum/transforms/epsilon.hpp"

#include <algorithm>

namespace divsum::cli {

namespace {

const char* to_string(Method m) {
  switch (m) {
    case Method::delta: return "delta";
    case Method::epsilon: return "epsilon";
    case Method::both: return "both";
  }
  return "?";
}

}  // namespace

PartialSumSequence exclusive_indexing(const PartialSumSequence& inclusive) {
  PartialSumSequence out = inclusive;
  const Complex zero(inclusive.precision());
  out.values.insert(out.values.begin(), zero);
  out.terms.insert(out.terms.begin(), zero);
  // δ may rebuild a sequence from its family, which would restore the other indexing.
  out.family.reset();
  return out;
}

ExperimentReport run_resum(const ResumOptions& o) {
  const PrecisionContext& ctx = o.ctx;
  const mpq_class gamma = o.gamma.value_or(o.family.default_gamma());
  const int sig = o.digits_out;

  ExperimentReport report;
  report.experiment = "resum";
  report.digits = ctx.digits();
  report.guard_digits = ctx.guard_digits();
  report.parameters = {
      {"series", o.family.name()},
      {"q", o.family.q.get_str()},
      {"z", to_string(o.z, sig)},
      {"gamma", gamma.get_str()},
      {"kmax", std::to_string(o.kmax)},
      {"method", to_string(o.method)},
      {"convention", o.convention == Convention::raw ? "raw" : "z-scaled"},
  };
  report.columns = {"k",           "method",      "approximant_re", "approximant_im",   "reference_re",
                    "reference_im", "abs_error", "rel_error",      "reference_digits", "status"};

  require_cut_plane(o.z, "resum");
  const auto ref = stieltjes_value(o.family, o.z, ctx);
  Complex reference = ref.value;
  if (o.convention == Convention::z_scaled) reference *= o.z.rounded(ctx.bits());

  const bool want_delta = o.method != Method::epsilon;
  const bool want_eps = o.method != Method::delta;
  const std::size_t n_max = std::max<std::size_t>(want_delta ? o.kmax + 1 : 0, want_eps ? 2 * o.kmax : 0);
  const PrecisionContext order_ctx = ctx.for_order(static_cast<int>(o.kmax));
  const auto sums = partial_sums(o.family, o.z, n_max, order_ctx, o.convention);

  std::optional<EpsilonTable<Complex>> table;
  if (want_eps) table = wynn_epsilon(sums.values, static_cast<int>(2 * o.kmax));

  const Real ref_abs = abs(reference);
  auto emit = [&](unsigned long k, const char* method, const std::optional<Complex>& value, std::string status) {
    std::replace(status.begin(), status.end(), ',', ';');
    if (!value) {
      report.add_row({std::to_string(k), method, "nan", "nan", sci(reference.re, sig), sci(reference.im, sig), "nan",
                      "nan", std::to_string(ref.achieved_digits), status});
      return;
    }
    const Real err = abs(Complex(reference - *value));
    report.add_row({std::to_string(k), method, sci(value->re, sig), sci(value->im, sig), sci(reference.re, sig),
                    sci(reference.im, sig), sci(err, sig), sci(Real(err / ref_abs), sig),
                    std::to_string(ref.achieved_digits), status});
  };

  for (unsigned long k = 0; k <= o.kmax; ++k) {
    if (want_delta) {
      try {
        emit(k, "delta", weniger_delta(sums, 0, k, gamma, ctx), "ok");
      } catch (const VanishingDenominator& e) {
        emit(k, "delta", std::nullopt, std::string("warning: ") + e.what());
      }
    }
    if (want_eps) {
      const int col = static_cast<int>(2 * k);
      if (table->valid(col, 0)) {
        emit(k, "epsilon", *table->at(col, 0), "ok");
      } else {
        emit(k, "epsilon", std::nullopt, "warning: epsilon entry lost to a zero difference");
      }
    }
  }
  return report;
}

}  // namespace divsum::cli
