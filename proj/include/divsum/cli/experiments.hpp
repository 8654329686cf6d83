#pragma once

#include "divsum/cli/report.hpp"
#include "divsum/numerics/precision.hpp"
#include "divsum/series/family.hpp"
#include "divsum/series/partial_sums.hpp"

#include <optional>
#include <string_view>

namespace divsum::cli {

enum class Method { delta, epsilon, both };

struct ResumOptions {
  SeriesFamily family = SeriesFamily::euler();
  Complex z{Real(1L, 64)};
  std::optional<mpq_class> gamma;  ///< defaults to family.default_gamma()
  unsigned long kmax = 20;
  PrecisionContext ctx;
  Method method = Method::delta;
  Convention convention = Convention::raw;
  int digits_out = 25;
};

/// δₖ⁽⁰⁾(γ) and/or [k/k] for k = 0..kmax against the reference value.
/// Columns: k, method, approximant_re, approximant_im, reference_re,
/// reference_im, abs_error, rel_error, reference_digits, status.
/// DomainError and ConvergenceError propagate; a vanishing δ denominator or a
/// lost ε entry becomes a warning row.
ExperimentReport run_resum(const ResumOptions& options);

enum class Exhibit { table1, fig1, fig2, fig3, fig4, fig5 };

std::optional<Exhibit> parse_exhibit(std::string_view name);
std::string_view to_string(Exhibit exhibit);

struct ReproduceOptions {
  PrecisionContext ctx;
  int digits_out = 25;
};

ExperimentReport run_reproduce(Exhibit exhibit, const ReproduceOptions& options);

/// (0, f_0, f_1, ...): the k-th entry sums terms m = 0..k−1.
PartialSumSequence exclusive_indexing(const PartialSumSequence& inclusive);

/// Benchmark digits of the J₃ comparison table at k = 10, 20, ..., 100.
struct Table1Printed {
  unsigned long k;
  const char* partial_sum;  ///< one significant digit
  const char* pade;         ///< [k/k], 17 decimals
  const char* delta;        ///< 17 decimals
};
const std::vector<Table1Printed>& table1_printed();

/// True if x rounds to `printed` at the printed number of significant digits.
bool matches_printed(const Real& x, std::string_view printed);

}  // namespace divsum::cli
