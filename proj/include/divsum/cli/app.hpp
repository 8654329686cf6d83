#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string_view>

namespace divsum::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,        ///< invalid flags or a domain error
  kExitQuadrature = 3,   ///< a reference integral did not converge
};

/// Parses "p/q", an integer or a decimal such as "-0.25" or "1e-3" exactly.
/// Throws std::invalid_argument.
mpq_class parse_rational(std::string_view text);

/// The `divsum` command line. Reports go to `out` (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace divsum::cli
