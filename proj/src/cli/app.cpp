#include "divsum/cli/app.hpp"

#include "divsum/cli/experiments.hpp"
#include "divsum/numerics/errors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace divsum::cli {

namespace {

constexpr const char* kColumns = R"(Output columns (CSV header line, JSON "columns"):
  resum   k, method, approximant_re, approximant_im, reference_re, reference_im,
          abs_error, rel_error, reference_digits, status
  table1  k, partial_sum_inclusive, partial_sum_exclusive, printed_partial_sum,
          pade_inclusive, pade_exclusive, printed_pade,
          delta_gamma_0.5_inclusive, delta_gamma_0.5_exclusive,
          delta_gamma_0.75_inclusive, delta_gamma_0.75_exclusive, printed_delta,
          reference, reference_digits, status
  fig1    k, error, abs_error, envelope, estimate_offset_minus_1,
          estimate_offset_minus_pi_4, reference_digits, status
  fig2    phi, k, abs_error, envelope, abs_estimate, reference_digits, status
  fig3    k, pade_k_k, pade_k1_k, reference, lower, upper, lower_is, brackets,
          reference_digits, status
  fig4    k, delta_rel_error, pade_rel_error, envelope, reference_digits, status
  fig5    k, delta_rel_error, pade_rel_error, reference_digits, status

Numbers are written in scientific notation with --digits-out significant digits;
JSON records hold the same text as strings. Lines starting with '#' carry the
parameters, precision, version and notes. A status other than "ok" marks a
warning row.

Exit codes: 0 success, 2 invalid flags or domain error, 3 quadrature failure.
DIVSUM_DIGITS sets the default working precision.)";

struct Shared {
  std::optional<int> digits;
  int digits_out = 25;
  std::string out_path;
  std::string format = "csv";
  bool wall_time = false;
};

void add_shared(CLI::App& cmd, Shared& s) {
  cmd.add_option("--digits", s.digits, "significant digits of working precision (default 150, >= 50)");
  cmd.add_option("--digits-out", s.digits_out, "significant digits written per number")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();
  cmd.add_option("--out", s.out_path, "output file (default stdout)");
  cmd.add_option("--output", s.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd.add_flag("--wall-time", s.wall_time, "record the elapsed time in the provenance block");
}

PrecisionContext make_context(const Shared& s) {
  int digits = PrecisionContext::kDefaultDigits;
  if (s.digits) {
    digits = *s.digits;
  } else if (const char* env = std::getenv("DIVSUM_DIGITS"); env && *env) {
    try {
      std::size_t used = 0;
      digits = std::stoi(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("DIVSUM_DIGITS is not an integer: '") + env + "'");
    }
  }
  return PrecisionContext(digits);
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  const std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational or decimal number: '" + s + "'"); };
  if (s.empty()) throw bad();
  if (s.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
  }
  std::size_t i = 0;
  const bool negative = s[i] == '-';
  if (s[i] == '-' || s[i] == '+') ++i;
  std::string digits;
  long scale = 0;
  bool point = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.' && !point) {
      point = true;
    } else if (s[i] >= '0' && s[i] <= '9') {
      digits += s[i];
      if (point) --scale;
    } else {
      throw bad();
    }
  }
  if (digits.empty()) throw bad();
  if (i < s.size()) {
    const std::string e = s.substr(i + 1);
    std::size_t used = 0;
    try {
      scale += std::stol(e, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != e.size()) throw bad();
  }
  mpq_class q{mpz_class(digits, 10)};
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale < 0) q /= p; else q *= p;
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resummation of Stieltjes series with the delta transformation and Pade approximants", "divsum"};
  app.footer(kColumns);
  app.require_subcommand(1);
  app.set_version_flag("--version", version_string());

  Shared shared;
  std::string series = "euler", q_text = "0", method = "delta", convention = "raw";
  std::optional<std::string> z_text, z_re_text, z_im_text, gamma_text;
  unsigned long kmax = 20;

  CLI::App* resum = app.add_subcommand("resum", "delta and/or epsilon approximants against the reference value");
  resum->add_option("--series", series, "moment family")
      ->check(CLI::IsMember({"euler", "superfactorial", "factorial-squared"}))
      ->capture_default_str();
  resum->add_option("--q", q_text, "superfactorial parameter, -1 < q < 1 (p/q or decimal)")->capture_default_str();
  auto* z_opt = resum->add_option("--z", z_text, "real argument");
  auto* zr_opt = resum->add_option("--z-re", z_re_text, "real part of the argument");
  auto* zi_opt = resum->add_option("--z-im", z_im_text, "imaginary part of the argument");
  z_opt->excludes(zr_opt)->excludes(zi_opt);
  resum->add_option("--gamma", gamma_text, "delta parameter (default 1 + beta, i.e. 1 + q/2 for superfactorial)");
  resum->add_option("--kmax", kmax, "largest transformation order")->capture_default_str();
  resum->add_option("--method", method, "transformation")
      ->check(CLI::IsMember({"delta", "epsilon", "both"}))
      ->capture_default_str();
  resum->add_option("--convention", convention, "partial-sum convention")
      ->check(CLI::IsMember({"raw", "z-scaled"}))
      ->capture_default_str();
  add_shared(*resum, shared);

  std::string target;
  CLI::App* reproduce = app.add_subcommand("reproduce", "regenerate a table or figure data set");
  reproduce->add_option("target", target, "table1, fig1, fig2, fig3, fig4 or fig5")
      ->required()
      ->check(CLI::IsMember({"table1", "fig1", "fig2", "fig3", "fig4", "fig5"}));
  add_shared(*reproduce, shared);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const PrecisionContext ctx = make_context(shared);
    ExperimentReport report;
    if (resum->parsed()) {
      ResumOptions o;
      o.ctx = ctx;
      o.digits_out = shared.digits_out;
      o.kmax = kmax;
      const mpq_class q = parse_rational(q_text);
      if (series == "superfactorial") {
        o.family = SeriesFamily::superfactorial(q);
      } else {
        if (q != 0) throw std::invalid_argument("--q applies to the superfactorial series only");
        o.family = series == "euler" ? SeriesFamily::euler() : SeriesFamily::factorial_squared();
      }
      const Bits bits = ctx.bits();
      if (z_text) {
        o.z = Complex(Real::parse(*z_text, bits));
      } else if (z_re_text || z_im_text) {
        o.z = Complex(Real::parse(z_re_text.value_or("0"), bits), Real::parse(z_im_text.value_or("0"), bits));
      } else {
        throw std::invalid_argument("one of --z or --z-re/--z-im is required");
      }
      if (gamma_text) {
        o.gamma = parse_rational(*gamma_text);
        if (*o.gamma <= 0) throw std::invalid_argument("--gamma must be positive");
      }
      o.method = method == "delta" ? Method::delta : method == "epsilon" ? Method::epsilon : Method::both;
      o.convention = convention == "raw" ? Convention::raw : Convention::z_scaled;
      report = run_resum(o);
    } else {
      report = run_reproduce(*parse_exhibit(target), ReproduceOptions{ctx, shared.digits_out});
    }
    if (shared.wall_time) {
      report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    const std::string text = shared.format == "json" ? to_json(report) : to_csv(report);
    if (shared.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(shared.out_path);
      if (!file || !(file << text)) {
        err << "divsum: cannot write " << shared.out_path << '\n';
        return kExitFailure;
      }
    }
    if (report.has_warnings()) err << "divsum: warning rows present\n";
    return kExitOk;
  } catch (const DomainError& e) {
    err << "divsum: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "divsum: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "divsum: " << e.what() << '\n';
    return kExitQuadrature;
  } catch (const std::exception& e) {
    err << "divsum: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace divsum::cli
