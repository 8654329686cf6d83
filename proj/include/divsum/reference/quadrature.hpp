#pragma once

#include "divsum/numerics/errors.hpp"
#include "divsum/numerics/precision.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace divsum::quadrature {

enum class Scheme {
  finite_interval,  ///< tanh-sinh on [lower, upper]
  semi_infinite,    ///< exp-sinh on [lower, ∞)
};

/// How an integral is evaluated.
struct QuadratureSpec {
  Scheme scheme = Scheme::finite_interval;
  Real lower;
  Real upper;  ///< ignored for semi_infinite
  int target_digits = PrecisionContext::kDefaultDigits;
  int max_level = 12;
  /// Abscissae beyond this are skipped (semi_infinite only).
  std::optional<Real> tail_cutoff;

  static QuadratureSpec finite(Real lower, Real upper, int target_digits);
  static QuadratureSpec semi_infinite(Real lower, int target_digits);
};

template <class Value>
struct QuadratureResult {
  Value value;
  /// log10 of the estimated relative error.
  double log10_error = 0.0;
  bool converged = false;
  int levels = 0;
  std::size_t evaluations = 0;

  int achieved_digits() const {
    return log10_error <= -1e6 ? std::numeric_limits<int>::max() / 2 : static_cast<int>(std::floor(-log10_error));
  }
};

namespace detail {

/// Abscissae and weights of one refinement level on the reference domain, ordered
/// by increasing |t|. For the finite scheme `offset` is the distance to the nearer
/// endpoint as a fraction of the interval length; for the semi-infinite scheme it
/// is x − lower.
struct NodeSide {
  std::vector<Real> offset;
  std::vector<Real> weight;
};

struct Level {
  Real step;
  std::optional<std::pair<Real, Real>> center;  ///< level 0 only: (offset, weight)
  NodeSide negative;                             ///< t < 0
  NodeSide positive;                             ///< t > 0
};

/// Nodes for `level` at `bits`, computed once per thread and reused.
const Level& level_nodes(Scheme scheme, Bits bits, int level);

inline double log10_abs(const Real& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, x.raw(), MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

inline double log10_abs(const Complex& z) { return log10_abs(abs(z)); }

}  // namespace detail

/// Double-exponential quadrature with node doubling between levels.
///
/// `f` maps a Real abscissa to Real or Complex. Endpoint singularities of
/// algebraic type t^q (q > −1) are tolerated. The error estimate is built from the
/// differences between successive levels plus the size of the truncated tails.
/// Non-convergence at `max_level` is reported through `converged == false`; use
/// integrate_or_throw() to turn it into a ConvergenceError.
template <class F>
auto integrate(F&& f, const QuadratureSpec& spec, const PrecisionContext& ctx)
    -> QuadratureResult<std::decay_t<std::invoke_result_t<F&, const Real&>>> {
  using Value = std::decay_t<std::invoke_result_t<F&, const Real&>>;
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  const Bits bits = ctx.bits();
  const bool finite = spec.scheme == Scheme::finite_interval;
  const Real lower = spec.lower.rounded(bits);
  const Real upper = finite ? spec.upper.rounded(bits) : Real(bits);
  const Real length = finite ? Real(upper - lower) : Real(1L, bits);
  const double target = static_cast<double>(spec.target_digits);
  const double working = static_cast<double>(ctx.working_digits());
  const double log_length = detail::log10_abs(length);

  QuadratureResult<Value> result{Value(bits)};
  Value sum(bits);
  Real magnitude(bits);  // Σ|term|, to detect cancellation
  std::vector<Value> level_sums;
  double largest_term = kNegInf;
  double dropped_term = kNegInf;  // largest term left out by level-0 truncation
  // |t| limits discovered on level 0; finer levels stay within them.
  double t_limit_neg = std::numeric_limits<double>::infinity();
  double t_limit_pos = std::numeric_limits<double>::infinity();

  auto eval = [&](const Real& offset, bool right_side) -> Value {
    ++result.evaluations;
    if (finite) return right_side ? f(upper - length * offset) : f(lower + length * offset);
    return f(lower + offset);
  };

  for (int level = 0; level <= spec.max_level; ++level) {
    const detail::Level& nodes = detail::level_nodes(spec.scheme, bits, level);
    const double step = nodes.step.to_double();
    auto add = [&](Value term) {
      magnitude += abs(term);
      sum += term;
    };
    if (nodes.center) {
      Value term = eval(nodes.center->first, false) * nodes.center->second;
      largest_term = std::max(largest_term, detail::log10_abs(term));
      add(std::move(term));
    }
    auto walk = [&](const detail::NodeSide& side, bool right_side, double& t_limit) {
      int small_run = 0;
      for (std::size_t i = 0; i < side.offset.size(); ++i) {
        const double t = level == 0 ? step * static_cast<double>(i + 1) : step * static_cast<double>(2 * i + 1);
        if (t > t_limit) break;
        if (!finite && right_side && spec.tail_cutoff && side.offset[i] > *spec.tail_cutoff) {
          if (level == 0) t_limit = t;
          break;
        }
        Value term = eval(side.offset[i], right_side) * side.weight[i];
        if (level == 0) {
          // Terms far below the largest one cannot change the sum at working precision.
          const double size = detail::log10_abs(term);
          largest_term = std::max(largest_term, size);
          if (size < largest_term - (working + 2.0)) {
            if (++small_run >= 3) {
              t_limit = t;
              dropped_term = std::max(dropped_term, size);
              add(std::move(term));
              break;
            }
          } else {
            small_run = 0;
          }
        }
        add(std::move(term));
      }
    };
    walk(nodes.negative, false, t_limit_neg);
    walk(nodes.positive, true, t_limit_pos);

    Value estimate = sum;
    estimate *= length * nodes.step;
    level_sums.push_back(estimate);
    result.value = estimate;
    result.levels = level + 1;

    if (level_sums.size() >= 3) {
      const Value& cur = level_sums[level_sums.size() - 1];
      const double scale = detail::log10_abs(cur);
      const double log_magnitude = detail::log10_abs(magnitude) + log_length + std::log10(step);
      if (scale == kNegInf && log_magnitude == kNegInf) {
        result.log10_error = kNegInf;
        result.converged = true;
        return result;
      }
      const double d1 = detail::log10_abs(Value(cur - level_sums[level_sums.size() - 2])) - scale;
      const double d2 = detail::log10_abs(Value(cur - level_sums[level_sums.size() - 3])) - scale;
      // Rounding floor, raised by however much the terms cancel.
      const double floor_err = -working + 1.0 + std::max(0.0, log_magnitude - scale);
      const double tail = dropped_term + log_length + std::log10(nodes.step.to_double() * (1 << level)) - scale;
      double err;
      if (d1 == kNegInf) {
        err = floor_err;
      } else if (d2 == kNegInf || d2 <= d1) {
        err = d1;
      } else {
        // Ideal double-exponential convergence doubles the digits per level; near
        // singularities close to the contour it is slower, so credit at most 1.5x.
        err = d1 * std::min(d1 / d2, 1.5);
      }
      err = std::max({err, tail, floor_err});
      result.log10_error = err;
      if (err <= -target) {
        result.converged = true;
        return result;
      }
    }
  }
  return result;
}

/// integrate(), throwing ConvergenceError when max_level is exhausted.
template <class F>
auto integrate_or_throw(F&& f, const QuadratureSpec& spec, const PrecisionContext& ctx, const std::string& what) {
  auto result = integrate(std::forward<F>(f), spec, ctx);
  if (!result.converged) {
    throw ConvergenceError(what + ": quadrature did not reach 1e-" + std::to_string(spec.target_digits) +
                               " (achieved 1e" + std::to_string(static_cast<int>(std::ceil(result.log10_error))) +
                               ")",
                           result.log10_error);
  }
  return result;
}

}  // namespace divsum::quadrature
