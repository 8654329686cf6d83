#include "divsum/reference/quadrature.hpp"

#include <map>
#include <memory>
#include <tuple>

namespace divsum::quadrature {

QuadratureSpec QuadratureSpec::finite(Real lower, Real upper, int target_digits) {
  return QuadratureSpec{Scheme::finite_interval, std::move(lower), std::move(upper), target_digits, 12, std::nullopt};
}

QuadratureSpec QuadratureSpec::semi_infinite(Real lower, int target_digits) {
  const Bits bits = lower.precision();
  return QuadratureSpec{Scheme::semi_infinite, std::move(lower), Real(bits), target_digits, 12, std::nullopt};
}

namespace detail {

namespace {

constexpr double kFirstStep = 0.5;
constexpr double kHalfPi = 1.5707963267948966;
constexpr double kLn10 = 2.302585092994046;

struct Limits {
  double max_u_negative;
  double max_u_positive;
};

// Nodes stop once the endpoint distance drops below 10^-(4d+40), or, on the
// unbounded side, once the abscissa exceeds 1e9.
Limits limits_for(Scheme scheme, Bits bits) {
  const double digits = digits_for_bits(bits);
  if (scheme == Scheme::finite_interval) {
    const double u = (4.0 * digits + 40.0) * kLn10 / 2.0;
    return {u, u};
  }
  return {(4.0 * digits + 40.0) * kLn10, 9.0 * kLn10};
}

void push_node(Scheme scheme, const Real& t, const Real& half_pi, NodeSide& side) {
  const Real u = half_pi * sinh(abs(t));
  const Real ch = cosh(t);
  if (scheme == Scheme::finite_interval) {
    const Real c = 1L / (exp(2L * u) + 1L);
    side.weight.push_back(2L * half_pi * ch * c * (1L - c));
    side.offset.push_back(c);
    return;
  }
  Real x = t.sign() < 0 ? exp(-u) : exp(u);
  side.weight.push_back(half_pi * ch * x);
  side.offset.push_back(std::move(x));
}

Level build_level(Scheme scheme, Bits bits, int level) {
  const Real half_pi = pi(bits) / 2L;
  Level out{Real(kFirstStep, bits) / pow(Real(2L, bits), static_cast<long>(level)), std::nullopt, {}, {}};
  const Limits lim = limits_for(scheme, bits);
  if (level == 0) {
    if (scheme == Scheme::finite_interval) {
      out.center = std::make_pair(Real(0.5, bits), half_pi / 2L);
    } else {
      out.center = std::make_pair(Real(1L, bits), half_pi);
    }
  }
  auto fill = [&](NodeSide& side, int sign, double max_u) {
    for (long i = 0;; ++i) {
      const long multiple = level == 0 ? i + 1 : 2 * i + 1;
      Real t = out.step * multiple;
      if (kHalfPi * std::sinh(t.to_double()) > max_u) break;
      if (sign < 0) t = -t;
      push_node(scheme, t, half_pi, side);
    }
  };
  fill(out.negative, -1, lim.max_u_negative);
  fill(out.positive, +1, lim.max_u_positive);
  return out;
}

}  // namespace

const Level& level_nodes(Scheme scheme, Bits bits, int level) {
  using Key = std::tuple<int, Bits, int>;
  thread_local std::map<Key, std::unique_ptr<Level>> cache;
  auto& slot = cache[Key{static_cast<int>(scheme), bits, level}];
  if (!slot) slot = std::make_unique<Level>(build_level(scheme, bits, level));
  return *slot;
}

}  // namespace detail

}  // namespace divsum::quadrature
