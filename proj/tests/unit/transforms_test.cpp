#include <doctest.h>

#include "divsum/asymptotics/hypergeometric.hpp"
#include "divsum/numerics/errors.hpp"
#include "divsum/numerics/special.hpp"
#include "divsum/transforms/delta.hpp"
#include "divsum/transforms/difference.hpp"
#include "divsum/transforms/epsilon.hpp"

#include <random>

using namespace divsum;

namespace {

const PrecisionContext kCtx(60, 20);

std::vector<Complex> complex_values(const std::vector<double>& xs) {
  std::vector<Complex> out;
  for (double x : xs) out.emplace_back(Real(x, kCtx.bits()));
  return out;
}

mpq_class first_difference_composed(std::vector<mpq_class> g, unsigned long k, std::size_t n) {
  for (unsigned long step = 0; step < k; ++step) {
    for (std::size_t i = 0; i + 1 < g.size(); ++i) g[i] = g[i + 1] - g[i];
    g.pop_back();
  }
  return g.at(n);
}

}  // namespace

TEST_CASE("forward differences") {
  const std::vector<mpq_class> squares{0, 1, 4, 9, 16};
  CHECK(forward_difference(squares, 0, 2) == 4);
  CHECK(forward_difference(squares, 2, 0) == 2);

  const mpq_class t(1, 3);
  std::vector<mpq_class> powers{1};
  for (int i = 0; i < 4; ++i) powers.push_back(powers.back() * t);
  CHECK(forward_difference(powers, 4, 0) == mpq_class(16, 81));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> digits(-50, 50);
  std::vector<mpq_class> g;
  for (int i = 0; i < 16; ++i) g.emplace_back(digits(rng), 1 + (digits(rng) + 50));
  for (auto& v : g) v.canonicalize();
  for (unsigned long k = 0; k <= 10; ++k) {
    for (std::size_t n = 0; n + k < g.size(); ++n) {
      CHECK(forward_difference(g, k, n) == first_difference_composed(g, k, n));
    }
  }
  CHECK_THROWS_AS(forward_difference(squares, 5, 0), std::out_of_range);
}

TEST_CASE("identity for Pochhammer-weighted powers") {
  // Δᵏ{(n+γ)_{k−1} tⁿ} = (−1)ᵏ (n+γ)_{k−1} tⁿ ₂F₁(−k, k+n+γ−1; n+γ; t)
  for (const mpq_class& t : {mpq_class(1, 4), mpq_class(1, 3), mpq_class(1, 2)}) {
    for (const mpq_class& gamma : {mpq_class(1, 2), mpq_class(3, 4), mpq_class(1)}) {
      for (unsigned long k = 1; k <= 15; ++k) {
        for (std::size_t n = 0; n <= 2; ++n) {
          std::vector<mpq_class> g;
          mpq_class power = 1;
          for (std::size_t m = 0; m <= n + k; ++m) {
            g.push_back(pochhammer(mpq_class(gamma + static_cast<unsigned long>(m)), k - 1) * power);
            power *= t;
          }
          mpq_class tn = 1;
          for (std::size_t m = 0; m < n; ++m) tn *= t;
          mpq_class rhs = pochhammer(mpq_class(gamma + static_cast<unsigned long>(n)), k - 1) * tn *
                          hyp2f1_polynomial(k, n, gamma, t);
          if (k % 2 != 0) rhs = -rhs;
          CHECK(forward_difference(g, k, n) == rhs);
        }
      }
    }
  }
}

TEST_CASE("weniger delta basics") {
  const auto fs = PartialSumSequence::from_values(complex_values({1.0, 0.5, 0.75, 0.625, 0.6875}));
  CHECK(weniger_delta(fs, 1, 0, mpq_class(1), kCtx) == fs[1]);
  // Partial sums of Σ(−1/2)^m: δ₁ is exact for a geometric remainder.
  const Complex d = weniger_delta(fs, 0, 1, mpq_class(1), kCtx);
  CHECK(abs(d.re - Real(2L, kCtx.bits()) / 3L) < Real(1e-55, kCtx.bits()));
  const Complex real_gamma = weniger_delta(fs, 0, 3, Real(0.75, kCtx.bits()), kCtx);
  const Complex exact_gamma = weniger_delta(fs, 0, 3, mpq_class(3, 4), kCtx);
  CHECK(abs(real_gamma - exact_gamma) < Real(1e-55, kCtx.bits()));
  CHECK_THROWS_AS(weniger_delta(fs, 0, 4, mpq_class(1), kCtx), std::out_of_range);
  CHECK_THROWS_AS(weniger_delta(fs, 0, 1, mpq_class(0), kCtx), DomainError);
}

TEST_CASE("weniger delta weights") {
  const auto w = delta_weights(0, 3, mpq_class(1));
  REQUIRE(w.size() == 4);
  // (−1)ʲ C(3,j) (j+1)_2
  CHECK(w[0] == 2);
  CHECK(w[1] == -18);
  CHECK(w[2] == 36);
  CHECK(w[3] == -20);
}

TEST_CASE("weniger delta reports a pole") {
  // Arithmetic progression: equal differences make the k = 1 denominator vanish exactly.
  const auto fs = PartialSumSequence::from_values(complex_values({0, 1, 2, 3}));
  try {
    (void)weniger_delta(fs, 0, 1, mpq_class(1), kCtx);
    FAIL("expected VanishingDenominator");
  } catch (const VanishingDenominator& e) {
    CHECK(e.cause() == VanishingDenominator::Cause::pole);
  }
}

TEST_CASE("wynn epsilon") {
  const auto s = complex_values({1.0, 1.5, 1.75});
  const auto table = wynn_epsilon(s, 2);
  CHECK(table.at(0, 1) == s[1]);
  CHECK(table.at(-1, 0)->is_zero());
  CHECK(table.at(2, 0)->re == 2L);

  const auto geometric = complex_values({1.0, 1.5, 1.75, 1.875});
  const auto pair = pade_staircase(geometric, 1);
  REQUIRE(pair.first);
  REQUIRE(pair.second);
  CHECK(pair.first->re == 2L);
  CHECK(pair.second->re == 2L);
  CHECK_THROWS_AS(pade_staircase(s, 1), std::invalid_argument);

  // A constant run poisons the entries built on it.
  const std::vector<mpq_class> flat{1, 1, 1, 2};
  const auto masked = wynn_epsilon(flat, 3);
  CHECK_FALSE(masked.valid(1, 0));
  CHECK_FALSE(masked.valid(1, 1));
  CHECK(masked.valid(1, 2));
  CHECK_FALSE(masked.valid(2, 0));
  CHECK_FALSE(masked.valid(3, 0));
}

TEST_CASE("pade oracle") {
  const std::vector<mpq_class> geometric{1, 1, 1};
  CHECK(pade_small_oracle(geometric, 1, 1, mpq_class(1, 3)) == mpq_class(3, 2));
  const std::vector<mpq_class> exponential{1, 1, mpq_class(1, 2)};
  CHECK(pade_small_oracle(exponential, 1, 1, mpq_class(1)) == 3);
  const std::vector<mpq_class> degenerate{0, 1, 0};
  CHECK_THROWS_AS(pade_small_oracle(degenerate, 0, 1, mpq_class(1)), SingularSystem);
}

TEST_CASE("epsilon even columns equal the Pade oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<mpq_class> c;
    for (int i = 0; i <= 6; ++i) c.push_back(mpq_class(num(rng), den(rng)));
    for (auto& v : c) v.canonicalize();
    mpq_class x(num(rng), den(rng) + 1);
    x.canonicalize();
    std::vector<mpq_class> s;
    mpq_class sum = 0, power = 1;
    for (const auto& ci : c) {
      sum += ci * power;
      power *= x;
      s.push_back(sum);
    }
    const auto table = wynn_epsilon(s, 6);
    for (int k = 1; 2 * k <= 6; ++k) {
      for (std::size_t n = 0; n + 2 * k < s.size(); ++n) {
        if (!table.valid(2 * k, n)) continue;
        CHECK(*table.at(2 * k, n) == pade_small_oracle(c, static_cast<int>(n) + k, k, x));
      }
    }
  }
}
