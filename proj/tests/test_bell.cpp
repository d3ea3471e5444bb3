#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "stieltjes/bell.hpp"
#include "stieltjes/constants.hpp"
#include "test_support.hpp"

using namespace stieltjes;
using test_support::check_close;

namespace {

// Independent oracle: the partition-sum definition of Y_n, exact rationals.
BigRational bell_partition_sum(const std::vector<BigRational>& x, unsigned n) {
  if (n == 0) return BigRational(1);
  BigRational total(0);
  // enumerate multiplicities k_1..k_n with sum i*k_i = n
  std::vector<unsigned> k(n + 1, 0);
  auto factorial = [](unsigned long v) {
    BigInt f(1);
    for (unsigned long i = 2; i <= v; ++i) f *= i;
    return f;
  };
  std::function<void(unsigned, unsigned)> rec = [&](unsigned part, unsigned remaining) {
    if (part > remaining) {
      if (remaining != 0) return;
      BigRational term(factorial(n));
      for (unsigned i = 1; i <= n; ++i) {
        if (k[i] == 0) continue;
        term /= BigRational(factorial(k[i]));
        for (unsigned rep = 0; rep < k[i]; ++rep) {
          term /= BigRational(factorial(i));
          term *= x[i - 1];
        }
      }
      total += term;
      return;
    }
    for (unsigned count = 0; count * part <= remaining; ++count) {
      k[part] = count;
      rec(part + 1, remaining - count * part);
    }
    k[part] = 0;
  };
  rec(1, n);
  return total;
}

std::vector<BigRational> random_rationals(std::mt19937& rng, unsigned count) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<BigRational> out;
  out.reserve(count);
  for (unsigned i = 0; i < count; ++i) out.emplace_back(num(rng), den(rng));
  return out;
}

}  // namespace

TEST_CASE("explicit low-order values") {
  std::vector<BigRational> v{BigRational(2), BigRational(3)};
  CHECK(complete_bell<BigRational>(v, 0) == 1);
  CHECK(complete_bell<BigRational>(v, 2) == 7);

  std::vector<BigRational> ones{BigRational(1), BigRational(1), BigRational(1)};
  CHECK(complete_bell<BigRational>(ones, 3) == 5);

  std::vector<BigRational> alt{BigRational(-1), BigRational(1), BigRational(-1)};
  CHECK(complete_bell<BigRational>(alt, 3) == -5);
}

TEST_CASE("matches the printed polynomials through n = 5") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 25; ++trial) {
    auto x = random_rationals(rng, 5);
    const BigRational x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4];
    CHECK(complete_bell<BigRational>(x, 1) == x1);
    CHECK(complete_bell<BigRational>(x, 2) == x1 * x1 + x2);
    CHECK(complete_bell<BigRational>(x, 3) == x1 * x1 * x1 + 3 * x1 * x2 + x3);
    CHECK(complete_bell<BigRational>(x, 4)
          == x1 * x1 * x1 * x1 + 6 * x1 * x1 * x2 + 4 * x1 * x3 + 3 * x2 * x2 + x4);
    CHECK(complete_bell<BigRational>(x, 5)
          == x1 * x1 * x1 * x1 * x1 + 10 * x1 * x1 * x1 * x2 + 10 * x1 * x1 * x3
                 + 15 * x1 * x2 * x2 + 5 * x1 * x4 + 10 * x2 * x3 + x5);
  }
}

TEST_CASE("recurrence agrees with the partition sum up to n = 8") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    auto x = random_rationals(rng, 8);
    for (unsigned n = 0; n <= 8; ++n)
      CHECK(complete_bell<BigRational>(x, n) == bell_partition_sum(x, n));
  }
}

TEST_CASE("homogeneity, sign flip and positivity") {
  std::mt19937 rng(40925);
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BigRational> x;
    for (unsigned i = 0; i < 6; ++i) x.emplace_back(num(rng), den(rng));
    for (unsigned n = 1; n <= 6; ++n) {
      const BigRational base = complete_bell<BigRational>(x, n);
      // positivity for all-positive arguments
      CHECK(base > 0);
      for (int a : {-1, 2}) {
        std::vector<BigRational> scaled;
        BigRational a_pow(1);
        for (unsigned i = 0; i < 6; ++i) {
          a_pow *= a;
          scaled.push_back(a_pow * x[i]);
        }
        BigRational expected = base;
        for (unsigned i = 0; i < n; ++i) expected *= a;
        CHECK(complete_bell<BigRational>(scaled, n) == expected);
      }
    }
  }
}

TEST_CASE("argument vectors") {
  PrecisionContext ctx(40);
  ScopedPrecision guard(ctx.working_digits());
  const BigFloat base = euler_gamma(ctx) + log_two_pi_q(1, ctx);

  BellArgumentSet g = bell_args(BellKind::G, 1, 2, ctx);
  REQUIRE(g.values.size() == 2);
  check_close(g.values[0], -base, 38, "g(0)");
  check_close(g.values[1], -zeta_int(2, ctx) / 2, 38, "g'(0)");

  BellArgumentSet gq3 = bell_args(BellKind::G, 3, 1, ctx);
  check_close(gq3.values[0], -(euler_gamma(ctx) + log_two_pi_q(3, ctx)), 38, "g(0) q=3");

  BellArgumentSet ps = bell_args(BellKind::PsiStar, 1, 3, ctx);
  REQUIRE(ps.values.size() == 3);
  check_close(ps.values[0], base, 38, "psi*[0]");
  check_close(ps.values[1], zeta_int(2, ctx), 38, "psi*[1]");
  check_close(ps.values[2], 2 * zeta_int(3, ctx), 38, "psi*[2]");

  BellArgumentSet h = bell_args(BellKind::H, 1, 3, ctx);
  check_close(h.values[0], -base, 38, "h(0)");
  check_close(h.values[1], zeta_int(2, ctx) / 2, 38, "h'(0)");
  // even-order derivatives agree between g and h
  check_close(h.values[2], bell_args(BellKind::G, 1, 3, ctx).values[2], 38, "h''=g''");

  CHECK_THROWS_AS(bell_args(BellKind::G, 1, 0, ctx), std::invalid_argument);
  std::vector<BigFloat> too_short{BigFloat(1)};
  CHECK_THROWS_AS(complete_bell<BigFloat>(too_short, 2), std::invalid_argument);
}
