#include <doctest.h>

#include "stieltjes/constants.hpp"
#include "stieltjes/rational.hpp"
#include "reference_values.hpp"
#include "test_support.hpp"

using namespace stieltjes;
using test_support::bf;
using test_support::check_close;

TEST_CASE("bell closed form collapses to the digamma values at m = 0") {
  PrecisionContext ctx(40);
  ScopedPrecision guard(ctx.working_digits());
  BigFloat expected = bf(refs::kEulerGamma) + 2 * log(BigFloat(2));
  check_close(stieltjes_rational_bell(0, RationalArg(1, 2), ctx).value, expected, 40,
              "gamma_0(1/2)");
  check_close(stieltjes_rational_bell(0, RationalArg(1, 1), ctx).value, bf(refs::kEulerGamma),
              40, "gamma_0(1)");
  check_close(stieltjes_rational_bell(0, RationalArg(1, 4), ctx).value,
              bf(refs::kGamma0Quarter), 40, "gamma_0(1/4)");
  CHECK_THROWS_AS(stieltjes_rational_bell(8, RationalArg(1, 2), ctx), std::invalid_argument);
}

TEST_CASE("first Stieltjes constant at quarters") {
  PrecisionContext ctx(40);
  ScopedPrecision guard(ctx.working_digits());
  const BigFloat euler = euler_gamma(ctx);
  const BigFloat log2 = log(BigFloat(2));
  const BigFloat gamma1 = stieltjes_at_one(1, ctx).value;

  // displayed closed form built from independent pieces
  BigFloat display = (2 * gamma1 - 7 * log2 * log2 - 6 * euler * log2) / 2
                     - pi(ctx) / 2
                           * (euler + 4 * log2 + 3 * log(pi(ctx))
                              - 4 * log_gamma(BigFloat(1) / 4, ctx));
  check_close(stieltjes_rational_bell(1, RationalArg(1, 4), ctx).value, display, 38,
              "gamma_1(1/4) display");
  check_close(stieltjes_rational_bell(1, RationalArg(1, 4), ctx).value, bf(refs::kGamma1Quarter),
              40, "gamma_1(1/4) frozen");
  check_close(gamma1_rational(RationalArg(1, 4), ctx), bf(refs::kGamma1Quarter), 38,
              "gamma1_rational(1/4)");
  check_close(gamma1_rational(RationalArg(3, 4), ctx), bf(refs::kGamma1ThreeQuarters), 38,
              "gamma1_rational(3/4)");
  check_close(gamma1_rational(RationalArg(1, 5), ctx), bf(refs::kGamma1Fifth), 38,
              "gamma1_rational(1/5)");
}

TEST_CASE("cck representation") {
  PrecisionContext ctx(40);
  ScopedPrecision guard(ctx.working_digits());
  check_close(stieltjes_rational_cck(0, RationalArg(1, 3), ctx).value,
              -digamma(BigFloat(1) / 3, ctx), 40, "cck gamma_0(1/3)");
  check_close(stieltjes_rational_cck(1, RationalArg(1, 2), ctx).value,
              stieltjes_rational_bell(1, RationalArg(1, 2), ctx).value, 42, "cck=bell 1/2");
  check_close(stieltjes_rational_cck(2, RationalArg(2, 5), ctx).value,
              stieltjes_cauchy(StieltjesIndex(2), BigFloat(2) / 5, ctx).value, 25,
              "cck vs oracle 2/5");
  check_close(stieltjes_rational_cck(2, RationalArg(2, 5), ctx).value, bf(refs::kGamma2TwoFifths),
              40, "cck frozen 2/5");
}

TEST_CASE("gamma derivatives at one") {
  PrecisionContext ctx(40);
  ScopedPrecision guard(ctx.working_digits());
  const BigFloat euler = euler_gamma(ctx);
  CHECK(gamma_deriv_at_one(0, ctx) == 1);
  check_close(gamma_deriv_at_one(1, ctx), -euler, 40, "Gamma'(1)");
  check_close(gamma_deriv_at_one(2, ctx), euler * euler + zeta_int(2, ctx), 40, "Gamma''(1)");
}

TEST_CASE("values at x = 1 from zeta derivatives alone") {
  PrecisionContext ctx(40);
  ScopedPrecision guard(ctx.working_digits());
  check_close(stieltjes_at_one(0, ctx).value, bf(refs::kEulerGamma), 40, "at_one 0");
  check_close(stieltjes_at_one(1, ctx).value, bf(refs::kGamma1), 40, "at_one 1");
  check_close(stieltjes_at_one(2, ctx).value, bf(refs::kGamma2), 40, "at_one 2");

  // the n = 2 rearrangement in terms of zeta''(0)
  const BigFloat euler = euler_gamma(ctx);
  const BigFloat a = euler + log(2 * pi(ctx));
  const BigFloat zdd0 = rational_zeta_derivs(1, 2, ctx)[0][2];
  BigFloat rearranged = zdd0 + a * log(2 * pi(ctx)) - (a * a - zeta_int(2, ctx) / 2) / 2;
  check_close(stieltjes_at_one(1, ctx).value, rearranged, 38, "gamma_1 rearrangement");
}

TEST_CASE("digamma closed forms") {
  PrecisionContext ctx(40);
  ScopedPrecision guard(ctx.working_digits());
  const BigFloat euler = euler_gamma(ctx);
  check_close(digamma_rational(RationalArg(1, 2), ctx), -euler - 2 * log(BigFloat(2)), 42,
              "psi(1/2)");
  check_close(digamma_rational(RationalArg(1, 4), ctx),
              -euler - 3 * log(BigFloat(2)) - pi(ctx) / 2, 42, "psi(1/4)");
  for (unsigned q = 2; q <= 8; ++q)
    for (unsigned p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      BigFloat x = BigFloat(p) / q;
      check_close(digamma_rational(RationalArg(p, q), ctx), digamma(x, ctx), 40,
                  "psi closed vs direct");
      check_close(digamma_rational_gauss(RationalArg(p, q), ctx), digamma(x, ctx), 40,
                  "psi gauss vs direct");
    }
  CHECK_THROWS_AS(digamma_rational(RationalArg(1, 1), ctx), std::domain_error);
  CHECK_THROWS_AS(digamma_rational(RationalArg(3, 3), ctx), std::domain_error);
  CHECK_THROWS_AS(gamma1_rational(RationalArg(1, 1), ctx), std::domain_error);
}

TEST_CASE("path equivalence and oracle agreement across the grid") {
  PrecisionContext ctx(40);
  ScopedPrecision guard(ctx.working_digits());
  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned q = 1; q <= 6; ++q)
      for (unsigned p = 1; p <= (q == 1 ? 1u : q - 1); ++p) {
        if (std::gcd(p, q) != 1) continue;
        RationalArg arg(p, q);
        BigFloat via_bell = stieltjes_rational_bell(m, arg, ctx).value;
        BigFloat via_cck = stieltjes_rational_cck(m, arg, ctx).value;
        INFO("m=", m, " p=", p, " q=", q);
        CHECK(abs(via_bell - via_cck) < test_support::pow10(-30));
        BigFloat via_ring = stieltjes_cauchy(StieltjesIndex(m), BigFloat(p) / q, ctx).value;
        CHECK(abs(via_bell - via_ring) < test_support::pow10(-25));
      }
}

TEST_CASE("both closed forms see identical zeta-derivative inputs") {
  PrecisionContext ctx(30);
  ScopedPrecision guard(ctx.working_digits());
  ClosedFormTrace bell_trace, cck_trace;
  stieltjes_rational_bell(2, RationalArg(2, 5), ctx, &bell_trace);
  stieltjes_rational_cck(2, RationalArg(2, 5), ctx, &cck_trace);
  REQUIRE(bell_trace.zeta_derivs_used.size() == 5);
  REQUIRE(cck_trace.zeta_derivs_used.size() == 5);
  for (unsigned r = 0; r < 5; ++r)
    for (unsigned j = 0; j <= 3; ++j)
      CHECK(bell_trace.zeta_derivs_used[r][j] == cck_trace.zeta_derivs_used[r][j]);
  CHECK(bell_trace.per_r_contributions.size() == 5);
}

TEST_CASE("degenerate argument matches the x = 1 formula") {
  PrecisionContext ctx(35);
  ScopedPrecision guard(ctx.working_digits());
  for (unsigned m = 0; m <= 4; ++m)
    check_close(stieltjes_rational_bell(m, RationalArg(1, 1), ctx).value,
                stieltjes_at_one(m, ctx).value, 30, "bell(1/1) vs at_one");
}

TEST_CASE("half-argument reflection against the x = 1 values") {
  // n gamma_{n-1}(1/2) = n gamma_{n-1} - 2 sum C(n,i) Y_i(g(0); q=2) zeta^{(n-i)}(0, 1/2)
  PrecisionContext ctx(35);
  ScopedPrecision guard(ctx.working_digits());
  const auto& zd_half = rational_zeta_derivs(2, 5, ctx);
  for (unsigned n = 1; n <= 4; ++n) {
    BellArgumentSet g = bell_args(BellKind::G, 2, n, ctx);
    BigFloat sum(0);
    for (unsigned i = 0; i <= n; ++i)
      sum += BigFloat(binomial(n, i)) * complete_bell(g, i) * zd_half[0][n - i];
    BigFloat rhs = n * stieltjes_at_one(n - 1, ctx).value - 2 * sum;
    BigFloat lhs = n * stieltjes_rational_bell(n - 1, RationalArg(1, 2), ctx).value;
    check_close(lhs, rhs, 28, "half reflection");
  }
}

TEST_CASE("deninger arrangement agrees with the explicit one") {
  PrecisionContext ctx(35);
  ScopedPrecision guard(ctx.working_digits());
  for (unsigned q = 2; q <= 6; ++q)
    for (unsigned p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      check_close(gamma1_rational(RationalArg(p, q), ctx),
                  gamma1_rational_deninger(RationalArg(p, q), ctx), 30, "deninger equiv");
    }
}

TEST_CASE("sum and difference structure at the quarters") {
  PrecisionContext ctx(40);
  ScopedPrecision guard(ctx.working_digits());
  const BigFloat euler = euler_gamma(ctx);
  const BigFloat log2 = log(BigFloat(2));
  BigFloat a = gamma1_rational(RationalArg(1, 4), ctx);
  BigFloat b = gamma1_rational(RationalArg(3, 4), ctx);
  BigFloat gamma1 = stieltjes_at_one(1, ctx).value;
  check_close(a + b, 2 * gamma1 - 7 * log2 * log2 - 6 * euler * log2, 38, "sum structure");
  BigFloat diff_expected = -pi(ctx)
                           * (euler + 4 * log2 + 3 * log(pi(ctx))
                              - 4 * log_gamma(BigFloat(1) / 4, ctx));
  check_close(a - b, diff_expected, 38, "difference structure");
}

TEST_CASE("vanishing and half-turn trigonometric prerequisites") {
  PrecisionContext ctx(30);
  ScopedPrecision guard(ctx.working_digits());
  for (unsigned q = 2; q <= 8; ++q) {
    for (unsigned p = 1; p < q; ++p) {
      BigFloat sin_sum(0), cos_sum(0), r_sin(0), r_cos(0);
      for (unsigned r = 1; r <= q; ++r) {
        BigFloat angle = 2 * pi(ctx) * ((r * p) % q) / q;
        sin_sum += sin(angle);
        cos_sum += cos(angle);
        r_sin += r * sin(angle);
        r_cos += r * cos(angle);
      }
      BigFloat cot = cos(pi(ctx) * p / q) / sin(pi(ctx) * p / q);
      CHECK(abs(sin_sum) < ctx.tolerance());
      CHECK(abs(cos_sum) < ctx.tolerance());
      CHECK(abs(r_sin + BigFloat(q) / 2 * cot) < ctx.tolerance());
      CHECK(abs(r_cos - BigFloat(q) / 2) < ctx.tolerance());
    }
  }
}
