#include <doctest.h>

#include "stieltjes/constants.hpp"
#include "stieltjes/precision.hpp"
#include "reference_values.hpp"
#include "test_support.hpp"

using namespace stieltjes;
using test_support::bf;
using test_support::check_close;

TEST_CASE("context policy") {
  CHECK(make_context(50).working_digits() >= 70);
  CHECK(make_context(1).working_digits() >= 21);
  CHECK(make_context(1000).working_digits() >= 1250);
  CHECK_THROWS_AS(make_context(0), std::invalid_argument);

  PrecisionContext ctx(30);
  CHECK(ctx.working_digits() > ctx.target_digits());
  CHECK(ctx.tolerance() > 0);
  CHECK(ctx.tolerance() < 1);
}

TEST_CASE("rational argument reduction and guards") {
  RationalArg a(2, 4);
  CHECK(a.p == 1);
  CHECK(a.q == 2);
  RationalArg b(4, 4);
  CHECK(b.is_one());
  CHECK_THROWS_AS(RationalArg(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(RationalArg(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(RationalArg(5, 4), std::invalid_argument);
}

TEST_CASE("complex scalar arithmetic") {
  ScopedPrecision guard(50);
  BigComplex a{BigFloat(3), BigFloat(4)};
  CHECK(abs(a) == 5);
  BigComplex r = a / a;
  CHECK(abs(r.re - 1) < test_support::pow10(-45));
  CHECK(abs(r.im) < test_support::pow10(-45));
  // exp(i pi) = -1
  PrecisionContext ctx(40);
  BigComplex ip{BigFloat(0), pi(ctx)};
  BigComplex e = exp(ip);
  CHECK(abs(e.re + 1) < test_support::pow10(-38));
  CHECK(abs(e.im) < test_support::pow10(-38));
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == BigRational(-1, 2));
  CHECK(bernoulli(12) == BigRational(-691, 2730));
  for (unsigned k = 1; k <= 15; ++k) CHECK(bernoulli(2 * k + 1) == 0);
  // recurrence residual: sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1, exact
  for (unsigned n = 1; n <= 40; ++n) {
    BigRational acc(0);
    for (unsigned k = 0; k <= n; ++k) acc += BigRational(binomial(n + 1, k)) * bernoulli(k);
    CHECK(acc == 0);
  }
}

TEST_CASE("euler gamma") {
  PrecisionContext ctx(30);
  check_close(euler_gamma(ctx), bf(refs::kEulerGamma), 30, "euler 30");

  PrecisionContext wide(60);
  check_close(euler_gamma(wide), bf(refs::kEulerGamma), 60, "euler 60");

  // independent MPFR value to full working precision
  ScopedPrecision guard(wide.working_digits());
  BigFloat mpfr_value;
  mpfr_const_euler(mpfr_value.backend().data(), MPFR_RNDN);
  check_close(euler_gamma(wide), mpfr_value, 75, "euler vs mpfr");
}

TEST_CASE("zeta at integers") {
  PrecisionContext ctx(30);
  ScopedPrecision guard(ctx.working_digits());
  BigFloat pi2_over_6 = pi(ctx) * pi(ctx) / 6;
  check_close(zeta_int(2, ctx), pi2_over_6, 30, "zeta(2) vs pi^2/6");
  check_close(zeta_int(2, ctx), bf(refs::kZeta2), 30, "zeta(2)");
  check_close(zeta_int(3, PrecisionContext(20)), bf(refs::kZeta3), 20, "zeta(3)");
  CHECK_THROWS_AS(zeta_int(1, ctx), std::invalid_argument);
  CHECK_THROWS_AS(zeta_int(0, ctx), std::invalid_argument);
}

TEST_CASE("precision stability under +10 digits") {
  // recomputing wider and rounding back reproduces the narrow value
  PrecisionContext narrow(25), wide(35);
  BigFloat a = euler_gamma(narrow);
  BigFloat b = at_precision(euler_gamma(wide), narrow.working_digits());
  check_close(a, b, 40, "euler stability");
  BigFloat za = zeta_int(5, narrow);
  BigFloat zb = at_precision(zeta_int(5, wide), narrow.working_digits());
  check_close(za, zb, 40, "zeta(5) stability");
}
