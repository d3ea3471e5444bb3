#include "stieltjes/identities.hpp"

#include <functional>
#include <map>
#include <shared_mutex>
#include <sstream>

#include "stieltjes/constants.hpp"
#include "stieltjes/hurwitz.hpp"
#include "stieltjes/rational.hpp"
#include "stieltjes/stieltjes.hpp"
#include "quadrature.hpp"
#include "trig.hpp"

namespace stieltjes {

namespace {

// ---------------------------------------------------------------------------
// parameter plumbing

// "a/b" or a decimal string, as an exact rational.
BigRational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return BigRational(num, den);
  }
  std::string t = text;
  auto dot = t.find('.');
  unsigned long shift = 0;
  if (dot != std::string::npos) {
    shift = t.size() - dot - 1;
    t.erase(dot, 1);
  }
  BigInt num(t);
  BigInt den(1);
  for (unsigned long i = 0; i < shift; ++i) den *= 10;
  return BigRational(num, den);
}

BigFloat to_float(const BigRational& r, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  return BigFloat(r);
}

struct Fraction {
  unsigned long num;
  unsigned long den;
};

Fraction as_fraction(const BigRational& r) {
  if (r <= 0) throw std::domain_error("identity parameter must be positive");
  return {static_cast<unsigned long>(numerator(r)), static_cast<unsigned long>(denominator(r))};
}

// ---------------------------------------------------------------------------
// cached oracle values at rational arguments

std::shared_mutex g_gamma_mutex;
std::map<std::tuple<unsigned, unsigned long, unsigned long, unsigned>, BigFloat> g_gamma_cache;

// gamma_n at a rational point via the Cauchy-ring oracle, cached per
// (n, argument, working digits).
BigFloat gamma_oracle(unsigned n, const BigRational& x, const PrecisionContext& ctx) {
  Fraction f = as_fraction(x);
  const auto key = std::make_tuple(n, f.num, f.den, ctx.working_digits());
  {
    std::shared_lock lock(g_gamma_mutex);
    auto it = g_gamma_cache.find(key);
    if (it != g_gamma_cache.end()) return it->second;
  }
  BigFloat value = stieltjes_cauchy(StieltjesIndex(n), to_float(x, ctx), ctx).value;
  std::unique_lock lock(g_gamma_mutex);
  return g_gamma_cache.emplace(key, std::move(value)).first->second;
}

// zeta^(j)(0, x) at a rational point in (0, 1], through the shared
// per-denominator derivative matrices.
BigFloat zeta_deriv_rational(unsigned j, const BigRational& x, const PrecisionContext& ctx) {
  Fraction f = as_fraction(x);
  if (f.num > f.den) throw std::domain_error("zeta_deriv_rational: requires x <= 1");
  const auto& matrix = rational_zeta_derivs(static_cast<unsigned>(f.den), j, ctx);
  return matrix[f.num - 1][j];
}

BigFloat a_const(unsigned q, const PrecisionContext& ctx) {
  return euler_gamma(ctx) + log_two_pi_q(q, ctx);
}

// ---------------------------------------------------------------------------
// registry scaffolding

struct Evaluated {
  BigFloat lhs;
  BigFloat rhs;
};

enum class ToleranceKind { ContextDefault, Ramanujan, HasseSeries };

struct IdentityDef {
  std::string name;
  ToleranceKind tolerance = ToleranceKind::ContextDefault;
  std::function<Evaluated(const IdentityParams&, const PrecisionContext&)> eval;
  std::function<std::vector<IdentityParams>(const SuiteOptions&)> default_grid;
};

std::vector<std::pair<unsigned, unsigned>> reduced_pairs(unsigned q_max, unsigned q_min = 2) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned q = q_min; q <= q_max; ++q)
    for (unsigned p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

long need_long(const std::optional<long>& v, const char* what) {
  if (!v) throw std::invalid_argument(std::string("identity parameter missing: ") + what);
  return *v;
}

std::string need_str(const std::optional<std::string>& v, const char* what) {
  if (!v) throw std::invalid_argument(std::string("identity parameter missing: ") + what);
  return *v;
}

void require_proper_fraction(long p, long q) {
  if (p < 1 || q < 2 || p >= q)
    throw std::invalid_argument("identity requires 1 <= p < q");
}

BigFloat real_s(const IdentityParams& params, const PrecisionContext& ctx) {
  return to_float(parse_rational(need_str(params.s, "s")), ctx);
}

// ---------------------------------------------------------------------------
// evaluators

Evaluated eval_rademacher(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long p = need_long(params.p, "p"), q = need_long(params.q, "q");
  if (p < 1 || q < 1 || p > q) throw std::invalid_argument("rademacher: requires 1 <= p <= q");
  const BigFloat s = real_s(params, ctx);
  if (abs(s) <= ctx.tolerance() || (s > 0 && abs(s - round(s)) <= ctx.tolerance()))
    throw std::invalid_argument("rademacher: s must avoid 0 and the positive integers");
  const BigFloat lhs = hurwitz_zeta(s, BigFloat(p) / q, ctx);

  detail::TrigTable trig(static_cast<unsigned>(q), ctx);
  const BigFloat half_pi_s = pi(ctx) * s / 2;
  const BigFloat sin_ps = sin(half_pi_s), cos_ps = cos(half_pi_s);
  BigFloat sum(0);
  for (long j = 1; j <= q; ++j) {
    BigFloat phase = sin_ps * trig.cos_rp(j, p) + cos_ps * trig.sin_rp(j, p);
    sum += phase * hurwitz_zeta(1 - s, BigFloat(j) / q, ctx);
  }
  const BigFloat rhs =
      2 * gamma(1 - s, ctx) * pow(2 * pi(ctx) * q, s - 1) * sum;
  return {lhs, rhs};
}

Evaluated eval_rademacher_reflected(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long p = need_long(params.p, "p"), q = need_long(params.q, "q");
  if (p < 1 || q < 1 || p > q) throw std::invalid_argument("rademacher-reflected: requires 1 <= p <= q");
  const BigFloat s = real_s(params, ctx);
  if (abs(s) <= ctx.tolerance() || abs(s - 1) <= ctx.tolerance() ||
      (s < 0 && abs(s - round(s)) <= ctx.tolerance()))
    throw std::invalid_argument("rademacher-reflected: s must avoid 1 and the nonpositive integers");
  const BigFloat lhs = hurwitz_zeta(1 - s, BigFloat(p) / q, ctx);

  detail::TrigTable trig(static_cast<unsigned>(q), ctx);
  const BigFloat half_pi_s = pi(ctx) * s / 2;
  const BigFloat sin_ps = sin(half_pi_s), cos_ps = cos(half_pi_s);
  BigFloat sum(0);
  for (long j = 1; j <= q; ++j) {
    // cos(2 pi j p / q - pi s / 2)
    BigFloat phase = trig.cos_rp(j, p) * cos_ps + trig.sin_rp(j, p) * sin_ps;
    sum += phase * hurwitz_zeta(s, BigFloat(j) / q, ctx);
  }
  const BigFloat rhs = 2 * gamma(s, ctx) * pow(2 * pi(ctx) * q, -s) * sum;
  return {lhs, rhs};
}

Evaluated eval_hasse_x_derivative(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long n = need_long(params.n, "n");
  if (n < 1 || n > 6) throw std::invalid_argument("hasse-x-derivative: requires 1 <= n <= 6");
  const BigRational x = parse_rational(need_str(params.x, "x"));
  const unsigned j_max = params.j_max ? static_cast<unsigned>(*params.j_max) : 400u;

  // Central finite difference of zeta^(n)(0, x) in x; step keeps the h^2
  // truncation below the context tolerance.
  long tol_digits = static_cast<long>(ctx.target_digits())
                    - static_cast<long>(PrecisionContext::kToleranceSlack) + 6;
  if (tol_digits < 4) tol_digits = 4;
  const unsigned hd = static_cast<unsigned>(tol_digits / 2 + 2);
  const BigFloat h = pow(BigFloat(10), -static_cast<long>(hd));
  const BigFloat xf = to_float(x, ctx);
  const BigFloat fd = (zeta_deriv_at0(static_cast<unsigned>(n), xf + h, ctx)
                       - zeta_deriv_at0(static_cast<unsigned>(n), xf - h, ctx)) / (2 * h);

  HasseSum series = hasse_double_sum(static_cast<unsigned>(n), xf, ctx, j_max);
  const BigFloat rhs = (n % 2 == 0) ? -series.value : series.value;
  return {fd, rhs};
}

Evaluated eval_stieltjes_integral(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long n = need_long(params.n, "n");
  if (n < 0 || n > 4) throw std::invalid_argument("stieltjes-integral: requires 0 <= n <= 4");
  const BigFloat x = to_float(parse_rational(need_str(params.x, "x")), ctx);
  if (x <= 0) throw std::invalid_argument("stieltjes-integral: requires x > 0");

  const BigFloat quad_tol = std::min(pow(BigFloat(10), -12), ctx.tolerance() / 16);
  auto integrand = [&](const BigFloat& t) {
    return stieltjes_cauchy(StieltjesIndex(static_cast<unsigned>(n)), t, ctx).value;
  };
  const BigFloat lhs = detail::integrate(integrand, BigFloat(1), x, quad_tol, ctx);

  BigFloat diff = zeta_deriv_at0(static_cast<unsigned>(n) + 1, x, ctx)
                  - rational_zeta_derivs(1, static_cast<unsigned>(n) + 1, ctx)[0][n + 1];
  BigFloat rhs = diff / (n + 1);
  if (n % 2 == 0) rhs = -rhs;  // (-1)^{n+1}
  return {lhs, rhs};
}

Evaluated eval_kubert(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long q = need_long(params.q, "q");
  if (q < 1) throw std::invalid_argument("kubert: requires q >= 1");
  const BigFloat s = real_s(params, ctx);
  const BigFloat x = to_float(parse_rational(need_str(params.x, "x")), ctx);
  const BigFloat lhs = pow(BigFloat(q), s) * hurwitz_zeta(s, x, ctx);
  BigFloat rhs(0);
  for (long r = 0; r < q; ++r) rhs += hurwitz_zeta(s, (r + x) / q, ctx);
  return {lhs, rhs};
}

Evaluated eval_zeta_dd_sum(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long q = need_long(params.q, "q");
  if (q < 2) throw std::invalid_argument("zeta-dd-sum: requires q >= 2");
  const auto& zd = rational_zeta_derivs(static_cast<unsigned>(q), 2, ctx);
  BigFloat lhs(0);
  for (long r = 1; r < q; ++r) lhs += zd[r - 1][2];
  const BigFloat log_q = log(BigFloat(q));
  const BigFloat rhs = -log_q * log(2 * pi(ctx)) - log_q * log_q / 2;
  return {lhs, rhs};
}

Evaluated eval_gauss_mult_gamma(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long q = need_long(params.q, "q");
  if (q < 1) throw std::invalid_argument("gauss-mult-gamma: requires q >= 1");
  const BigFloat x = to_float(parse_rational(need_str(params.x, "x")), ctx);
  const BigFloat lhs = log_gamma(x, ctx);
  BigFloat rhs(0);
  for (long r = 0; r < q; ++r) rhs += log_gamma((r + x) / q, ctx);
  rhs -= BigFloat(q - 1) / 2 * log(2 * pi(ctx));
  rhs -= (BigFloat(1) / 2 - x) * log(BigFloat(q));
  return {lhs, rhs};
}

Evaluated eval_mult_zeta_dd(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long q = need_long(params.q, "q");
  if (q < 1) throw std::invalid_argument("mult-zeta-dd: requires q >= 1");
  const BigFloat x = to_float(parse_rational(need_str(params.x, "x")), ctx);
  const BigFloat log_q = log(BigFloat(q));
  const BigFloat lhs = zeta_deriv_at0(2, x, ctx)
                       + 2 * log_q * (log_gamma(x, ctx) - log(2 * pi(ctx)) / 2)
                       + (BigFloat(1) / 2 - x) * log_q * log_q;
  BigFloat rhs(0);
  for (long r = 0; r < q; ++r) rhs += zeta_deriv_at0(2, (r + x) / q, ctx);
  return {lhs, rhs};
}

Evaluated eval_mult_zeta_dd_doubling(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const BigFloat x = to_float(parse_rational(need_str(params.x, "x")), ctx);
  if (x <= 0) throw std::invalid_argument("mult-zeta-dd-doubling: requires x > 0");
  const BigFloat log2 = log(BigFloat(2));
  const BigFloat lhs = zeta_deriv_at0(2, 2 * x, ctx)
                       + 2 * log2 * (log_gamma(2 * x, ctx) - log(2 * pi(ctx)) / 2)
                       + log2 * log2 * (BigFloat(1) / 2 - 2 * x);
  const BigFloat rhs = zeta_deriv_at0(2, x, ctx) + zeta_deriv_at0(2, x + BigFloat(1) / 2, ctx);
  return {lhs, rhs};
}

Evaluated eval_func_eq_zdd(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const BigRational x = parse_rational(need_str(params.x, "x"));
  if (!(x > 0 && x < BigRational(1, 2)))
    throw std::invalid_argument("func-eq-zdd: requires 0 < x < 1/2");
  const BigRational half(1, 2), one(1);
  auto zdd = [&](const BigRational& t) { return zeta_deriv_rational(2, t, ctx); };
  const BigFloat lhs = zdd(x + half) + zdd(half - x);
  const BigFloat xf = to_float(x, ctx);
  const BigFloat rhs = zdd(2 * x) + zdd(one - 2 * x) - (zdd(x) + zdd(one - x))
                       - 2 * log(BigFloat(2)) * log(2 * sin(2 * pi(ctx) * xf));
  return {lhs, rhs};
}

Evaluated eval_func_eq_gamma1(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const BigRational x = parse_rational(need_str(params.x, "x"));
  if (!(x > 0 && x < BigRational(1, 2)))
    throw std::invalid_argument("func-eq-gamma1: requires 0 < x < 1/2");
  const BigRational half(1, 2), one(1);
  auto g1 = [&](const BigRational& t) { return gamma_oracle(1, t, ctx); };
  const BigFloat lhs = g1(x + half) - g1(half - x);
  const BigFloat xf = to_float(x, ctx);
  const BigFloat angle = 2 * pi(ctx) * xf;
  const BigFloat rhs = 2 * (g1(2 * x) - g1(one - 2 * x)) - (g1(x) - g1(one - x))
                       - 2 * pi(ctx) * log(BigFloat(2)) * cos(angle) / sin(angle);
  return {lhs, rhs};
}

Evaluated eval_ramanujan_cos_sum(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const BigRational x = parse_rational(need_str(params.x, "x"));
  if (!(x > 0 && x < 1)) throw std::invalid_argument("ramanujan-cos-sum: requires 0 < x < 1");
  const long terms = params.terms.value_or(1000000L);
  if (terms < 1000) throw std::invalid_argument("ramanujan-cos-sum: requires terms >= 1000");

  // Partial sums of sum log(n)/n cos(2 pi n x) with Cesaro averaging of the
  // final window; the series is conditionally convergent with O(log N / N)
  // oscillation, which the averaging suppresses below the loose tolerance.
  const BigFloat xf = to_float(x, ctx);
  const BigFloat c1 = cos(2 * pi(ctx) * xf);
  const BigFloat two_c1 = 2 * c1;
  const long window = std::min<long>(1000, terms / 10);
  BigFloat prev(1), cur = c1;  // cos(0), cos(2 pi x)
  BigFloat partial(0), window_acc(0);
  for (long n = 1; n <= terms; ++n) {
    if (n > 1) {
      BigFloat next = two_c1 * cur - prev;
      prev = cur;
      cur = next;
    }
    // after the rotation, cur = cos(2 pi n x)
    partial += log(BigFloat(n)) / n * cur;
    if (n > terms - window) window_acc += partial;
  }
  const BigFloat lhs = window_acc / window;

  const BigRational one(1);
  const BigFloat rhs = (zeta_deriv_rational(2, x, ctx) + zeta_deriv_rational(2, one - x, ctx)) / 2
                       + a_const(1, ctx) * log(2 * sin(pi(ctx) * xf));
  return {lhs, rhs};
}

Evaluated eval_apostol_zeta_dd(const IdentityParams&, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const BigFloat lhs = rational_zeta_derivs(1, 2, ctx)[0][2];
  const BigFloat gamma1 = gamma_oracle(1, BigRational(1), ctx);
  const BigFloat euler = euler_gamma(ctx);
  const BigFloat log_2pi = log(2 * pi(ctx));
  const BigFloat rhs = gamma1 + euler * euler / 2 - pi(ctx) * pi(ctx) / 24 - log_2pi * log_2pi / 2;
  return {lhs, rhs};
}

Evaluated eval_bell_gamma_at_one(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long m = need_long(params.n, "n");
  if (m < 0 || m > 7) throw std::invalid_argument("bell-gamma-at-one: requires 0 <= n <= 7");
  const BigFloat lhs = stieltjes_at_one(static_cast<unsigned>(m), ctx).value;
  const BigFloat rhs = gamma_oracle(static_cast<unsigned>(m), BigRational(1), ctx);
  return {lhs, rhs};
}

Evaluated eval_lck(const IdentityParams& params, const PrecisionContext& ctx, bool real_part) {
  ScopedPrecision guard(ctx.working_digits());
  const long p = need_long(params.p, "p"), q = need_long(params.q, "q");
  require_proper_fraction(p, q);
  const BigFloat s = real_s(params, ctx);
  if (!(s > 0 && s < 1)) throw std::invalid_argument("lck: requires 0 < s < 1");

  detail::TrigTable trig(static_cast<unsigned>(q), ctx);
  BigFloat sum(0);
  for (long j = 1; j <= q; ++j) {
    const BigFloat& w = real_part ? trig.cos_rp(j, p) : trig.sin_rp(j, p);
    sum += w * hurwitz_zeta(s, BigFloat(j) / q, ctx);
  }
  const BigFloat lhs = pow(BigFloat(q), -s) * sum;

  const BigFloat zp = hurwitz_zeta(1 - s, BigFloat(p) / q, ctx);
  const BigFloat zq = hurwitz_zeta(1 - s, 1 - BigFloat(p) / q, ctx);
  const BigFloat weight = real_part ? sin(pi(ctx) * s / 2) : cos(pi(ctx) * s / 2);
  const BigFloat rhs = gamma(1 - s, ctx) / pow(2 * pi(ctx), 1 - s) * weight
                       * (real_part ? zp + zq : zp - zq);
  return {lhs, rhs};
}

Evaluated eval_prop_6_1(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long p = need_long(params.p, "p"), q = need_long(params.q, "q");
  require_proper_fraction(p, q);
  detail::TrigTable trig(static_cast<unsigned>(q), ctx);
  BigFloat lhs(0);
  for (long j = 1; j <= q; ++j) lhs += trig.sin_rp(j, p) * digamma(BigFloat(j) / q, ctx);
  const BigFloat rhs = pi(ctx) * q * (BigFloat(p) / q - BigFloat(1) / 2);
  return {lhs, rhs};
}

Evaluated eval_prop_6_2(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long p = need_long(params.p, "p"), q = need_long(params.q, "q");
  require_proper_fraction(p, q);
  detail::TrigTable trig(static_cast<unsigned>(q), ctx);
  BigFloat lhs(0);
  for (long j = 1; j <= q; ++j) lhs += trig.cos_rp(j, p) * digamma(BigFloat(j) / q, ctx);
  const BigFloat rhs = q * log(2 * sin(pi(ctx) * p / q));
  return {lhs, rhs};
}

Evaluated eval_prop_6_3(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long p = need_long(params.p, "p"), q = need_long(params.q, "q");
  require_proper_fraction(p, q);
  detail::TrigTable trig(static_cast<unsigned>(q), ctx);
  BigFloat lhs(0);
  for (long j = 1; j <= q; ++j)
    lhs += trig.sin_rp(j, p) * gamma_oracle(1, BigRational(j, q), ctx);
  const BigFloat rhs = pi(ctx) * q / 2
                           * (2 * log_gamma(BigFloat(p) / q, ctx) - log(pi(ctx))
                              + log(sin(pi(ctx) * p / q)))
                       + pi(ctx) * q * a_const(static_cast<unsigned>(q), ctx)
                             * (BigFloat(p) / q - BigFloat(1) / 2);
  return {lhs, rhs};
}

Evaluated eval_prop_6_4(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long p = need_long(params.p, "p"), q = need_long(params.q, "q");
  require_proper_fraction(p, q);
  detail::TrigTable trig(static_cast<unsigned>(q), ctx);
  BigFloat lhs(0);
  for (long j = 1; j <= q; ++j)
    lhs += trig.cos_rp(j, p) * gamma_oracle(1, BigRational(j, q), ctx);
  // The log(2 sin) bracket carries euler_gamma + log(2 pi q); the q-less
  // variant misses by exactly q log(q) log(2 sin(pi p / q)).
  const BigFloat rhs = BigFloat(q) / 2
                           * (zeta_deriv_rational(2, BigRational(p, q), ctx)
                              + zeta_deriv_rational(2, BigRational(q - p, q), ctx))
                       + q * a_const(static_cast<unsigned>(q), ctx)
                             * log(2 * sin(pi(ctx) * p / q));
  return {lhs, rhs};
}

Evaluated eval_prop_6_5(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long p = need_long(params.p, "p"), q = need_long(params.q, "q");
  require_proper_fraction(p, q);
  detail::TrigTable trig(static_cast<unsigned>(q), ctx);
  BigFloat lhs(0);
  for (long j = 1; j < q; ++j)
    lhs += trig.sin_rp(j, p) * log_gamma(BigFloat(j) / q, ctx);
  const BigFloat rhs = (gamma_oracle(1, BigRational(p, q), ctx)
                        - gamma_oracle(1, BigRational(q - p, q), ctx)) / (2 * pi(ctx))
                       + a_const(static_cast<unsigned>(q), ctx) / 2
                             * trig.cot_p_pi_over_q(static_cast<unsigned>(p));
  return {lhs, rhs};
}

Evaluated eval_prop_6_6(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long p = need_long(params.p, "p"), q = need_long(params.q, "q");
  require_proper_fraction(p, q);
  detail::TrigTable trig(static_cast<unsigned>(q), ctx);
  BigFloat lhs(0);
  for (long j = 1; j < q; ++j)
    lhs += trig.cos_rp(j, p) * log_gamma(BigFloat(j) / q, ctx);
  const BigFloat rhs = -(digamma(BigFloat(p) / q, ctx) + digamma(1 - BigFloat(p) / q, ctx)) / 4
                       - a_const(static_cast<unsigned>(q), ctx) / 2;
  return {lhs, rhs};
}

Evaluated eval_prop_6_7(const IdentityParams& params, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  const long p = need_long(params.p, "p"), q = need_long(params.q, "q");
  require_proper_fraction(p, q);
  detail::TrigTable trig(static_cast<unsigned>(q), ctx);
  const auto& zd = rational_zeta_derivs(static_cast<unsigned>(q), 2, ctx);
  BigFloat sin_zdd(0), sin_zd(0);
  for (long j = 1; j <= q; ++j) {
    sin_zdd += trig.sin_rp(j, p) * zd[j - 1][2];
    sin_zd += trig.sin_rp(j, p) * zd[j - 1][1];
  }
  const BigFloat lhs = 2 * pi(ctx) * sin_zdd;
  const BigFloat aq = a_const(static_cast<unsigned>(q), ctx);
  const BigFloat rhs = gamma_oracle(2, BigRational(p, q), ctx)
                       - gamma_oracle(2, BigRational(q - p, q), ctx)
                       + 4 * pi(ctx) * aq * sin_zd
                       - pi(ctx) * (aq * aq + pi(ctx) * pi(ctx) / 12)
                             * trig.cot_p_pi_over_q(static_cast<unsigned>(p));
  return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// grids

IdentityParams pq(long p, long q) {
  IdentityParams out;
  out.p = p;
  out.q = q;
  return out;
}

std::vector<IdentityParams> grid_rademacher(const SuiteOptions&) {
  std::vector<IdentityParams> out;
  for (const char* s : {"-2.5", "-1.5", "-0.5", "2.3"})
    for (auto [p, q] : {std::pair{1, 3}, {2, 5}, {3, 7}}) {
      IdentityParams item = pq(p, q);
      item.s = s;
      out.push_back(std::move(item));
    }
  return out;
}

std::vector<IdentityParams> grid_hasse_x_derivative(const SuiteOptions&) {
  std::vector<IdentityParams> out;
  for (long n : {1L, 2L}) {
    IdentityParams item;
    item.n = n;
    item.x = "1/2";
    item.j_max = 400;
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<IdentityParams> grid_stieltjes_integral(const SuiteOptions&) {
  std::vector<IdentityParams> out;
  for (long n : {0L, 1L})
    for (const char* x : {"1/2", "2"}) {
      IdentityParams item;
      item.n = n;
      item.x = x;
      out.push_back(std::move(item));
    }
  return out;
}

std::vector<IdentityParams> grid_q_x(const SuiteOptions& options) {
  std::vector<IdentityParams> out;
  for (long q : {2L, 3L, 5L}) {
    if (q > options.q_max) continue;
    for (const char* x : {"0.3", "0.7"}) {
      IdentityParams item;
      item.q = q;
      item.x = x;
      out.push_back(std::move(item));
    }
  }
  return out;
}

std::vector<IdentityParams> grid_kubert(const SuiteOptions& options) {
  std::vector<IdentityParams> out;
  for (const char* s : {"-0.5", "2.3"})
    for (auto& base : grid_q_x(options)) {
      IdentityParams item = base;
      item.s = s;
      out.push_back(std::move(item));
    }
  return out;
}

std::vector<IdentityParams> grid_zeta_dd_sum(const SuiteOptions& options) {
  std::vector<IdentityParams> out;
  for (long q = 2; q <= options.q_max; ++q) {
    IdentityParams item;
    item.q = q;
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<IdentityParams> grid_doubling(const SuiteOptions&) {
  std::vector<IdentityParams> out;
  for (const char* x : {"0.2", "0.3"}) {
    IdentityParams item;
    item.x = x;
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<IdentityParams> grid_x_small(const SuiteOptions&) {
  std::vector<IdentityParams> out;
  for (const char* x : {"1/8", "1/6", "1/5"}) {
    IdentityParams item;
    item.x = x;
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<IdentityParams> grid_ramanujan(const SuiteOptions&) {
  std::vector<IdentityParams> out;
  for (const char* x : {"1/3", "1/4"}) {
    IdentityParams item;
    item.x = x;
    item.terms = 1000000;
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<IdentityParams> grid_single(const SuiteOptions&) { return {IdentityParams{}}; }

std::vector<IdentityParams> grid_bell_gamma(const SuiteOptions&) {
  std::vector<IdentityParams> out;
  for (long m = 0; m <= 3; ++m) {
    IdentityParams item;
    item.n = m;
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<IdentityParams> grid_lck(const SuiteOptions& options) {
  std::vector<IdentityParams> out;
  for (const char* s : {"0.3", "0.7"})
    for (auto [p, q] : reduced_pairs(options.q_max)) {
      IdentityParams item = pq(p, q);
      item.s = s;
      out.push_back(std::move(item));
    }
  return out;
}

std::vector<IdentityParams> grid_props(const SuiteOptions& options) {
  std::vector<IdentityParams> out;
  for (auto [p, q] : reduced_pairs(options.q_max)) out.push_back(pq(p, q));
  return out;
}

// ---------------------------------------------------------------------------

const std::vector<IdentityDef>& registry() {
  static const std::vector<IdentityDef> defs = [] {
    std::vector<IdentityDef> r;
    auto add = [&r](std::string name, ToleranceKind tk,
                    std::function<Evaluated(const IdentityParams&, const PrecisionContext&)> eval,
                    std::function<std::vector<IdentityParams>(const SuiteOptions&)> grid) {
      r.push_back({std::move(name), tk, std::move(eval), std::move(grid)});
    };
    add("rademacher", ToleranceKind::ContextDefault, eval_rademacher, grid_rademacher);
    add("rademacher-reflected", ToleranceKind::ContextDefault, eval_rademacher_reflected,
        grid_rademacher);
    add("hasse-x-derivative", ToleranceKind::HasseSeries, eval_hasse_x_derivative,
        grid_hasse_x_derivative);
    add("stieltjes-integral", ToleranceKind::ContextDefault, eval_stieltjes_integral,
        grid_stieltjes_integral);
    add("kubert", ToleranceKind::ContextDefault, eval_kubert, grid_kubert);
    add("zeta-dd-sum", ToleranceKind::ContextDefault, eval_zeta_dd_sum, grid_zeta_dd_sum);
    add("gauss-mult-gamma", ToleranceKind::ContextDefault, eval_gauss_mult_gamma, grid_q_x);
    add("mult-zeta-dd", ToleranceKind::ContextDefault, eval_mult_zeta_dd, grid_q_x);
    add("mult-zeta-dd-doubling", ToleranceKind::ContextDefault, eval_mult_zeta_dd_doubling,
        grid_doubling);
    add("func-eq-zdd", ToleranceKind::ContextDefault, eval_func_eq_zdd, grid_x_small);
    add("func-eq-gamma1", ToleranceKind::ContextDefault, eval_func_eq_gamma1, grid_x_small);
    add("ramanujan-cos-sum", ToleranceKind::Ramanujan, eval_ramanujan_cos_sum, grid_ramanujan);
    add("apostol-zeta-dd", ToleranceKind::ContextDefault, eval_apostol_zeta_dd, grid_single);
    add("bell-gamma-at-one", ToleranceKind::ContextDefault, eval_bell_gamma_at_one,
        grid_bell_gamma);
    add("lck-real", ToleranceKind::ContextDefault,
        [](const IdentityParams& p, const PrecisionContext& c) { return eval_lck(p, c, true); },
        grid_lck);
    add("lck-imag", ToleranceKind::ContextDefault,
        [](const IdentityParams& p, const PrecisionContext& c) { return eval_lck(p, c, false); },
        grid_lck);
    add("prop-6-1", ToleranceKind::ContextDefault, eval_prop_6_1, grid_props);
    add("prop-6-2", ToleranceKind::ContextDefault, eval_prop_6_2, grid_props);
    add("prop-6-3", ToleranceKind::ContextDefault, eval_prop_6_3, grid_props);
    add("prop-6-4", ToleranceKind::ContextDefault, eval_prop_6_4, grid_props);
    add("prop-6-5", ToleranceKind::ContextDefault, eval_prop_6_5, grid_props);
    add("prop-6-6", ToleranceKind::ContextDefault, eval_prop_6_6, grid_props);
    add("prop-6-7", ToleranceKind::ContextDefault, eval_prop_6_7, grid_props);
    return r;
  }();
  return defs;
}

BigFloat tolerance_for(ToleranceKind kind, const PrecisionContext& ctx) {
  switch (kind) {
    case ToleranceKind::Ramanujan:
      return pow(BigFloat(10), -4);
    case ToleranceKind::HasseSeries:
      return pow(BigFloat(10), -8);
    case ToleranceKind::ContextDefault:
      break;
  }
  return ctx.tolerance();
}

const IdentityDef& find_identity(const std::string& name) {
  for (const auto& def : registry())
    if (def.name == name) return def;
  throw std::invalid_argument("unknown identity: " + name);
}

bool matches(const std::string& pattern, const std::string& name) {
  if (pattern.empty() || pattern == "*" || pattern == "all") return true;
  if (!pattern.empty() && pattern.back() == '*')
    return name.starts_with(pattern.substr(0, pattern.size() - 1));
  return pattern == name;
}

}  // namespace

std::string IdentityParams::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* key, const std::string& value) {
    if (!first) os << ' ';
    os << key << '=' << value;
    first = false;
  };
  if (n) emit("n", std::to_string(*n));
  if (p) emit("p", std::to_string(*p));
  if (q) emit("q", std::to_string(*q));
  if (x) emit("x", *x);
  if (s) emit("s", *s);
  if (terms) emit("terms", std::to_string(*terms));
  if (j_max) emit("j_max", std::to_string(*j_max));
  return os.str();
}

std::string IdentityReport::to_string() const {
  std::ostringstream os;
  os << name;
  if (!params.empty()) os << " [" << params << "]";
  os << " residual=" << residual.str(3, std::ios_base::scientific)
     << " tolerance=" << tolerance.str(3, std::ios_base::scientific)
     << (pass ? " PASS" : " FAIL");
  return os.str();
}

std::vector<std::string> registry_names() {
  std::vector<std::string> out;
  for (const auto& def : registry()) out.push_back(def.name);
  return out;
}

IdentityReport run_identity(const std::string& name, const IdentityParams& params,
                            const PrecisionContext& ctx) {
  const IdentityDef& def = find_identity(name);
  ScopedPrecision guard(ctx.working_digits());
  Evaluated sides = def.eval(params, ctx);
  IdentityReport report;
  report.name = def.name;
  report.params = params.to_string();
  report.lhs = sides.lhs;
  report.rhs = sides.rhs;
  report.residual = abs(sides.lhs - sides.rhs);
  report.tolerance = tolerance_for(def.tolerance, ctx);
  report.pass = report.residual < report.tolerance;
  return report;
}

std::vector<IdentityReport> run_suite(const std::string& pattern, const PrecisionContext& ctx,
                                      const SuiteOptions& options) {
  std::vector<IdentityReport> out;
  bool matched = false;
  for (const auto& def : registry()) {
    if (!matches(pattern, def.name)) continue;
    matched = true;
    for (const IdentityParams& params : def.default_grid(options))
      out.push_back(run_identity(def.name, params, ctx));
  }
  if (!matched) throw std::invalid_argument("unknown identity: " + pattern);
  return out;
}

}  // namespace stieltjes
