#include "stieltjes/rational.hpp"

#include <map>
#include <shared_mutex>

#include "stieltjes/constants.hpp"
#include "trig.hpp"

namespace stieltjes {

namespace {

std::shared_mutex g_zd_mutex;
// (q, working digits) -> (j_max, matrix[r-1][j])
std::map<std::pair<unsigned, unsigned>, std::pair<unsigned, std::vector<std::vector<BigFloat>>>>
    g_zd_cache;

BigFloat input_noise_estimate(const PrecisionContext& ctx, const BigFloat& scale) {
  return pow(BigFloat(10), -static_cast<long>(ctx.working_digits()) + 8) * (1 + scale);
}

}  // namespace

const std::vector<std::vector<BigFloat>>& rational_zeta_derivs(unsigned q, unsigned j_max,
                                                               const PrecisionContext& ctx) {
  const unsigned wd = ctx.working_digits();
  const auto key = std::make_pair(q, wd);
  {
    std::shared_lock lock(g_zd_mutex);
    auto it = g_zd_cache.find(key);
    if (it != g_zd_cache.end() && it->second.first >= j_max) return it->second.second;
  }
  std::vector<std::vector<BigFloat>> matrix;
  matrix.reserve(q);
  for (unsigned r = 1; r <= q; ++r)
    matrix.push_back(zeta_derivs_at0(j_max, BigFloat(r) / q, ctx));
  std::unique_lock lock(g_zd_mutex);
  auto& slot = g_zd_cache[key];
  if (slot.first < j_max) slot = {j_max, std::move(matrix)};
  return slot.second;
}

StieltjesResult stieltjes_rational_bell(unsigned m, RationalArg arg, const PrecisionContext& ctx,
                                        ClosedFormTrace* trace) {
  if (m > 7) throw std::invalid_argument("stieltjes_rational_bell: requires m <= 7");
  const unsigned n = m + 1;
  const unsigned wd = ctx.working_digits();
  ScopedPrecision guard(wd);

  const auto& zd = rational_zeta_derivs(arg.q, n, ctx);
  BellArgumentSet g = bell_args(BellKind::G, arg.q, n, ctx);
  BellArgumentSet h = bell_args(BellKind::H, arg.q, n, ctx);
  std::vector<BigFloat> y_g(n + 1), y_h(n);
  for (unsigned i = 0; i <= n; ++i) y_g[i] = complete_bell(g, i);
  for (unsigned i = 0; i < n; ++i) y_h[i] = complete_bell(h, i);

  detail::TrigTable trig(arg.q, ctx);
  const BigFloat half_pi = pi(ctx) / 2;

  BigFloat total(0), max_contrib(0);
  std::vector<BigFloat> per_r;
  per_r.reserve(arg.q);
  for (unsigned r = 1; r <= arg.q; ++r) {
    const BigFloat& c = trig.cos_rp(r, arg.p);
    const BigFloat& s = trig.sin_rp(r, arg.p);
    BigFloat contrib(0);
    for (unsigned i = 0; i <= n; ++i) {
      BigFloat weight = y_g[i] * c;
      if (i >= 1) weight += half_pi * i * y_h[i - 1] * s;
      contrib += BigFloat(binomial(n, i)) * weight * zd[r - 1][n - i];
    }
    total += contrib;
    max_contrib = std::max(max_contrib, abs(contrib));
    per_r.push_back(BigFloat(2) * contrib / n);
  }

  StieltjesResult out;
  out.method = Method::ClosedFormBell;
  out.value = BigFloat(2) * total / n;
  out.err_estimate = input_noise_estimate(ctx, max_contrib * arg.q);
  if (trace) {
    trace->per_r_contributions = std::move(per_r);
    trace->bell_values_used = y_g;
    trace->bell_values_used.insert(trace->bell_values_used.end(), y_h.begin(), y_h.end());
    trace->zeta_derivs_used = zd;
  }
  return out;
}

BigFloat gamma_deriv_at_one(unsigned m, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  if (m == 0) return BigFloat(1);
  // Gamma'(1+s) = Gamma(1+s) psi(1+s): arguments (-euler_gamma, psi'(1), ...)
  // with psi^(k)(1) = (-1)^{k+1} k! zeta(k+1).
  std::vector<BigFloat> args;
  args.reserve(m);
  args.push_back(-euler_gamma(ctx));
  BigFloat factorial(1);
  for (unsigned k = 1; k < m; ++k) {
    factorial *= k;
    BigFloat v = factorial * zeta_int(k + 1, ctx);
    args.push_back(k % 2 == 0 ? -v : v);
  }
  return complete_bell(std::span<const BigFloat>(args), m);
}

StieltjesResult stieltjes_rational_cck(unsigned m, RationalArg arg, const PrecisionContext& ctx,
                                       ClosedFormTrace* trace) {
  if (m > 7) throw std::invalid_argument("stieltjes_rational_cck: requires m <= 7");
  const unsigned n = m + 1;
  const unsigned wd = ctx.working_digits();
  ScopedPrecision guard(wd);

  const auto& zd = rational_zeta_derivs(arg.q, n, ctx);
  detail::TrigTable trig(arg.q, ctx);
  const BigFloat half_pi = pi(ctx) / 2;
  const BigFloat log_2piq = log_two_pi_q(arg.q, ctx);

  // delta_l = sum_m (-1)^m C(l,m) Gamma^(m)(1) log^{l-m}(2 pi q)
  std::vector<BigFloat> gamma_derivs(n + 1), delta(n + 1);
  for (unsigned i = 0; i <= n; ++i) gamma_derivs[i] = gamma_deriv_at_one(i, ctx);
  for (unsigned l = 0; l <= n; ++l) {
    BigFloat acc(0);
    for (unsigned mm = 0; mm <= l; ++mm) {
      BigFloat term = BigFloat(binomial(l, mm)) * gamma_derivs[mm]
                      * pow(log_2piq, static_cast<int>(l - mm));
      acc += (mm % 2 == 0) ? term : -term;
    }
    delta[l] = acc;
  }

  // R_k(x) = (-1)^{k+1} zeta^(k)(0, x); T_m alternates damped cos/sin.
  auto big_r = [&zd](unsigned k, unsigned r) {
    const BigFloat& v = zd[r - 1][k];
    return (k % 2 == 0) ? -v : v;
  };

  BigFloat total(0), max_inner(0);
  std::vector<BigFloat> per_l;
  per_l.reserve(n + 1);
  for (unsigned l = 0; l <= n; ++l) {
    BigFloat inner(0);
    for (unsigned r = 1; r <= arg.q; ++r) {
      const BigFloat& c = trig.cos_rp(r, arg.p);
      const BigFloat& s = trig.sin_rp(r, arg.p);
      BigFloat k_sum(0);
      BigFloat pw(1);  // (pi/2)^mm
      for (unsigned mm = 0; mm <= l; ++mm) {
        BigFloat t = (mm % 2 == 0) ? ((mm / 2) % 2 == 0 ? c : -c)
                                   : (((mm + 1) / 2) % 2 == 1 ? -s : s);
        k_sum += BigFloat(binomial(l, mm)) * big_r(l - mm, r) * pw * t;
        pw *= half_pi;
      }
      inner += k_sum;
    }
    max_inner = std::max(max_inner, abs(inner));
    per_l.push_back(inner);
    total += BigFloat(binomial(n, l)) * delta[n - l] * inner;
  }

  StieltjesResult out;
  out.method = Method::ClosedFormCck;
  BigFloat signed_total = (n % 2 == 0) ? total : -total;
  out.value = -BigFloat(2) * signed_total / n;
  out.err_estimate = input_noise_estimate(ctx, max_inner * (1 + abs(delta[n])));
  if (trace) {
    trace->per_r_contributions = std::move(per_l);
    trace->bell_values_used = gamma_derivs;
    trace->zeta_derivs_used = zd;
  }
  return out;
}

StieltjesResult stieltjes_at_one(unsigned m, const PrecisionContext& ctx) {
  if (m > 7) throw std::invalid_argument("stieltjes_at_one: requires m <= 7");
  const unsigned n = m + 1;
  ScopedPrecision guard(ctx.working_digits());

  const auto& zd = rational_zeta_derivs(1, n, ctx);
  BellArgumentSet g = bell_args(BellKind::G, 1, n, ctx);
  BigFloat total(0);
  for (unsigned i = 0; i <= n; ++i)
    total += BigFloat(binomial(n, i)) * complete_bell(g, i) * zd[0][n - i];

  StieltjesResult out;
  out.method = Method::AtOne;
  out.value = BigFloat(2) * total / n;
  out.err_estimate = input_noise_estimate(ctx, abs(total));
  return out;
}

BigFloat digamma_rational(RationalArg arg, const PrecisionContext& ctx) {
  if (arg.p >= arg.q)
    throw std::domain_error("digamma_rational: requires p < q after reduction");
  ScopedPrecision guard(ctx.working_digits());
  const BigFloat pi_v = pi(ctx);
  detail::TrigTable trig(arg.q, ctx);

  BigFloat acc = -euler_gamma(ctx) - log(BigFloat(2) * arg.q)
                 - pi_v / 2 * trig.cot_p_pi_over_q(arg.p);
  for (unsigned r = 1; r < arg.q; ++r)
    acc += trig.cos_rp(r, arg.p) * log(sin(pi_v * r / arg.q));
  return acc;
}

BigFloat digamma_rational_gauss(RationalArg arg, const PrecisionContext& ctx) {
  if (arg.p >= arg.q)
    throw std::domain_error("digamma_rational_gauss: requires p < q after reduction");
  ScopedPrecision guard(ctx.working_digits());
  detail::TrigTable trig(arg.q, ctx);

  BigFloat acc = -euler_gamma(ctx) - log_two_pi_q(arg.q, ctx)
                 - pi(ctx) / 2 * trig.cot_p_pi_over_q(arg.p);
  for (unsigned r = 1; r < arg.q; ++r)
    acc -= 2 * trig.cos_rp(r, arg.p) * log_gamma(BigFloat(r) / arg.q, ctx);
  return acc;
}

BigFloat gamma1_rational(RationalArg arg, const PrecisionContext& ctx) {
  if (arg.p >= arg.q)
    throw std::domain_error("gamma1_rational: requires p < q after reduction");
  ScopedPrecision guard(ctx.working_digits());

  const BigFloat gamma1 = stieltjes_at_one(1, ctx).value;
  const BigFloat euler = euler_gamma(ctx);
  const BigFloat a1 = euler + log_two_pi_q(1, ctx);
  const BigFloat aq = euler + log_two_pi_q(arg.q, ctx);
  const BigFloat log_q = log(BigFloat(arg.q));
  const auto& zd = rational_zeta_derivs(arg.q, 2, ctx);
  detail::TrigTable trig(arg.q, ctx);

  BigFloat acc = gamma1 - a1 * log_two_pi_q(arg.q, ctx) - log_q * log_q / 2;
  for (unsigned r = 1; r < arg.q; ++r) {
    const BigFloat lg = log_gamma(BigFloat(r) / arg.q, ctx);
    acc += zd[r - 1][2] * trig.cos_rp(r, arg.p);
    acc -= 2 * aq * lg * trig.cos_rp(r, arg.p);
    acc += pi(ctx) * lg * trig.sin_rp(r, arg.p);
  }
  // The cot term carries a minus sign; the plus variant fails the oracle
  // check by exactly twice this term.
  acc -= pi(ctx) / 2 * aq * trig.cot_p_pi_over_q(arg.p);
  return acc;
}

BigFloat gamma1_rational_deninger(RationalArg arg, const PrecisionContext& ctx) {
  if (arg.p >= arg.q)
    throw std::domain_error("gamma1_rational_deninger: requires p < q after reduction");
  ScopedPrecision guard(ctx.working_digits());

  const BigFloat gamma1 = stieltjes_at_one(1, ctx).value;
  const BigFloat euler = euler_gamma(ctx);
  const BigFloat aq = euler + log_two_pi_q(arg.q, ctx);
  const BigFloat log_q = log(BigFloat(arg.q));
  const auto& zd = rational_zeta_derivs(arg.q, 2, ctx);
  detail::TrigTable trig(arg.q, ctx);

  BigFloat acc = gamma1 + aq * (euler + digamma(BigFloat(arg.p) / arg.q, ctx))
                 + log_q * log_q / 2 + log_q * log(2 * pi(ctx));
  for (unsigned j = 1; j < arg.q; ++j) {
    acc += trig.cos_rp(j, arg.p) * zd[j - 1][2];
    acc += pi(ctx) * trig.sin_rp(j, arg.p) * log_gamma(BigFloat(j) / arg.q, ctx);
  }
  return acc;
}

}  // namespace stieltjes
