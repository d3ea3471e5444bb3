#include "stieltjes/hurwitz.hpp"

#include <map>
#include <shared_mutex>

#include "stieltjes/constants.hpp"
#include "ring.hpp"

namespace stieltjes {

namespace {

BigFloat magnitude(const BigFloat& v) { return abs(v); }
BigFloat magnitude(const BigComplex& v) { return abs(v); }

BigFloat power_of_positive(const BigFloat& base, const BigFloat& e) { return pow(base, e); }
BigComplex power_of_positive(const BigFloat& base, const BigComplex& e) {
  return pow_positive_base(base, e);
}

// B_{2j}/(2j)! as BigFloat, cached per (j, digits).
std::shared_mutex g_bf_mutex;
std::map<std::pair<unsigned, unsigned>, BigFloat> g_bf_cache;

BigFloat bernoulli_over_factorial(unsigned j, unsigned digits) {
  const auto key = std::make_pair(j, digits);
  {
    std::shared_lock lock(g_bf_mutex);
    auto it = g_bf_cache.find(key);
    if (it != g_bf_cache.end()) return it->second;
  }
  BigRational r = bernoulli(2 * j);
  for (unsigned i = 2; i <= 2 * j; ++i) r /= i;
  ScopedPrecision guard(digits);
  BigFloat value(r);
  std::unique_lock lock(g_bf_mutex);
  return g_bf_cache.emplace(key, std::move(value)).first->second;
}

// Euler-Maclaurin continuation:
//   zeta(s,x) = sum_{k<N} (x+k)^-s + X^{1-s}/(s-1) + X^-s/2
//             + sum_{j>=1} B_{2j}/(2j)! (s)_{2j-1} X^{-s-2j+1},   X = x+N.
// The tail is summed until the latest term falls below the precision target;
// a growing term in the pre-asymptotic regime or a cap hit raises
// PrecisionError instead of returning silently inaccurate values.
template <typename S>
S hurwitz_em(const S& s, const BigFloat& x, const PrecisionContext& ctx,
             const HurwitzParams& params) {
  const unsigned wd = ctx.working_digits();
  ScopedPrecision guard(wd);
  if (x <= 0) throw std::domain_error("hurwitz_zeta: requires x > 0");
  if (magnitude(s - 1) <= ctx.tolerance())
    throw std::domain_error("hurwitz_zeta: s is within tolerance of the pole at s = 1");

  const BigFloat s_mag = magnitude(s);
  unsigned n_cut = params.em_cutoff;
  if (n_cut == 0) {
    n_cut = static_cast<unsigned>(0.7 * wd) + 4;
    unsigned s_floor = 2 * static_cast<unsigned>(static_cast<unsigned long>(s_mag)) + 4;
    n_cut = std::max(n_cut, s_floor);
  }

  S acc{};
  for (unsigned k = 0; k < n_cut; ++k) acc += power_of_positive(x + k, -s);

  const BigFloat big_x = x + n_cut;
  const S x_pow_ms = power_of_positive(big_x, -s);  // X^-s
  acc += x_pow_ms * big_x / (s - 1);
  acc += x_pow_ms * BigFloat(0.5);

  const BigFloat target = pow(BigFloat(10), -static_cast<long>(wd + 5));
  const BigFloat scale = std::max(BigFloat(1), magnitude(acc));
  const unsigned m_cap = params.em_order ? params.em_order : 2 * wd + 60;
  const BigFloat inv_x2 = 1 / (big_x * big_x);

  S pochhammer = s;            // (s)_{2j-1} at j = 1
  S x_tail = x_pow_ms / big_x;  // X^{-s-2j+1} at j = 1
  BigFloat prev_mag(-1);
  bool converged = false;
  for (unsigned j = 1; j <= m_cap; ++j) {
    S term = pochhammer * x_tail * bernoulli_over_factorial(j, wd);
    acc += term;
    BigFloat mag = magnitude(term);
    if (mag <= target * scale) {
      converged = true;
      break;
    }
    if (prev_mag >= 0 && mag > prev_mag && j > 4)
      throw PrecisionError(
          "hurwitz_zeta: Euler-Maclaurin tail diverging before reaching tolerance; "
          "raise digits or em_cutoff");
    prev_mag = mag;
    pochhammer *= (s + static_cast<long>(2 * j - 1)) * (s + static_cast<long>(2 * j));
    x_tail *= inv_x2;
  }
  if (!converged && params.em_order == 0)
    throw PrecisionError("hurwitz_zeta: Euler-Maclaurin order cap exceeded; raise digits");
  return acc;
}

}  // namespace

BigComplex hurwitz_zeta(const BigComplex& s, const BigFloat& x, const PrecisionContext& ctx,
                        const HurwitzParams& params) {
  return hurwitz_em(s, x, ctx, params);
}

BigFloat hurwitz_zeta(const BigFloat& s, const BigFloat& x, const PrecisionContext& ctx,
                      const HurwitzParams& params) {
  return hurwitz_em(s, x, ctx, params);
}

CauchyRingParams CauchyRingParams::defaults(const PrecisionContext& ctx) {
  CauchyRingParams ring;
  ring.radius = BigFloat(1) / 2;
  ring.points = 4 * ctx.working_digits();
  if (ring.points % 2) ++ring.points;
  if (ring.points < 16) ring.points = 16;
  return ring;
}

namespace {

CauchyRingParams resolve_ring(const CauchyRingParams& ring, const PrecisionContext& ctx) {
  CauchyRingParams out = ring;
  if (out.points == 0) out = CauchyRingParams::defaults(ctx);
  if (out.points < 16 || out.points % 2 != 0)
    throw std::invalid_argument("CauchyRingParams: points must be even and >= 16");
  if (!(out.radius > 0 && out.radius < 1))
    throw std::invalid_argument("CauchyRingParams: radius must lie in (0, 1)");
  return out;
}

}  // namespace

std::vector<BigFloat> zeta_derivs_at0(unsigned j_max, const BigFloat& x,
                                      const PrecisionContext& ctx,
                                      const CauchyRingParams& ring_in) {
  const unsigned wd = ctx.working_digits();
  ScopedPrecision guard(wd);
  if (x <= 0) throw std::domain_error("zeta_derivs_at0: requires x > 0");
  const CauchyRingParams ring = resolve_ring(ring_in, ctx);

  detail::Ring circle(ring.radius, ring.points, ctx);
  std::vector<BigComplex> samples;
  samples.reserve(ring.points);
  for (unsigned t = 0; t < ring.points; ++t)
    samples.push_back(hurwitz_zeta(circle.node(BigFloat(0), t), x, ctx));

  const BigFloat tol = ctx.tolerance();
  std::vector<BigFloat> out;
  out.reserve(j_max + 1);
  for (unsigned j = 0; j <= j_max; ++j) {
    BigComplex d = circle.derivative(samples, j);
    if (abs(d.im) > tol * (1 + abs(d.re)))
      throw PrecisionError("zeta_derivs_at0: imaginary residue above tolerance; "
                           "increase ring points");
    out.push_back(d.re);
  }
  return out;
}

BigFloat zeta_deriv_at0(unsigned j, const BigFloat& x, const PrecisionContext& ctx,
                        const CauchyRingParams& ring) {
  return zeta_derivs_at0(j, x, ctx, ring).back();
}

BigFloat log_gamma(const BigFloat& x, const PrecisionContext& ctx) {
  if (x <= 0) throw std::domain_error("log_gamma: requires x > 0");
  ScopedPrecision guard(ctx.working_digits());
  BigFloat arg = at_precision(x, ctx.working_digits());
  BigFloat out;
  mpfr_lngamma(out.backend().data(), arg.backend().data(), MPFR_RNDN);
  return out;
}

BigFloat gamma(const BigFloat& x, const PrecisionContext& ctx) {
  if (x <= 0 && floor(x) == x)
    throw std::domain_error("gamma: pole at nonpositive integer argument");
  ScopedPrecision guard(ctx.working_digits());
  BigFloat arg = at_precision(x, ctx.working_digits());
  BigFloat out;
  mpfr_gamma(out.backend().data(), arg.backend().data(), MPFR_RNDN);
  return out;
}

BigFloat digamma(const BigFloat& x, const PrecisionContext& ctx) {
  if (x <= 0) throw std::domain_error("digamma: requires x > 0");
  ScopedPrecision guard(ctx.working_digits());
  BigFloat arg = at_precision(x, ctx.working_digits());
  BigFloat out;
  mpfr_digamma(out.backend().data(), arg.backend().data(), MPFR_RNDN);
  return out;
}

BigFloat polygamma(unsigned p, const BigFloat& x, const PrecisionContext& ctx) {
  if (p == 0) throw std::invalid_argument("polygamma: requires p >= 1 (use digamma)");
  if (x <= 0) throw std::domain_error("polygamma: requires x > 0");
  ScopedPrecision guard(ctx.working_digits());
  BigFloat value = hurwitz_zeta(BigFloat(p + 1), x, ctx);
  BigFloat coeff(detail::Ring::factorial(p));
  if (p % 2 == 0) coeff = -coeff;
  return coeff * value;
}

}  // namespace stieltjes
