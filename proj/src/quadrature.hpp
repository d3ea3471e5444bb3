#pragma once

#include <functional>
#include <map>
#include <shared_mutex>
#include <vector>

#include "stieltjes/precision.hpp"

namespace stieltjes::detail {

// Gauss-Legendre nodes and weights on [-1, 1] at full working precision.
// Newton refinement from the Chebyshev-angle initial guesses; cached per
// (order, digits).
struct GaussRule {
  std::vector<BigFloat> nodes;
  std::vector<BigFloat> weights;
};

inline const GaussRule& gauss_legendre(unsigned order, const PrecisionContext& ctx) {
  static std::shared_mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, GaussRule> cache;
  const unsigned wd = ctx.working_digits();
  const auto key = std::make_pair(order, wd);
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ScopedPrecision guard(wd);
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const BigFloat one(1);
  BigFloat pi_v;
  mpfr_const_pi(pi_v.backend().data(), MPFR_RNDN);
  const BigFloat newton_tol = pow(BigFloat(10), -static_cast<long>(wd) - 2);
  for (unsigned i = 0; i < order; ++i) {
    BigFloat x = cos(pi_v * (BigFloat(i) + BigFloat("0.75")) / (BigFloat(order) + BigFloat("0.5")));
    BigFloat deriv(0);
    for (unsigned iter = 0; iter < 80; ++iter) {
      // Legendre recurrence for P_order(x) and P'_order(x).
      BigFloat p0(1), p1 = x;
      for (unsigned k = 2; k <= order; ++k) {
        BigFloat p2 = ((2 * BigFloat(k) - 1) * x * p1 - (BigFloat(k) - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      deriv = order * (x * p1 - p0) / (x * x - one);
      BigFloat dx = p1 / deriv;
      x -= dx;
      if (abs(dx) < newton_tol) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2 / ((one - x * x) * deriv * deriv);
  }
  std::unique_lock lock(mutex);
  return cache.emplace(key, std::move(rule)).first->second;
}

inline BigFloat gauss_apply(const GaussRule& rule, const std::function<BigFloat(const BigFloat&)>& f,
                            const BigFloat& a, const BigFloat& b) {
  BigFloat mid = (a + b) / 2, half = (b - a) / 2;
  BigFloat acc(0);
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

// Adaptive bisection with a 24-vs-48 point error gauge; analytic integrands
// terminate on the first panel.
inline BigFloat integrate(const std::function<BigFloat(const BigFloat&)>& f, const BigFloat& a,
                          const BigFloat& b, const BigFloat& tol, const PrecisionContext& ctx,
                          unsigned depth = 0) {
  const GaussRule& coarse = gauss_legendre(24, ctx);
  const GaussRule& fine = gauss_legendre(48, ctx);
  BigFloat lo = gauss_apply(coarse, f, a, b);
  BigFloat hi = gauss_apply(fine, f, a, b);
  if (abs(hi - lo) <= tol) return hi;
  if (depth >= 24)
    throw PrecisionError("integrate: adaptive quadrature did not converge");
  BigFloat mid = (a + b) / 2;
  BigFloat half_tol = tol / 2;
  return integrate(f, a, mid, half_tol, ctx, depth + 1)
         + integrate(f, mid, b, half_tol, ctx, depth + 1);
}

}  // namespace stieltjes::detail
