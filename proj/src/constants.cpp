#include "stieltjes/constants.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "stieltjes/hurwitz.hpp"

namespace stieltjes {

BigFloat pi(const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  BigFloat out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

BigFloat log_two_pi_q(unsigned q, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx.working_digits());
  return log(2 * pi(ctx) * q);
}

namespace {

// Shared single-writer caches.  Readers take the shared lock; a missing
// entry upgrades to exclusive and fills it.
std::shared_mutex g_euler_mutex;
BigFloat g_euler_value;       // at g_euler_digits working digits
unsigned g_euler_digits = 0;

std::shared_mutex g_zeta_mutex;
std::map<std::pair<unsigned, unsigned>, BigFloat> g_zeta_cache;  // (k, digits) -> zeta(k)

std::shared_mutex g_bernoulli_mutex;
std::vector<BigRational> g_bernoulli;  // g_bernoulli[n] = B_n

// Brent-McMillan: gamma = S(m)/B(m) - log m + O(e^-4m) with
//   B(m) = sum_k (m^k/k!)^2,  S(m) = sum_k (m^k/k!)^2 H_k.
// All terms are positive, so no cancellation budget is needed.
BigFloat euler_gamma_brent_mcmillan(unsigned digits) {
  ScopedPrecision guard(digits + 10);
  // e^-4m < 10^-digits  =>  m > digits * ln(10)/4
  unsigned long m = static_cast<unsigned long>(digits * 0.5756462732485114) + 3;
  BigFloat term(1), harmonic(0), num(0), den(1);
  BigFloat m2 = BigFloat(m) * m;
  BigFloat cutoff = pow(BigFloat(10), -static_cast<long>(digits + 8));
  unsigned long k_cap = 8 * m + 200;
  for (unsigned long k = 1; k <= k_cap; ++k) {
    term *= m2 / (BigFloat(k) * k);
    harmonic += BigFloat(1) / k;
    num += term * harmonic;
    den += term;
    if (k > 2 * m && term < cutoff * den) break;
    if (k == k_cap)
      throw PrecisionError("euler_gamma: series cap exceeded; raise the cap");
  }
  return num / den - log(BigFloat(m));
}

}  // namespace

BigFloat euler_gamma(const PrecisionContext& ctx) {
  const unsigned wd = ctx.working_digits();
  {
    std::shared_lock lock(g_euler_mutex);
    if (g_euler_digits >= wd) return at_precision(g_euler_value, wd);
  }
  std::unique_lock lock(g_euler_mutex);
  if (g_euler_digits < wd) {
    g_euler_value = euler_gamma_brent_mcmillan(wd);
    g_euler_digits = wd;
  }
  return at_precision(g_euler_value, wd);
}

BigFloat zeta_int(unsigned k, const PrecisionContext& ctx) {
  if (k < 2) throw std::invalid_argument("zeta_int: requires k >= 2");
  const unsigned wd = ctx.working_digits();
  const auto key = std::make_pair(k, wd);
  {
    std::shared_lock lock(g_zeta_mutex);
    auto it = g_zeta_cache.find(key);
    if (it != g_zeta_cache.end()) return it->second;
  }
  ScopedPrecision guard(wd);
  BigFloat value = hurwitz_zeta(BigFloat(k), BigFloat(1), ctx);
  std::unique_lock lock(g_zeta_mutex);
  return g_zeta_cache.emplace(key, std::move(value)).first->second;
}

const BigRational& bernoulli(unsigned n) {
  {
    std::shared_lock lock(g_bernoulli_mutex);
    if (n < g_bernoulli.size()) return g_bernoulli[n];
  }
  std::unique_lock lock(g_bernoulli_mutex);
  if (g_bernoulli.empty()) g_bernoulli.emplace_back(1);
  // B_n = -(1/(n+1)) sum_{k=0}^{n-1} C(n+1, k) B_k, exact rationals.
  for (unsigned m = g_bernoulli.size(); m <= n; ++m) {
    if (m > 2 && m % 2 == 1) {
      g_bernoulli.emplace_back(0);
      continue;
    }
    BigRational acc(0);
    for (unsigned k = 0; k < m; ++k) {
      if (k > 2 && k % 2 == 1) continue;
      acc += BigRational(binomial(m + 1, k)) * g_bernoulli[k];
    }
    g_bernoulli.emplace_back(-acc / (m + 1));
  }
  return g_bernoulli[n];
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  if (k > n) return out;  // zero
  mpz_bin_uiui(out.backend().data(), n, k);
  return out;
}

}  // namespace stieltjes
