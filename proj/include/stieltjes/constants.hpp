#pragma once

#include "stieltjes/precision.hpp"

namespace stieltjes {

// pi at the context's working precision (MPFR builtin).
BigFloat pi(const PrecisionContext& ctx);

// Euler-Mascheroni constant by the Brent-McMillan Bessel-series method.
// Deliberately shares no code with the zeta engines or MPFR's own
// const_euler, so gamma-based cross-checks are meaningful.
BigFloat euler_gamma(const PrecisionContext& ctx);

// zeta(k) for integer k >= 2, evaluated through the Hurwitz engine at x = 1.
// Memoized per (k, working precision).
BigFloat zeta_int(unsigned k, const PrecisionContext& ctx);

// log(2*pi*q).
BigFloat log_two_pi_q(unsigned q, const PrecisionContext& ctx);

// Exact Bernoulli number B_n with the B_1 = -1/2 convention.  Memoized;
// safe for concurrent readers.
const BigRational& bernoulli(unsigned n);

// Exact binomial coefficient.
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace stieltjes
