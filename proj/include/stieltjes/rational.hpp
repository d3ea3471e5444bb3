#pragma once

#include <vector>

#include "stieltjes/bell.hpp"
#include "stieltjes/stieltjes.hpp"

namespace stieltjes {

// Intermediate values of a closed-form evaluation, kept so that both closed
// forms can be checked against identical zeta-derivative inputs.
struct ClosedFormTrace {
  std::vector<BigFloat> per_r_contributions;          // length q
  std::vector<BigFloat> bell_values_used;             // Y_i values
  std::vector<std::vector<BigFloat>> zeta_derivs_used;  // [r-1][j] = zeta^(j)(0, r/q)
};

// zeta^(j)(0, r/q) for r = 1..q, j = 0..j_max, computed once per (q, j_max,
// working precision) and shared by every closed-form path.  r = q row is
// zeta^(j)(0) itself.
const std::vector<std::vector<BigFloat>>& rational_zeta_derivs(unsigned q, unsigned j_max,
                                                               const PrecisionContext& ctx);

// gamma_m(p/q) from the Bell-polynomial closed form (reflection kernel split
// into cosine and sine limbs with Y_i(g(0)) / Y_{i-1}(h(0)) weights).
StieltjesResult stieltjes_rational_bell(unsigned m, RationalArg arg, const PrecisionContext& ctx,
                                        ClosedFormTrace* trace = nullptr);

// Same value through the Chakraborty-Kanemitsu-Kuzumaki representation
// (delta_l weights with Gamma^(m)(1) and the K_l trigonometric kernels).
StieltjesResult stieltjes_rational_cck(unsigned m, RationalArg arg, const PrecisionContext& ctx,
                                       ClosedFormTrace* trace = nullptr);

// gamma_m at x = 1 from derivatives of the Riemann zeta at s = 0 only.
StieltjesResult stieltjes_at_one(unsigned m, const PrecisionContext& ctx);

// Gamma^(m)(1) via Y_m(-euler_gamma, psi'(1), ..., psi^(m-1)(1)).
BigFloat gamma_deriv_at_one(unsigned m, const PrecisionContext& ctx);

// psi(p/q) closed forms, p < q.  The primary form uses log sin terms; the
// gauss variant is the log-gamma arrangement kept for cross-testing.
BigFloat digamma_rational(RationalArg arg, const PrecisionContext& ctx);
BigFloat digamma_rational_gauss(RationalArg arg, const PrecisionContext& ctx);

// gamma_1(p/q), p < q, from the explicit rearrangement in terms of
// zeta''(0, r/q), log Gamma(r/q) and cot(p pi / q).  The deninger variant
// evaluates the R-function arrangement; both must agree.
BigFloat gamma1_rational(RationalArg arg, const PrecisionContext& ctx);
BigFloat gamma1_rational_deninger(RationalArg arg, const PrecisionContext& ctx);

}  // namespace stieltjes
