#pragma once

#include <vector>

#include "stieltjes/precision.hpp"

namespace stieltjes {

// Euler-Maclaurin truncation parameters.  Zero fields mean "derive from the
// context and |s|" (N ~ 0.7 * working digits, M grown until the first
// omitted tail term drops below 10^-working_digits).
struct HurwitzParams {
  unsigned em_cutoff = 0;  // N: direct-sum length
  unsigned em_order = 0;   // M: Bernoulli tail terms
};

// Circle for Cauchy-integral derivative extraction.  Radius must stay in
// (0,1) so a ring centered at 0 or 1 never touches the pole at s = 1.
struct CauchyRingParams {
  BigFloat radius;
  unsigned points = 0;  // even, >= 16

  static CauchyRingParams defaults(const PrecisionContext& ctx);
};

// Hurwitz zeta by Euler-Maclaurin, analytically continued to all s != 1.
BigComplex hurwitz_zeta(const BigComplex& s, const BigFloat& x, const PrecisionContext& ctx,
                        const HurwitzParams& params = {});
BigFloat hurwitz_zeta(const BigFloat& s, const BigFloat& x, const PrecisionContext& ctx,
                      const HurwitzParams& params = {});

// d^j/ds^j zeta(s, x) at s = 0 for j = 0..j_max, one Cauchy ring shared by
// all orders.  Throws PrecisionError if the imaginary residue of any
// extracted derivative exceeds the context tolerance (under-resolved ring).
std::vector<BigFloat> zeta_derivs_at0(unsigned j_max, const BigFloat& x,
                                      const PrecisionContext& ctx,
                                      const CauchyRingParams& ring = {});

BigFloat zeta_deriv_at0(unsigned j, const BigFloat& x, const PrecisionContext& ctx,
                        const CauchyRingParams& ring = {});

// log Gamma(x), x > 0 (MPFR-backed; independent of the zeta engine so
// Lerch's identity is a genuine cross-check).
BigFloat log_gamma(const BigFloat& x, const PrecisionContext& ctx);

// Gamma(x) for real x away from the poles 0, -1, -2, ...
BigFloat gamma(const BigFloat& x, const PrecisionContext& ctx);

// psi(x), x > 0 (MPFR-backed, independent path).
BigFloat digamma(const BigFloat& x, const PrecisionContext& ctx);

// psi^(p)(x) = (-1)^(p+1) p! zeta(p+1, x), p >= 1, x > 0.
BigFloat polygamma(unsigned p, const BigFloat& x, const PrecisionContext& ctx);

}  // namespace stieltjes
