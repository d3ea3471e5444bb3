#include "stieltjes/bell.hpp"

namespace stieltjes {

// Derivative-at-zero values of the reflection-kernel log-derivative
// functions.  Both kinds share the constant term -(euler_gamma + log(2 pi q));
// for i >= 1 the g/h values are (-1)^i mirrors of each other built from
// i! zeta(i+1).
BellArgumentSet bell_args(BellKind kind, unsigned q, unsigned count, const PrecisionContext& ctx) {
  if (count == 0) throw std::invalid_argument("bell_args: count must be >= 1");
  if (q == 0) throw std::invalid_argument("bell_args: q must be >= 1");
  ScopedPrecision guard(ctx.working_digits());

  BellArgumentSet out;
  out.kind = kind;
  out.q = q;
  out.values.reserve(count);

  const BigFloat base = euler_gamma(ctx) + log_two_pi_q(q, ctx);
  out.values.push_back(kind == BellKind::PsiStar ? base : -base);

  BigFloat factorial(1);
  for (unsigned i = 1; i < count; ++i) {
    factorial *= i;
    BigFloat zeta_term = factorial * zeta_int(i + 1, ctx);
    switch (kind) {
      case BellKind::PsiStar:
        out.values.push_back(zeta_term);
        break;
      case BellKind::G: {
        // ((1/2^{i+1}) [(-1)^{i+1} + 1] - 1) * i! zeta(i+1)
        BigFloat coeff = (i % 2 == 0) ? BigFloat(-1)
                                      : BigFloat(1) / pow(BigFloat(2), static_cast<int>(i)) - 1;
        out.values.push_back(coeff * zeta_term);
        break;
      }
      case BellKind::H: {
        // h(s) = g(-s): h^(i)(0) = (-1)^i g^(i)(0)
        BigFloat coeff = (i % 2 == 0) ? BigFloat(-1)
                                      : BigFloat(1) - BigFloat(1) / pow(BigFloat(2), static_cast<int>(i));
        out.values.push_back(coeff * zeta_term);
        break;
      }
    }
  }
  return out;
}

}  // namespace stieltjes
