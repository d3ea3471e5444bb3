#pragma once

#include <vector>

#include "stieltjes/constants.hpp"
#include "stieltjes/precision.hpp"

namespace stieltjes::detail {

// cos/sin of 2*pi*t/q for t = 0..q-1, with quarter-turn values snapped to
// exact 0 / +-1 so structurally vanishing sums vanish exactly.
struct TrigTable {
  unsigned q;
  std::vector<BigFloat> cos_tab;
  std::vector<BigFloat> sin_tab;

  TrigTable(unsigned q_, const PrecisionContext& ctx) : q(q_) {
    ScopedPrecision guard(ctx.working_digits());
    const BigFloat two_pi = 2 * pi(ctx);
    cos_tab.reserve(q);
    sin_tab.reserve(q);
    for (unsigned t = 0; t < q; ++t) {
      if (t == 0) {
        cos_tab.emplace_back(1);
        sin_tab.emplace_back(0);
      } else if (2 * t == q) {
        cos_tab.emplace_back(-1);
        sin_tab.emplace_back(0);
      } else if (4 * t == q) {
        cos_tab.emplace_back(0);
        sin_tab.emplace_back(1);
      } else if (4 * t == 3 * q) {
        cos_tab.emplace_back(0);
        sin_tab.emplace_back(-1);
      } else {
        BigFloat theta = two_pi * t / q;
        cos_tab.push_back(cos(theta));
        sin_tab.push_back(sin(theta));
      }
    }
  }

  // cos / sin of 2*pi*r*p/q.
  const BigFloat& cos_rp(unsigned long r, unsigned long p) const {
    return cos_tab[static_cast<unsigned>((r * p) % q)];
  }
  const BigFloat& sin_rp(unsigned long r, unsigned long p) const {
    return sin_tab[static_cast<unsigned>((r * p) % q)];
  }

  // cot(p*pi/q) for p < q at the caller's working precision; exactly 0 at
  // p/q = 1/2.
  BigFloat cot_p_pi_over_q(unsigned p) const {
    if (2 * p == q) return BigFloat(0);
    BigFloat pi_v;
    mpfr_const_pi(pi_v.backend().data(), MPFR_RNDN);
    BigFloat theta = pi_v * p / q;
    return cos(theta) / sin(theta);
  }
};

}  // namespace stieltjes::detail
