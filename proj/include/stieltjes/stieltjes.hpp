#pragma once

#include <string>

#include "stieltjes/hurwitz.hpp"
#include "stieltjes/precision.hpp"

namespace stieltjes {

// Laurent index n of gamma_n(x).  Desk-scale cap keeps ring resolution and
// cancellation budgets in a regime the error heuristics were validated for.
struct StieltjesIndex {
  unsigned n = 0;

  explicit StieltjesIndex(unsigned n_) : n(n_) {
    if (n_ > 8)
      throw std::invalid_argument("StieltjesIndex: n > 8 exceeds the supported range");
  }
};

enum class Method { Hasse, Cauchy, ClosedFormBell, ClosedFormCck, AtOne };

const char* method_name(Method m);

struct StieltjesResult {
  BigFloat value;
  BigFloat err_estimate;
  Method method = Method::Cauchy;
};

// Raw double sum  sum_{j=0}^{j_max} 1/(j+1) sum_{k=0}^{j} C(j,k) (-1)^k log^power(x+k),
// evaluated at an elevated precision that absorbs the ~2^j cancellation of
// the inner alternating sums.  Returns the sum and the last outer term
// (rounded back to the context precision).  Shared by the series oracle and
// the series-vs-derivative identity.
struct HasseSum {
  BigFloat value;
  BigFloat last_outer_term;
};
HasseSum hasse_double_sum(unsigned power, const BigFloat& x, const PrecisionContext& ctx,
                          unsigned j_max);

// gamma_n(x) from the log-power double series, truncated at j = j_max.
// Convergence is slow (the tail decays roughly like j^-(1+x) with log
// corrections), so err_estimate is dominated by the truncation allowance;
// treat this path as a structurally independent reference, not a precision
// workhorse.
StieltjesResult stieltjes_hasse(StieltjesIndex n, const BigFloat& x, const PrecisionContext& ctx,
                                unsigned j_max = 400);

// gamma_n(x) as the Laurent coefficient of zeta(s,x) - 1/(s-1) about s = 1,
// extracted by trapezoidal Cauchy quadrature on |s-1| = ring.radius.
StieltjesResult stieltjes_cauchy(StieltjesIndex n, const BigFloat& x, const PrecisionContext& ctx,
                                 const CauchyRingParams& ring = {});

// Two-path agreement report (|Hasse - Cauchy| vs the summed error
// estimates).  Failure is data, not an exception.
struct OracleCrossCheck {
  BigFloat hasse;
  BigFloat cauchy;
  BigFloat residual;
  BigFloat combined_err;
  bool pass = false;
  std::string to_string() const;
};
OracleCrossCheck oracle_cross_check(StieltjesIndex n, const BigFloat& x,
                                    const PrecisionContext& ctx, unsigned j_max = 400);

}  // namespace stieltjes
