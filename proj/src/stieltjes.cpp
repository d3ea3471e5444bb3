#include "stieltjes/stieltjes.hpp"

#include <sstream>

#include "stieltjes/constants.hpp"
#include "ring.hpp"

namespace stieltjes {

const char* method_name(Method m) {
  switch (m) {
    case Method::Hasse: return "hasse";
    case Method::Cauchy: return "cauchy";
    case Method::ClosedFormBell: return "bell";
    case Method::ClosedFormCck: return "cck";
    case Method::AtOne: return "at-one";
  }
  return "?";
}

HasseSum hasse_double_sum(unsigned power, const BigFloat& x, const PrecisionContext& ctx,
                          unsigned j_max) {
  if (x <= 0) throw std::domain_error("hasse_double_sum: requires x > 0");
  const unsigned wd = ctx.working_digits();
  // The inner alternating sums cancel to ~2^-j of their largest term, so the
  // whole summation runs at wd + 0.4*j_max digits and is rounded back at the
  // end.  Above the hard cap the elevation itself becomes the bottleneck.
  const unsigned elevated = wd + static_cast<unsigned>(0.4 * j_max) + 8;
  if (elevated > 20000)
    throw PrecisionError("hasse_double_sum: cancellation budget exceeds the hard cap; "
                         "raise ctx digits or lower j_max");
  ScopedPrecision guard(elevated);

  // log^power(x+k), k = 0..j_max, then one Pascal row per outer index.  At
  // this precision the row entries (<= 2^j_max) stay exactly representable.
  std::vector<BigFloat> log_pow(j_max + 1);
  for (unsigned k = 0; k <= j_max; ++k) {
    BigFloat l = log(at_precision(x, elevated) + k);
    BigFloat p(1);
    for (unsigned e = 0; e < power; ++e) p *= l;
    log_pow[k] = p;
  }

  std::vector<BigFloat> row;
  row.reserve(j_max + 1);
  row.push_back(BigFloat(1));
  BigFloat total(0), outer_term(0);
  for (unsigned j = 0; j <= j_max; ++j) {
    if (j > 0) {
      row.push_back(BigFloat(1));
      for (unsigned k = j - 1; k >= 1; --k) row[k] += row[k - 1];
    }
    BigFloat inner(0);
    for (unsigned k = 0; k <= j; ++k) {
      if (k % 2 == 0)
        inner += row[k] * log_pow[k];
      else
        inner -= row[k] * log_pow[k];
    }
    outer_term = inner / (j + 1);
    total += outer_term;
  }
  return {at_precision(total, wd), at_precision(outer_term, wd)};
}

StieltjesResult stieltjes_hasse(StieltjesIndex n, const BigFloat& x, const PrecisionContext& ctx,
                                unsigned j_max) {
  if (j_max < 10) throw std::invalid_argument("stieltjes_hasse: requires j_max >= 10");
  const unsigned wd = ctx.working_digits();
  ScopedPrecision guard(wd);

  HasseSum sum = hasse_double_sum(n.n + 1, x, ctx, j_max);
  StieltjesResult out;
  out.method = Method::Hasse;
  out.value = -sum.value / (n.n + 1);

  // Truncation dominates: the outer terms decay roughly like j^-(1+x) with
  // logarithmic corrections, so the tail is ~ j_max * |last term| with an
  // x-dependent margin (validated against the Cauchy path in tests).
  BigFloat tail_margin = BigFloat(4) * (j_max + 1);
  if (x < 1) tail_margin /= x;
  out.err_estimate = abs(sum.last_outer_term) / (n.n + 1) * tail_margin
                     + pow(BigFloat(10), -static_cast<long>(wd) + 2);
  return out;
}

StieltjesResult stieltjes_cauchy(StieltjesIndex n, const BigFloat& x, const PrecisionContext& ctx,
                                 const CauchyRingParams& ring_in) {
  const unsigned wd = ctx.working_digits();
  ScopedPrecision guard(wd);
  if (x <= 0) throw std::domain_error("stieltjes_cauchy: requires x > 0");
  CauchyRingParams ring = ring_in;
  if (ring.points == 0) ring = CauchyRingParams::defaults(ctx);

  detail::Ring circle(ring.radius, ring.points, ctx);
  const BigFloat center(1);
  std::vector<BigComplex> samples;
  samples.reserve(ring.points);
  BigFloat max_mag(0);
  for (unsigned t = 0; t < ring.points; ++t) {
    BigComplex s = circle.node(center, t);
    // zeta(s, x) - 1/(s-1) with s-1 = radius * e^{i theta} taken exactly.
    BigComplex pole{circle.cos_tab[t] / ring.radius, -circle.sin_tab[t] / ring.radius};
    BigComplex f = hurwitz_zeta(s, x, ctx) - pole;
    max_mag = std::max(max_mag, abs(f));
    samples.push_back(std::move(f));
  }

  BigComplex d = circle.derivative(samples, n.n);
  const BigFloat tol = ctx.tolerance();
  if (abs(d.im) > tol * (1 + abs(d.re)))
    throw PrecisionError("stieltjes_cauchy: imaginary residue above tolerance; "
                         "increase ring points");

  StieltjesResult out;
  out.method = Method::Cauchy;
  out.value = (n.n % 2 == 0) ? d.re : -d.re;

  BigFloat deriv_scale = BigFloat(detail::Ring::factorial(n.n))
                         / pow(ring.radius, static_cast<int>(n.n));
  out.err_estimate = max_mag * deriv_scale
                     * (pow(ring.radius / BigFloat("0.9"), static_cast<int>(ring.points))
                        + ring.points * pow(BigFloat(10), -static_cast<long>(wd) + 1));
  return out;
}

OracleCrossCheck oracle_cross_check(StieltjesIndex n, const BigFloat& x,
                                    const PrecisionContext& ctx, unsigned j_max) {
  if (n.n > 4)
    throw std::invalid_argument("oracle_cross_check: supported for n <= 4");
  ScopedPrecision guard(ctx.working_digits());
  StieltjesResult h = stieltjes_hasse(n, x, ctx, j_max);
  StieltjesResult c = stieltjes_cauchy(n, x, ctx);
  OracleCrossCheck out;
  out.hasse = h.value;
  out.cauchy = c.value;
  out.residual = abs(h.value - c.value);
  out.combined_err = h.err_estimate + c.err_estimate;
  out.pass = out.residual <= out.combined_err;
  return out;
}

std::string OracleCrossCheck::to_string() const {
  std::ostringstream os;
  os << "hasse=" << hasse.str(20, std::ios_base::scientific)
     << " cauchy=" << cauchy.str(20, std::ios_base::scientific)
     << " residual=" << residual.str(3, std::ios_base::scientific)
     << " combined_err=" << combined_err.str(3, std::ios_base::scientific)
     << (pass ? " PASS" : " FAIL");
  return os.str();
}

}  // namespace stieltjes
