#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "stieltjes/constants.hpp"
#include "stieltjes/precision.hpp"

namespace stieltjes {

// Complete exponential Bell polynomial Y_n(x_1, ..., x_n) by the binomial
// recurrence Y_{m+1} = sum_{k=0}^{m} C(m,k) Y_{m-k} x_{k+1}.  Works for any
// scalar with ring operations (BigFloat, BigRational).
template <typename Scalar>
Scalar complete_bell(std::span<const Scalar> args, unsigned n) {
  if (args.size() < n)
    throw std::invalid_argument("complete_bell: need at least n arguments");
  std::vector<Scalar> y;
  y.reserve(n + 1);
  y.emplace_back(1);
  for (unsigned m = 0; m < n; ++m) {
    Scalar acc(0);
    for (unsigned k = 0; k <= m; ++k)
      acc += Scalar(binomial(m, k)) * y[m - k] * args[k];
    y.push_back(std::move(acc));
  }
  return y[n];
}

template <typename Scalar>
Scalar complete_bell(const std::vector<Scalar>& args, unsigned n) {
  return complete_bell(std::span<const Scalar>(args), n);
}

// Derivative-at-zero argument vectors fed to Y_n by the rational closed
// forms.  values[i] holds the i-th derivative at 0, so Y_n consumes
// values[0..n-1].
enum class BellKind {
  G,        // g(s) from the cosine limb of the reflection kernel
  H,        // h(s) = g(-s) from the sine limb
  PsiStar,  // arguments of Y_i*(psi(0)): (euler_gamma + log(2 pi q), 1! zeta(2), ...)
};

struct BellArgumentSet {
  BellKind kind = BellKind::G;
  unsigned q = 1;
  std::vector<BigFloat> values;
};

BellArgumentSet bell_args(BellKind kind, unsigned q, unsigned count, const PrecisionContext& ctx);

inline BigFloat complete_bell(const BellArgumentSet& args, unsigned n) {
  return complete_bell(std::span<const BigFloat>(args.values), n);
}

}  // namespace stieltjes
