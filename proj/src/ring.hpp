#pragma once

#include <span>
#include <vector>

#include "stieltjes/constants.hpp"
#include "stieltjes/precision.hpp"

namespace stieltjes::detail {

// Trapezoidal sampling circle for Cauchy-integral Taylor coefficients.
// Node t sits at center + radius * (cos_tab[t], sin_tab[t]); the same
// tables serve as the e^{-ij theta} twiddle factors via index j*t mod P.
struct Ring {
  BigFloat radius;
  unsigned points;
  std::vector<BigFloat> cos_tab;
  std::vector<BigFloat> sin_tab;

  Ring(BigFloat r, unsigned p, const PrecisionContext& ctx) : radius(std::move(r)), points(p) {
    ScopedPrecision guard(ctx.working_digits());
    BigFloat two_pi = 2 * pi(ctx);
    cos_tab.reserve(points);
    sin_tab.reserve(points);
    for (unsigned t = 0; t < points; ++t) {
      BigFloat theta = two_pi * t / points;
      cos_tab.push_back(cos(theta));
      sin_tab.push_back(sin(theta));
    }
  }

  BigComplex node(const BigFloat& center, unsigned t) const {
    return {center + radius * cos_tab[t], radius * sin_tab[t]};
  }

  // j! * c_j  where c_j is the j-th Taylor coefficient of the sampled
  // function about the ring center.
  BigComplex derivative(std::span<const BigComplex> samples, unsigned j) const {
    BigComplex acc;
    for (unsigned t = 0; t < points; ++t) {
      unsigned u = static_cast<unsigned>((static_cast<unsigned long>(j) * t) % points);
      // e^{-i j theta_t} = (cos, -sin) at index u
      acc += samples[t] * BigComplex{cos_tab[u], -sin_tab[u]};
    }
    BigFloat scale = BigFloat(factorial(j)) / (points * pow(radius, static_cast<int>(j)));
    return acc * scale;
  }

  static BigInt factorial(unsigned j) {
    BigInt f(1);
    for (unsigned i = 2; i <= j; ++i) f *= i;
    return f;
  }
};

}  // namespace stieltjes::detail
