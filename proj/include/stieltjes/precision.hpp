#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <numeric>
#include <stdexcept>
#include <string>

namespace stieltjes {

// Arbitrary-precision scalar types.  BigFloat precision is dynamic (decimal
// digits); every public operation pins the working precision from a
// PrecisionContext on entry, so results never silently degrade.
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Thrown when a computation cannot reach the requested accuracy within its
// hard caps (Euler-Maclaurin order cap, Hasse cancellation budget, Cauchy
// ring resolution).  The message says which knob to turn.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Working-precision policy: requested digits plus guard digits that absorb
// cancellation in binomial sums and ring quadratures.
class PrecisionContext {
 public:
  static constexpr unsigned kToleranceSlack = 10;

  explicit PrecisionContext(unsigned target_digits) : target_(target_digits) {
    if (target_digits == 0)
      throw std::invalid_argument("PrecisionContext: target_digits must be >= 1");
    guard_ = std::max(20u, (target_digits + 3) / 4);
  }

  unsigned target_digits() const { return target_; }
  unsigned guard_digits() const { return guard_; }
  unsigned working_digits() const { return target_ + guard_; }

  // 10^-(target - slack), clamped into (0, 1).
  BigFloat tolerance() const;

 private:
  unsigned target_;
  unsigned guard_;
};

inline PrecisionContext make_context(unsigned target_digits) {
  return PrecisionContext(target_digits);
}

// RAII guard for the thread's default BigFloat precision.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits)
      : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits);
  }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;
  ~ScopedPrecision() { BigFloat::default_precision(saved_); }

 private:
  unsigned saved_;
};

inline BigFloat PrecisionContext::tolerance() const {
  ScopedPrecision guard(working_digits());
  long e = static_cast<long>(target_) - static_cast<long>(kToleranceSlack);
  if (e < 1) e = 1;
  return pow(BigFloat(10), -e);
}

// Copy rounded to the given working precision.  Used when handing cached
// high-precision constants to a lower-precision computation.
inline BigFloat at_precision(const BigFloat& v, unsigned digits) {
  BigFloat out = v;
  out.precision(digits);
  return out;
}

// Reduced fraction p/q in (0, 1].  Operations that evaluate cot(p*pi/q)
// additionally require p < q and check it at the call site.
struct RationalArg {
  unsigned p = 1;
  unsigned q = 1;

  RationalArg(unsigned p_, unsigned q_) {
    if (p_ == 0 || q_ == 0)
      throw std::invalid_argument("RationalArg: p and q must be positive");
    if (p_ > q_)
      throw std::invalid_argument("RationalArg: requires p <= q");
    unsigned g = std::gcd(p_, q_);
    p = p_ / g;
    q = q_ / g;
  }

  bool is_one() const { return p == q; }

  BigFloat value(unsigned digits) const {
    ScopedPrecision guard(digits);
    return BigFloat(p) / q;
  }
};

// Complex scalar over BigFloat.  Only the operations the zeta machinery
// needs; arguments are expected to share one working precision.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  BigComplex() : re(0), im(0) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(const BigFloat& r) : re(r), im(0) {}
  explicit BigComplex(long r) : re(r), im(0) {}

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o) {
    BigFloat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  BigComplex& operator*=(const BigFloat& s) {
    re *= s;
    im *= s;
    return *this;
  }
};

inline BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
inline BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
inline BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
inline BigComplex operator*(BigComplex a, const BigFloat& s) { return a *= s; }
inline BigComplex operator*(const BigFloat& s, BigComplex a) { return a *= s; }
inline BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

inline BigComplex operator+(const BigComplex& a, const BigFloat& s) { return {a.re + s, a.im}; }
inline BigComplex operator-(const BigComplex& a, const BigFloat& s) { return {a.re - s, a.im}; }
inline BigComplex operator-(const BigComplex& a, long s) { return {a.re - s, a.im}; }
inline BigComplex operator+(const BigComplex& a, long s) { return {a.re + s, a.im}; }

inline BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }

inline BigFloat abs(const BigComplex& a) {
  using boost::multiprecision::hypot;
  return hypot(a.re, a.im);
}

inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline BigComplex operator/(const BigComplex& a, const BigFloat& s) {
  return {a.re / s, a.im / s};
}

inline BigComplex reciprocal(const BigComplex& a) {
  BigFloat d = a.re * a.re + a.im * a.im;
  return {a.re / d, -a.im / d};
}

inline BigComplex exp(const BigComplex& a) {
  BigFloat m = exp(a.re);
  return {m * cos(a.im), m * sin(a.im)};
}

// base^e for positive real base: exp(e * log base).
inline BigComplex pow_positive_base(const BigFloat& base, const BigComplex& e) {
  BigFloat lb = log(base);
  return exp(BigComplex{e.re * lb, e.im * lb});
}

}  // namespace stieltjes
