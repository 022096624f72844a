#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nestrad/dyadic.hpp"

namespace nestrad {

// Closed interval [lo, hi] over dyadic rationals, with both endpoints held
// as integer mantissas at the common scale 2^-precision. Sharing the scale
// makes ordering, width and floor extraction plain integer comparisons.
// Mantissas are deliberately not reduced to odd form; the scale is part of
// the representation.
//
// All operations round outward only, so a result interval always contains
// the exact real-number image of its operand intervals. Exact operations
// (+, -, 2^k scaling, refinement to a finer scale) add no width; rounding
// operations widen by at most one unit in the last place per endpoint.
class DyadicInterval {
 public:
  // Endpoints lo_num * 2^-precision, hi_num * 2^-precision.
  // Requires lo_num <= hi_num and precision >= 1.
  static DyadicInterval from_scaled(BigInt lo_num, BigInt hi_num,
                                    std::int64_t precision);
  // Degenerate interval [n, n].
  static DyadicInterval from_integer(const BigInt& n, std::int64_t precision);
  // Outward-rounds the given endpoints to the scale 2^-precision.
  static DyadicInterval from_endpoints(const Dyadic& lo, const Dyadic& hi,
                                       std::int64_t precision);

  Dyadic lo() const { return Dyadic(lo_num_, -prec_); }
  Dyadic hi() const { return Dyadic(hi_num_, -prec_); }
  const BigInt& lo_scaled() const { return lo_num_; }
  const BigInt& hi_scaled() const { return hi_num_; }
  std::int64_t precision() const { return prec_; }

  Dyadic width() const { return Dyadic(hi_num_ - lo_num_, -prec_); }

  // Re-expresses the interval at scale 2^-p: exact when refining (p larger),
  // outward-rounded when coarsening.
  DyadicInterval with_precision(std::int64_t p) const;

  bool contains(const mpq_class& x) const;
  bool contains(const BigInt& n) const;
  bool contains_integer() const;
  bool is_subset_of(const DyadicInterval& other) const;

  // "[<lo decimal>, <hi decimal>] @ 2^-p" with exact endpoint expansions.
  std::string to_debug_string() const;

 private:
  DyadicInterval(BigInt lo_num, BigInt hi_num, std::int64_t precision)
      : lo_num_(std::move(lo_num)), hi_num_(std::move(hi_num)), prec_(precision) {}

  BigInt lo_num_;
  BigInt hi_num_;
  std::int64_t prec_;
};

// Exact: result carries the finer of the two scales.
DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b);

// Exact product computed at the combined scale, then rounded outward to the
// finer of the two operand scales.
DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b);

// Square root at the operand's scale: floor and ceiling integer square
// roots of the rescaled mantissas. Throws NegativeOperand if lo < 0.
DyadicInterval sqrt(const DyadicInterval& a);

// n / a for an interval a with 0 strictly outside it; result at a's scale.
// Throws DivisorStraddlesZero otherwise.
DyadicInterval operator/(const BigInt& n, const DyadicInterval& a);

// a / b at the requested output scale; requires b.lo > 0, throws
// DivisorStraddlesZero otherwise.
DyadicInterval div_enclosure(const DyadicInterval& a, const DyadicInterval& b,
                             std::int64_t out_precision);

// Exact scaling by 2^k. Scaling up re-expresses mantissas only when the
// scale would fall below 2^-1.
DyadicInterval ldexp(const DyadicInterval& a, std::int64_t k);

// Adds 2^e to the upper endpoint, rounding up to one ulp when 2^e falls
// below the scale. Used to absorb one-sided truncation-error bounds.
DyadicInterval widen_hi_pow2(const DyadicInterval& a, std::int64_t e);

// The certified floor: returns n exactly when n <= lo and hi < n + 1, so
// every real in the interval has floor n. Returns nullopt when the interval
// straddles an integer; escalation policy is the caller's business.
std::optional<BigInt> floor_certified(const DyadicInterval& a);

}  // namespace nestrad
