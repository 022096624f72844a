#include "nestrad/interval.hpp"

#include <algorithm>
#include <stdexcept>

#include "nestrad/errors.hpp"
#include "nestrad/isqrt.hpp"

namespace nestrad {

namespace {

BigInt lshift(const BigInt& v, std::int64_t n) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  return r;
}

BigInt floor_div_pow2(const BigInt& v, std::int64_t n) {
  BigInt r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  return r;
}

BigInt ceil_div_pow2(const BigInt& v, std::int64_t n) {
  BigInt r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  return r;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

// Mantissa of d at scale 2^-p, rounded down / up.
BigInt scale_floor(const Dyadic& d, std::int64_t p) {
  std::int64_t s = d.exponent() + p;
  return s >= 0 ? lshift(d.mantissa(), s) : floor_div_pow2(d.mantissa(), -s);
}

BigInt scale_ceil(const Dyadic& d, std::int64_t p) {
  std::int64_t s = d.exponent() + p;
  return s >= 0 ? lshift(d.mantissa(), s) : ceil_div_pow2(d.mantissa(), -s);
}

}  // namespace

DyadicInterval DyadicInterval::from_scaled(BigInt lo_num, BigInt hi_num,
                                           std::int64_t precision) {
  if (precision < 1) throw std::invalid_argument("interval: precision < 1");
  if (lo_num > hi_num) throw std::invalid_argument("interval: lo > hi");
  return DyadicInterval(std::move(lo_num), std::move(hi_num), precision);
}

DyadicInterval DyadicInterval::from_integer(const BigInt& n,
                                            std::int64_t precision) {
  if (precision < 1) throw std::invalid_argument("interval: precision < 1");
  BigInt m = lshift(n, precision);
  return DyadicInterval(m, m, precision);
}

DyadicInterval DyadicInterval::from_endpoints(const Dyadic& lo, const Dyadic& hi,
                                              std::int64_t precision) {
  if (precision < 1) throw std::invalid_argument("interval: precision < 1");
  if (lo > hi) throw std::invalid_argument("interval: lo > hi");
  return DyadicInterval(scale_floor(lo, precision), scale_ceil(hi, precision),
                        precision);
}

DyadicInterval DyadicInterval::with_precision(std::int64_t p) const {
  if (p < 1) throw std::invalid_argument("interval: precision < 1");
  if (p >= prec_) {
    return DyadicInterval(lshift(lo_num_, p - prec_), lshift(hi_num_, p - prec_),
                          p);
  }
  return DyadicInterval(floor_div_pow2(lo_num_, prec_ - p),
                        ceil_div_pow2(hi_num_, prec_ - p), p);
}

bool DyadicInterval::contains(const mpq_class& x) const {
  // x in [lo, hi] iff lo_num * den <= num * 2^p <= hi_num * den (den > 0).
  BigInt scaled_num = lshift(x.get_num(), prec_);
  return lo_num_ * x.get_den() <= scaled_num &&
         scaled_num <= hi_num_ * x.get_den();
}

bool DyadicInterval::contains(const BigInt& n) const {
  BigInt m = lshift(n, prec_);
  return lo_num_ <= m && m <= hi_num_;
}

bool DyadicInterval::contains_integer() const {
  return floor_div_pow2(hi_num_, prec_) >= ceil_div_pow2(lo_num_, prec_);
}

bool DyadicInterval::is_subset_of(const DyadicInterval& other) const {
  std::int64_t p = std::max(prec_, other.prec_);
  return lshift(lo_num_, p - prec_) >= lshift(other.lo_num_, p - other.prec_) &&
         lshift(hi_num_, p - prec_) <= lshift(other.hi_num_, p - other.prec_);
}

std::string DyadicInterval::to_debug_string() const {
  return "[" + lo().to_decimal_string() + ", " + hi().to_decimal_string() +
         "] @ 2^-" + std::to_string(prec_);
}

DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
  std::int64_t p = std::max(a.precision(), b.precision());
  DyadicInterval ap = a.with_precision(p), bp = b.with_precision(p);
  return DyadicInterval::from_scaled(ap.lo_scaled() + bp.lo_scaled(),
                                     ap.hi_scaled() + bp.hi_scaled(), p);
}

DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
  std::int64_t p = std::max(a.precision(), b.precision());
  DyadicInterval ap = a.with_precision(p), bp = b.with_precision(p);
  return DyadicInterval::from_scaled(ap.lo_scaled() - bp.hi_scaled(),
                                     ap.hi_scaled() - bp.lo_scaled(), p);
}

DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
  // Exact products live at scale 2^-(pa+pb); round outward to max(pa, pb).
  BigInt p1 = a.lo_scaled() * b.lo_scaled();
  BigInt p2 = a.lo_scaled() * b.hi_scaled();
  BigInt p3 = a.hi_scaled() * b.lo_scaled();
  BigInt p4 = a.hi_scaled() * b.hi_scaled();
  BigInt lo = std::min(std::min(p1, p2), std::min(p3, p4));
  BigInt hi = std::max(std::max(p1, p2), std::max(p3, p4));
  std::int64_t shift = std::min(a.precision(), b.precision());
  return DyadicInterval::from_scaled(floor_div_pow2(lo, shift),
                                     ceil_div_pow2(hi, shift),
                                     std::max(a.precision(), b.precision()));
}

DyadicInterval sqrt(const DyadicInterval& a) {
  if (a.lo_scaled() < 0)
    throw NegativeOperand("sqrt: interval lower endpoint is negative: " +
                          a.to_debug_string());
  // sqrt(m * 2^-p) = sqrt(m * 2^p) * 2^-p.
  std::int64_t p = a.precision();
  return DyadicInterval::from_scaled(floor_sqrt(lshift(a.lo_scaled(), p)),
                                     ceil_sqrt(lshift(a.hi_scaled(), p)), p);
}

DyadicInterval operator/(const BigInt& n, const DyadicInterval& a) {
  if (a.lo_scaled() <= 0 && a.hi_scaled() >= 0)
    throw DivisorStraddlesZero("divide: interval contains zero: " +
                               a.to_debug_string());
  // n / (m * 2^-p) at scale 2^-p is n * 2^(2p) / m. The map x -> n/x is
  // monotone away from zero, so the endpoint quotients bracket the image.
  std::int64_t p = a.precision();
  BigInt num = lshift(n, 2 * p);
  BigInt f1 = floor_div(num, a.lo_scaled());
  BigInt f2 = floor_div(num, a.hi_scaled());
  BigInt c1 = ceil_div(num, a.lo_scaled());
  BigInt c2 = ceil_div(num, a.hi_scaled());
  return DyadicInterval::from_scaled(std::min(f1, f2), std::max(c1, c2), p);
}

DyadicInterval div_enclosure(const DyadicInterval& a, const DyadicInterval& b,
                             std::int64_t out_precision) {
  if (b.lo_scaled() <= 0)
    throw DivisorStraddlesZero("div_enclosure: divisor not strictly positive: " +
                               b.to_debug_string());
  // (x * 2^-pa) / (y * 2^-pb) at scale 2^-q is x * 2^(q+pb-pa) / y.
  std::int64_t s = out_precision + b.precision() - a.precision();
  BigInt na = a.lo_scaled(), nb = a.hi_scaled();
  BigInt da = b.lo_scaled(), db = b.hi_scaled();
  if (s >= 0) {
    na = lshift(na, s);
    nb = lshift(nb, s);
  } else {
    da = lshift(da, -s);
    db = lshift(db, -s);
  }
  BigInt lo = std::min(std::min(floor_div(na, da), floor_div(na, db)),
                       std::min(floor_div(nb, da), floor_div(nb, db)));
  BigInt hi = std::max(std::max(ceil_div(na, da), ceil_div(na, db)),
                       std::max(ceil_div(nb, da), ceil_div(nb, db)));
  return DyadicInterval::from_scaled(std::move(lo), std::move(hi), out_precision);
}

DyadicInterval ldexp(const DyadicInterval& a, std::int64_t k) {
  std::int64_t p = a.precision() - k;
  if (p >= 1)
    return DyadicInterval::from_scaled(a.lo_scaled(), a.hi_scaled(), p);
  // Scale would leave the representable range; re-express at 2^-1.
  std::int64_t s = 1 - p;
  return DyadicInterval::from_scaled(lshift(a.lo_scaled(), s),
                                     lshift(a.hi_scaled(), s), 1);
}

DyadicInterval widen_hi_pow2(const DyadicInterval& a, std::int64_t e) {
  std::int64_t s = e + a.precision();
  BigInt bump = s >= 0 ? lshift(BigInt(1), s) : BigInt(1);
  return DyadicInterval::from_scaled(a.lo_scaled(), a.hi_scaled() + bump,
                                     a.precision());
}

std::optional<BigInt> floor_certified(const DyadicInterval& a) {
  BigInt n = floor_div_pow2(a.lo_scaled(), a.precision());
  BigInt next = lshift(n + 1, a.precision());
  if (a.hi_scaled() < next) return n;
  return std::nullopt;
}

}  // namespace nestrad
