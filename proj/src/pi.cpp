#include "nestrad/pi.hpp"

#include <algorithm>
#include <stdexcept>

#include "nestrad/errors.hpp"
#include "nestrad/precision.hpp"
#include "nestrad/radicals.hpp"

namespace nestrad {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

PiCertificate make_certificate(DyadicInterval iv, PiMethod method,
                               std::optional<std::int64_t> k_used,
                               std::int64_t p) {
  // classical bracket: any correct enclosure of pi lies inside (3, 4) and
  // overlaps (223/71, 22/7). Violations are construction bugs, not inputs.
  const mpq_class lo_bracket(223, 71), hi_bracket(22, 7);
  bool sane = iv.lo_scaled() > 0 && iv.lo().to_rational() > 3 &&
              iv.hi().to_rational() < 4 &&
              iv.lo().to_rational() < hi_bracket &&
              iv.hi().to_rational() > lo_bracket &&
              iv.lo_scaled() < iv.hi_scaled();
  if (!sane)
    throw std::logic_error("pi certificate failed sanity bracket: " +
                           iv.to_debug_string());
  return PiCertificate{std::move(iv), method, k_used, p};
}

// Enclosure of arctan(1/x) at scale 2^-q from the alternating series
// sum (-1)^i / ((2i+1) x^(2i+1)). Terms are enclosed by their floor/ceiling
// at scale q; the first omitted term bounds the remainder, with its sign
// deciding which endpoint absorbs it.
DyadicInterval atan_inv_of(unsigned long x, std::int64_t q) {
  BigInt one_scaled;
  mpz_setbit(one_scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(q));
  BigInt xsq = BigInt(x) * x;
  BigInt xpow(x);
  BigInt lo(0), hi(0);
  for (std::int64_t i = 0;; ++i) {
    BigInt den = (2 * i + 1) * xpow;
    BigInt t_lo, t_hi;
    mpz_fdiv_q(t_lo.get_mpz_t(), one_scaled.get_mpz_t(), den.get_mpz_t());
    mpz_cdiv_q(t_hi.get_mpz_t(), one_scaled.get_mpz_t(), den.get_mpz_t());
    if (den > one_scaled) {
      // Remainder below one ulp; it has the sign of this first omitted term.
      if (i % 2 == 0)
        hi += t_hi;
      else
        lo -= t_hi;
      break;
    }
    if (i % 2 == 0) {
      lo += t_lo;
      hi += t_hi;
    } else {
      lo -= t_hi;
      hi -= t_lo;
    }
    xpow *= xsq;
  }
  return DyadicInterval::from_scaled(std::move(lo), std::move(hi), q);
}

}  // namespace

PiCertificate certify_pi(std::int64_t p) {
  require(p >= 8, "certify_pi: precision must be >= 8");
  std::int64_t k = p / 2 + 3;
  DyadicInterval value = pi_from_radical_limit(k, p);
  return make_certificate(widen_hi_pow2(value, 1 - 2 * k),
                          PiMethod::RadicalLimit, k, p);
}

PiCertificate oracle_pi(std::int64_t p) {
  require(p >= 8, "oracle_pi: precision must be >= 8");
  std::int64_t q = p + 64;
  for (;;) {
    if (q > precision_ceiling())
      throw PrecisionExhausted("oracle_pi: p=" + std::to_string(p) +
                               " needs more than " +
                               std::to_string(precision_ceiling()) + " bits");
    DyadicInterval iv =
        ldexp(atan_inv_of(5, q), 4) - ldexp(atan_inv_of(239, q), 2);
    if (iv.width() <= Dyadic(BigInt(1), -p))
      return make_certificate(std::move(iv), PiMethod::ArctanSeriesOracle,
                              std::nullopt, p);
    q *= 2;
  }
}

PiCertificate intersect(const PiCertificate& a, const PiCertificate& b) {
  std::int64_t p = std::max(a.interval.precision(), b.interval.precision());
  DyadicInterval ap = a.interval.with_precision(p);
  DyadicInterval bp = b.interval.with_precision(p);
  BigInt lo = std::max(ap.lo_scaled(), bp.lo_scaled());
  BigInt hi = std::min(ap.hi_scaled(), bp.hi_scaled());
  if (lo > hi)
    throw std::logic_error("intersect: disjoint pi certificates: " +
                           a.interval.to_debug_string() + " vs " +
                           b.interval.to_debug_string());
  return make_certificate(
      DyadicInterval::from_scaled(std::move(lo), std::move(hi), p),
      PiMethod::Intersection, std::nullopt,
      std::max(a.precision, b.precision));
}

std::string pi_digits(std::int64_t n_digits, PiMethod method) {
  require(n_digits >= 1, "pi_digits: need at least one digit");
  // log2(10) = 3.3219...; a little headroom avoids one doubling round.
  std::int64_t p = (n_digits * 3322) / 1000 + 12;
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10,
                static_cast<unsigned long>(n_digits - 1));
  for (;;) {
    if (p > precision_ceiling())
      throw PrecisionExhausted("pi_digits: " + std::to_string(n_digits) +
                               " digits need more than " +
                               std::to_string(precision_ceiling()) + " bits");
    PiCertificate cert =
        method == PiMethod::RadicalLimit  ? certify_pi(p)
        : method == PiMethod::ArctanSeriesOracle
            ? oracle_pi(p)
            : intersect(certify_pi(p), oracle_pi(p));
    std::int64_t q = cert.interval.precision();
    BigInt a, b;
    BigInt num_lo = cert.interval.lo_scaled() * ten_pow;
    BigInt num_hi = cert.interval.hi_scaled() * ten_pow;
    mpz_fdiv_q_2exp(a.get_mpz_t(), num_lo.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(q));
    mpz_fdiv_q_2exp(b.get_mpz_t(), num_hi.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(q));
    if (a == b) {
      // Both endpoints truncate to the same digit block, so the block is
      // certified. 3 < pi < 4 keeps the length at exactly n_digits.
      std::string s = a.get_str();
      if (n_digits > 1) s.insert(1, ".");
      return s;
    }
    p *= 2;
  }
}

}  // namespace nestrad
