#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace nestrad {

using BigInt = mpz_class;

// Exact dyadic rational m * 2^e, kept canonical: m odd, or m = 0 with e = 0.
// Canonical form means equal values always have identical (mantissa,
// exponent) pairs, so encode() round-trips bit for bit.
class Dyadic {
 public:
  Dyadic() : mant_(0), exp_(0) {}
  Dyadic(BigInt mantissa, std::int64_t exponent);

  static Dyadic from_integer(const BigInt& n) { return Dyadic(n, 0); }

  const BigInt& mantissa() const { return mant_; }
  std::int64_t exponent() const { return exp_; }
  bool is_zero() const { return mant_ == 0; }
  int sign() const { return sgn(mant_); }

  mpq_class to_rational() const;

  // Exact decimal expansion, e.g. "-2.625". Never rounds.
  std::string to_decimal_string() const;

  // Wire form "<mantissa>p<exponent>", e.g. "-21p-3" for -21 * 2^-3.
  std::string encode() const;
  static Dyadic decode(std::string_view text);

  Dyadic operator-() const;

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.mant_ == b.mant_ && a.exp_ == b.exp_;
  }

 private:
  BigInt mant_;
  std::int64_t exp_;
};

// Exact arithmetic; results are canonical.
Dyadic operator+(const Dyadic& a, const Dyadic& b);
Dyadic operator-(const Dyadic& a, const Dyadic& b);
Dyadic operator*(const Dyadic& a, const Dyadic& b);

}  // namespace nestrad
