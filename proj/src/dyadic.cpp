#include "nestrad/dyadic.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace nestrad {

namespace {

BigInt lshift(const BigInt& v, std::int64_t n) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  return r;
}

}  // namespace

Dyadic::Dyadic(BigInt mantissa, std::int64_t exponent)
    : mant_(std::move(mantissa)), exp_(exponent) {
  if (mant_ == 0) {
    exp_ = 0;
    return;
  }
  // Trailing-zero count is the same for m and -m.
  mp_bitcnt_t tz = mpz_scan1(mant_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), tz);
    exp_ += static_cast<std::int64_t>(tz);
  }
}

mpq_class Dyadic::to_rational() const {
  mpq_class q(mant_);
  if (exp_ >= 0) {
    mpq_class f(lshift(BigInt(1), exp_));
    q *= f;
  } else {
    mpq_class f(BigInt(1), lshift(BigInt(1), -exp_));
    q *= f;
    q.canonicalize();
  }
  return q;
}

std::string Dyadic::to_decimal_string() const {
  if (mant_ == 0) return "0";
  bool neg = mant_ < 0;
  if (exp_ >= 0) {
    BigInt v = lshift(abs(mant_), exp_);
    std::string s = v.get_str();
    return neg ? "-" + s : s;
  }
  // m * 2^-f = (m * 5^f) * 10^-f, exact.
  std::int64_t f = -exp_;
  BigInt p5;
  mpz_ui_pow_ui(p5.get_mpz_t(), 5, static_cast<unsigned long>(f));
  BigInt v = abs(mant_) * p5;
  std::string s = v.get_str();
  if (static_cast<std::int64_t>(s.size()) <= f)
    s.insert(0, static_cast<std::size_t>(f + 1 - s.size()), '0');
  s.insert(s.size() - static_cast<std::size_t>(f), ".");
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return neg ? "-" + s : s;
}

std::string Dyadic::encode() const {
  return mant_.get_str() + "p" + std::to_string(exp_);
}

Dyadic Dyadic::decode(std::string_view text) {
  std::size_t pos = text.find('p');
  if (pos == std::string_view::npos || pos == 0 || pos + 1 == text.size())
    throw std::invalid_argument("dyadic decode: expected <mantissa>p<exponent>");
  BigInt m(std::string(text.substr(0, pos)), 10);  // throws on junk
  std::int64_t e = 0;
  const char* first = text.data() + pos + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, e);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("dyadic decode: bad exponent");
  return Dyadic(std::move(m), e);
}

Dyadic Dyadic::operator-() const {
  Dyadic r;
  r.mant_ = -mant_;
  r.exp_ = mant_ == 0 ? 0 : exp_;
  return r;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  std::int64_t e = std::min(a.exp_, b.exp_);
  BigInt av = lshift(a.mant_, a.exp_ - e);
  BigInt bv = lshift(b.mant_, b.exp_ - e);
  int c = cmp(av, bv);
  return c <=> 0;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t e = std::min(a.exponent(), b.exponent());
  BigInt av = lshift(a.mantissa(), a.exponent() - e);
  BigInt bv = lshift(b.mantissa(), b.exponent() - e);
  return Dyadic(av + bv, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa() * b.mantissa(), a.exponent() + b.exponent());
}

}  // namespace nestrad
