#include "nestrad/isqrt.hpp"

#include "nestrad/errors.hpp"

namespace nestrad {

BigInt floor_sqrt(const BigInt& n) {
  if (n < 0) throw NegativeOperand("floor_sqrt: negative operand");
  if (n == 0) return BigInt(0);
  // Start from 2^ceil(b/2) where b is the bit length, so x0 > sqrt(n).
  // With x0 >= sqrt(n) the iterate stays >= floor(sqrt(n)) and decreases
  // until two steps cross, which is the standard termination condition.
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  BigInt x;
  mpz_setbit(x.get_mpz_t(), static_cast<mp_bitcnt_t>((bits + 1) / 2));
  for (;;) {
    BigInt y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

BigInt ceil_sqrt(const BigInt& n) {
  BigInt r = floor_sqrt(n);
  if (r * r != n) ++r;
  return r;
}

}  // namespace nestrad
