#include "nestrad/isqrt.hpp"

#include <random>

#include "doctest.h"
#include "nestrad/errors.hpp"

using nestrad::BigInt;
using nestrad::ceil_sqrt;
using nestrad::floor_sqrt;

TEST_CASE("small values") {
  CHECK(floor_sqrt(BigInt(0)) == 0);
  CHECK(floor_sqrt(BigInt(1)) == 1);
  CHECK(floor_sqrt(BigInt(2)) == 1);
  CHECK(floor_sqrt(BigInt(3)) == 1);
  CHECK(floor_sqrt(BigInt(4)) == 2);
  CHECK(floor_sqrt(BigInt(99)) == 9);
  CHECK(floor_sqrt(BigInt(100)) == 10);
  CHECK(ceil_sqrt(BigInt(0)) == 0);
  CHECK(ceil_sqrt(BigInt(1)) == 1);
  CHECK(ceil_sqrt(BigInt(2)) == 2);
  CHECK(ceil_sqrt(BigInt(4)) == 2);
  CHECK(ceil_sqrt(BigInt(5)) == 3);
}

TEST_CASE("negative operand throws") {
  CHECK_THROWS_AS(floor_sqrt(BigInt(-1)), nestrad::NegativeOperand);
}

TEST_CASE("defining inequalities hold on random values") {
  std::mt19937_64 rng(123456);
  for (int bits : {8, 31, 64, 200, 1000, 4000}) {
    for (int i = 0; i < 40; ++i) {
      BigInt n(0);
      for (int b = 0; b < bits; b += 32)
        n = (n << 32) + static_cast<unsigned long>(rng() & 0xffffffffUL);
      BigInt r = floor_sqrt(n);
      CHECK(r * r <= n);
      CHECK((r + 1) * (r + 1) > n);
      BigInt c = ceil_sqrt(n);
      CHECK(c * c >= n);
      if (c > 0) CHECK((c - 1) * (c - 1) < n);
    }
  }
}

TEST_CASE("agrees with the library oracle") {
  std::mt19937_64 rng(98765);
  for (int i = 0; i < 200; ++i) {
    BigInt n(0);
    int words = 1 + static_cast<int>(rng() % 40);
    for (int w = 0; w < words; ++w)
      n = (n << 32) + static_cast<unsigned long>(rng() & 0xffffffffUL);
    BigInt expected;
    mpz_sqrt(expected.get_mpz_t(), n.get_mpz_t());
    CHECK(floor_sqrt(n) == expected);
  }
}

TEST_CASE("perfect squares and their neighbours") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    BigInt r(0);
    for (int w = 0; w < 8; ++w)
      r = (r << 32) + static_cast<unsigned long>(rng() & 0xffffffffUL);
    BigInt sq = r * r;
    CHECK(floor_sqrt(sq) == r);
    CHECK(ceil_sqrt(sq) == r);
    CHECK(floor_sqrt(sq - 1) == r - 1);
    CHECK(ceil_sqrt(sq - 1) == r);
    CHECK(floor_sqrt(sq + 1) == r);
    CHECK(ceil_sqrt(sq + 1) == r + 1);
  }
}
