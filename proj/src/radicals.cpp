#include "nestrad/radicals.hpp"

#include <stdexcept>
#include <string>

#include "nestrad/errors.hpp"
#include "nestrad/precision.hpp"

namespace nestrad {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

DyadicInterval compute_c(std::int64_t k, std::int64_t p) {
  require(k >= 0, "compute_c: k must be >= 0");
  require(p >= 8, "compute_c: precision must be >= 8");
  DyadicInterval c = DyadicInterval::from_integer(BigInt(0), p);
  const DyadicInterval two = DyadicInterval::from_integer(BigInt(2), p);
  for (std::int64_t j = 1; j <= k; ++j) c = sqrt(two + c);
  return c;
}

DyadicInterval compute_sqrt_gap(std::int64_t k, std::int64_t p) {
  require(k >= 1, "compute_sqrt_gap: k must be >= 1");
  require(p >= 8, "compute_sqrt_gap: precision must be >= 8");
  // 2 - c_{k-1} is about pi^2 / 4^k, so 2k bits cancel; work at p + 2k + 16.
  std::int64_t q = p + 2 * k + 16;
  for (;;) {
    if (q > precision_ceiling())
      throw PrecisionExhausted("compute_sqrt_gap: k=" + std::to_string(k) +
                               " needs more than " +
                               std::to_string(precision_ceiling()) + " bits");
    DyadicInterval gap =
        DyadicInterval::from_integer(BigInt(2), q) - compute_c(k - 1, q);
    if (gap.lo_scaled() > 0) return sqrt(gap);
    q *= 2;
  }
}

RadicalState make_radical_state(std::int64_t k, std::int64_t p) {
  require(k >= 1, "make_radical_state: k must be >= 1");
  return RadicalState{k, compute_c(k, p), compute_sqrt_gap(k, p), p};
}

DyadicInterval arctan_argument(std::int64_t k, std::int64_t p) {
  require(k >= 1, "arctan_argument: k must be >= 1");
  require(p >= 8, "arctan_argument: precision must be >= 8");
  DyadicInterval num = compute_sqrt_gap(k, p);
  DyadicInterval den = compute_c(k, p + 16);
  return div_enclosure(num, den, p + k + 8);
}

DyadicInterval pi_from_radical_limit(std::int64_t k, std::int64_t p) {
  require(k >= 1, "pi_from_radical_limit: k must be >= 1");
  return ldexp(compute_sqrt_gap(k, p), k);
}

DyadicInterval pi_from_tail_sum(std::int64_t k, std::int64_t n_terms,
                                std::int64_t p, TailVariant variant) {
  require(k >= 1, "pi_from_tail_sum: k must be >= 1");
  require(n_terms >= 1, "pi_from_tail_sum: n_terms must be >= 1");
  std::optional<DyadicInterval> acc;
  for (std::int64_t n = k; n < k + n_terms; ++n) {
    DyadicInterval term = [&] {
      switch (variant) {
        case TailVariant::Quotient:
          return div_enclosure(compute_sqrt_gap(n, p), compute_c(n, p + 16),
                               p + n + 8);
        case TailVariant::Plain:
          return compute_sqrt_gap(n, p);
        default:
          return compute_sqrt_gap(n + 1, p);
      }
    }();
    acc = acc ? *acc + term : term;
  }
  DyadicInterval scaled =
      ldexp(*acc, variant == TailVariant::Plain ? k - 1 : k);
  std::int64_t tail_exp =
      (variant == TailVariant::Quotient ? 4 : 3) - n_terms;
  return widen_hi_pow2(scaled, tail_exp);
}

}  // namespace nestrad
