#pragma once

#include <cstdint>

#include "nestrad/interval.hpp"

namespace nestrad {

// The nested radical chain c_k = sqrt(2 + c_{k-1}), c_0 = 0, and the
// quantities built from it. The chain converges to 2; the interesting
// object is the gap 2 - c_{k-1}, which shrinks like 4^-k and therefore
// cancels catastrophically at fixed precision. Every routine that touches
// the gap elevates its working precision by 2k + 16 bits so the requested
// output precision survives the cancellation.

// Enclosure of c_k at scale 2^-p, width at most 2^-(p-2).
// Requires k >= 0, p >= 8.
DyadicInterval compute_c(std::int64_t k, std::int64_t p);

// Enclosure of sqrt(2 - c_{k-1}), computed at elevated precision
// p + 2k + 16 and escalated further if positivity of the radicand cannot
// be certified. Requires k >= 1, p >= 8.
DyadicInterval compute_sqrt_gap(std::int64_t k, std::int64_t p);

// c_k together with the gap root at matched index.
struct RadicalState {
  std::int64_t k;
  DyadicInterval c_k;
  DyadicInterval sqrt_two_minus_c_prev;
  std::int64_t precision;
};

RadicalState make_radical_state(std::int64_t k, std::int64_t p);

// Enclosure of sqrt(2 - c_{k-1}) / c_k, the tangent of the half-angle
// pi / 2^(k+1). Requires k >= 1, p >= 8.
DyadicInterval arctan_argument(std::int64_t k, std::int64_t p);

// Enclosure of 2^k * sqrt(2 - c_{k-1}), the k-th term of the increasing
// sequence with limit pi. Strictly below pi for every finite k.
DyadicInterval pi_from_radical_limit(std::int64_t k, std::int64_t p);

// Scaled series over the gap roots, summed for n = k .. k+n_terms-1. The
// returned interval encloses the full infinite sum: the terms are positive,
// so the partial sum is a lower bound, and the omitted tail is absorbed
// into the upper endpoint via the provable geometric bound
// sqrt(2 - c_n) <= 4 / 2^n. The infinite-sum values approach pi as k grows.
enum class TailVariant {
  Quotient,  // 2^k     * sum of sqrt(2 - c_{n-1}) / c_n   (tail <= 2^(4 - n_terms))
  Plain,     // 2^(k-1) * sum of sqrt(2 - c_{n-1})         (tail <= 2^(3 - n_terms))
  Shifted,   // 2^k     * sum of sqrt(2 - c_n)             (tail <= 2^(3 - n_terms))
};

DyadicInterval pi_from_tail_sum(std::int64_t k, std::int64_t n_terms,
                                std::int64_t p, TailVariant variant);

}  // namespace nestrad
