#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nestrad/interval.hpp"

namespace nestrad {

enum class PiMethod {
  RadicalLimit,        // 2^k sqrt(2 - c_{k-1}) plus a proven truncation bound
  ArctanSeriesOracle,  // Machin: 16 atan(1/5) - 4 atan(1/239), independent
  Intersection,        // both channels intersected
};

// A certified enclosure of pi: the interval provably contains pi, and its
// width is at most 2^-precision. Construction rejects intervals that fail
// the classical bracket 223/71 < pi < 22/7, so a grossly wrong certificate
// cannot exist.
struct PiCertificate {
  DyadicInterval interval;
  PiMethod method;
  std::optional<std::int64_t> k_used;  // radical index, when applicable
  std::int64_t precision;
};

// Radical-limit certificate at width <= 2^-p. The lower endpoint comes from
// the increasing sequence 2^k sqrt(2 - c_{k-1}) = 2^(k+1) sin(pi / 2^(k+1)),
// which is strictly below pi; the gap pi - 2^(k+1) sin(pi / 2^(k+1)) is at
// most pi^3 / (6 * 4^(k+1)) < 2^(1-2k), which is added to the upper
// endpoint. k = p/2 + 3 makes both the gap and the interval width small
// enough. Requires p >= 8.
PiCertificate certify_pi(std::int64_t p);

// Independent certificate from the Machin arctangent formula, evaluated as
// exact alternating series with a sign-aware first-omitted-term remainder.
// Shares no code with the radical chain beyond interval plumbing.
PiCertificate oracle_pi(std::int64_t p);

// Intersection of two certificates; throws std::logic_error if they are
// disjoint, which would mean one of them is wrong.
PiCertificate intersect(const PiCertificate& a, const PiCertificate& b);

// First n decimal digits of pi by truncation (floor, never rounding):
// "3", "3.1", "3.14", ... Digits are emitted only once both endpoints of a
// certified enclosure agree on all of them; otherwise precision doubles,
// up to the process ceiling. Requires n >= 1.
std::string pi_digits(std::int64_t n_digits,
                      PiMethod method = PiMethod::RadicalLimit);

}  // namespace nestrad
