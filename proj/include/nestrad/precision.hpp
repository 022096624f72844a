#pragma once

#include <cstdint>

namespace nestrad {

// Every escalation loop (interval refinement, certificate construction,
// digit extraction) gives up with PrecisionExhausted once its working
// precision would exceed this process-wide ceiling, in bits.
inline constexpr std::int64_t kDefaultPrecisionCeiling = std::int64_t{1} << 20;

std::int64_t precision_ceiling() noexcept;
void set_precision_ceiling(std::int64_t bits) noexcept;

}  // namespace nestrad
