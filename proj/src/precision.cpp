#include "nestrad/precision.hpp"

#include <atomic>

namespace nestrad {

namespace {
std::atomic<std::int64_t> g_ceiling{kDefaultPrecisionCeiling};
}

std::int64_t precision_ceiling() noexcept { return g_ceiling.load(); }

void set_precision_ceiling(std::int64_t bits) noexcept { g_ceiling.store(bits); }

}  // namespace nestrad
