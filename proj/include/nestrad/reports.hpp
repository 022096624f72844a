#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "nestrad/sequences.hpp"

namespace nestrad {

// Everything needed to present 2^(k+1) / alpha_k as an approximation of pi:
// the exact ingredients, a certified count of correct decimal digits
// (digits shared with pi under truncation, never rounding), a rendering
// that marks where the digits stop agreeing, and a certified enclosure of
// the positive gap ratio - pi.
struct ApproxReport {
  std::int64_t k;
  BigInt numerator;  // 2^(k+1)
  BigInt alpha;
  std::int64_t gamma;
  std::int64_t correct_decimal_digits;
  std::string decimal_rendering;  // "3.141592653589793238462|80398052..."
  DyadicInterval ratio_minus_pi_bound;  // certified strictly positive
};

ApproxReport approx_report(std::int64_t k);

// Within a run where alpha doubles (floor(2 beta) = 0), the rational
// 2^(k+1) / alpha_k is literally the same number for every k; checked by
// exact cross multiplication for each adjacent pair in [k_lo, k_hi].
// `boundaries` lists the k where the run breaks instead (floor(2 beta) = 1).
struct RatioRunReport {
  std::vector<CheckResult> results;
  std::vector<std::int64_t> boundaries;
  bool all_passed() const;
};

RatioRunReport ratio_invariance_check(std::int64_t k_lo, std::int64_t k_hi);

// "k alpha_k" lines, one per row.
std::string render_bfile(const SequenceTable& table);
void export_bfile(const SequenceTable& table, const std::string& path);

// One object per row: {"k", "alpha" (decimal string), "gamma",
// "beta_lo", "beta_hi" (outward 40-digit decimal strings), "odd"}.
nlohmann::ordered_json table_to_json(const SequenceTable& table);

// The published reference blocks: the doubling run alpha_70..74 with its
// shared 22-correct-digit ratio, and alpha_75..77 with 23 correct digits.
// Recomputed from scratch on every call; nothing is hardcoded but the
// indices.
std::string reference_tables_text();

// Digits grouped in threes: "751587968840192313983" ->
// "751,587,968,840,192,313,983".
std::string group_digits(const std::string& digits);

}  // namespace nestrad
