#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nestrad/interval.hpp"
#include "nestrad/pi.hpp"

namespace nestrad {

// Row k of the floor table: 2^(k+1) / pi = alpha_k + beta_k with
// alpha_k = floor(2^(k+1) / pi) and beta_k in (0, 1). gamma_k is the
// largest index j <= k with alpha_j odd; alpha_1 = 1 makes gamma well
// defined from the start. Every alpha is an exact certified integer; beta
// is carried as an enclosure whose position relative to 0, 1/2 and 1 is
// certified strictly.
struct AlphaEntry {
  std::int64_t k;
  BigInt alpha;
  DyadicInterval beta;
  std::int64_t gamma;
  bool alpha_is_odd;
};

enum class BuildMode {
  DirectEveryK,              // fresh certified division for every k
  RecurrenceWithSpotChecks,  // alpha_{k+1} = 2 alpha_k + floor(2 beta_k),
                             // re-derived directly every 32nd row
};

struct SequenceTable {
  std::vector<AlphaEntry> entries;  // contiguous, entries[i].k == i + 1
  PiCertificate pi_certificate_used;
  BuildMode mode;

  const AlphaEntry& at(std::int64_t k) const;
};

// Certified alpha_k (with beta and gamma) for a single index, via a fresh
// division against an internally escalated certificate.
AlphaEntry alpha_direct(std::int64_t k);

// Rows 1..K against one shared pi certificate, starting at
// p = max(96, K + 64) bits and doubling on any uncertified step until the
// whole table builds deterministically in one pass. Throws
// RecurrenceMismatch if a spot check contradicts the recurrence and
// PrecisionExhausted past the precision ceiling. Requires K >= 1.
SequenceTable build_table(std::int64_t K,
                          BuildMode mode = BuildMode::RecurrenceWithSpotChecks);

struct CheckResult {
  std::int64_t k;
  std::string check;
  bool pass;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> results;

  bool all_passed() const;
  // Stable line-oriented rendering: one line per check plus a summary.
  std::string to_text() const;
};

// Strict inequalities alpha_k * pi < 2^(k+1) (against the table's own
// certificate upper endpoint, exact rational arithmetic) and
// 0 < beta_k < 1 for every row.
VerificationReport verify_bounds(const SequenceTable& table);

// gamma_k points at an odd alpha: gcd(2^(gamma_k + 1), alpha_{gamma_k}) = 1,
// and even alpha_k share a factor 2 with their numerator.
VerificationReport verify_coprimality(const SequenceTable& table);

// alpha_{k+1} = 2 alpha_k + floor(2 beta_k) for consecutive rows, and the
// exact pair ratio (alpha_{k+1} + beta_{k+1}) / (alpha_k + beta_k) encloses
// 2. Requires a DirectEveryK table so rows are independent witnesses.
VerificationReport verify_recurrence(const SequenceTable& table);

// Compares table rows against a reference file of "k alpha_k" lines
// (comment lines starting with '#' are skipped). Throws IoError if the
// file cannot be read.
VerificationReport cross_check_bfile(const SequenceTable& table,
                                     const std::string& path);

}  // namespace nestrad
