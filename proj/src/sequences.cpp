#include "nestrad/sequences.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "nestrad/errors.hpp"
#include "nestrad/precision.hpp"

namespace nestrad {

namespace {

constexpr std::int64_t kSpotCheckStride = 32;

BigInt pow2(std::int64_t e) {
  BigInt r;
  mpz_setbit(r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

struct RatioParts {
  BigInt alpha;
  DyadicInterval beta;
  bool beta_below_half;
};

// One certified division 2^(k+1) / pi: the floor must be determined, beta
// must sit strictly inside (0, 1), and its side of 1/2 must be certain.
// Any failure returns nullopt so the caller can escalate; nothing here
// rounds a tie.
std::optional<RatioParts> certified_ratio(std::int64_t k,
                                          const DyadicInterval& pi_iv) {
  DyadicInterval ratio = pow2(k + 1) / pi_iv;
  std::optional<BigInt> alpha = floor_certified(ratio);
  if (!alpha) return std::nullopt;
  DyadicInterval beta =
      ratio - DyadicInterval::from_integer(*alpha, ratio.precision());
  if (beta.lo_scaled() <= 0) return std::nullopt;
  BigInt one = pow2(beta.precision());
  if (beta.hi_scaled() >= one) return std::nullopt;
  if (2 * beta.hi_scaled() < one)
    return RatioParts{std::move(*alpha), std::move(beta), true};
  if (2 * beta.lo_scaled() >= one)
    return RatioParts{std::move(*alpha), std::move(beta), false};
  return std::nullopt;
}

// One full pass at a fixed certificate; nullopt means some step could not
// be certified at this precision.
std::optional<std::vector<AlphaEntry>> try_build(std::int64_t K,
                                                 BuildMode mode,
                                                 const DyadicInterval& pi_iv) {
  std::vector<AlphaEntry> rows;
  rows.reserve(static_cast<std::size_t>(K));
  bool below_prev = false;
  for (std::int64_t k = 1; k <= K; ++k) {
    bool direct = mode == BuildMode::DirectEveryK || k == 1 ||
                  k % kSpotCheckStride == 0;
    BigInt alpha;
    std::optional<DyadicInterval> beta;
    bool below;
    if (direct) {
      std::optional<RatioParts> r = certified_ratio(k, pi_iv);
      if (!r) return std::nullopt;
      if (mode == BuildMode::RecurrenceWithSpotChecks && k > 1) {
        BigInt predicted = 2 * rows.back().alpha + (below_prev ? 0 : 1);
        if (r->alpha != predicted)
          throw RecurrenceMismatch(
              "spot check at k=" + std::to_string(k) + ": direct alpha " +
              r->alpha.get_str() + " != recurrence " + predicted.get_str());
      }
      alpha = std::move(r->alpha);
      beta = std::move(r->beta);
      below = r->beta_below_half;
    } else {
      // beta_{k+1} = 2 beta_k - floor(2 beta_k), exactly, on the enclosure.
      int b = below_prev ? 0 : 1;
      alpha = 2 * rows.back().alpha + b;
      DyadicInterval doubled = ldexp(rows.back().beta, 1);
      beta = doubled - DyadicInterval::from_integer(BigInt(b),
                                                    doubled.precision());
      if (beta->lo_scaled() <= 0) return std::nullopt;
      BigInt one = pow2(beta->precision());
      if (beta->hi_scaled() >= one) return std::nullopt;
      if (2 * beta->hi_scaled() < one)
        below = true;
      else if (2 * beta->lo_scaled() >= one)
        below = false;
      else
        return std::nullopt;
    }
    bool odd = mpz_odd_p(alpha.get_mpz_t()) != 0;
    // gamma_1 = 1 unconditionally; alpha_1 = 1 is odd, so the rule agrees.
    std::int64_t gamma = odd || rows.empty() ? k : rows.back().gamma;
    rows.push_back(AlphaEntry{k, std::move(alpha), std::move(*beta), gamma, odd});
    below_prev = below;
  }
  return rows;
}

std::string yes_no(bool b) { return b ? "PASS" : "FAIL"; }

}  // namespace

const AlphaEntry& SequenceTable::at(std::int64_t k) const {
  if (k < 1 || k > static_cast<std::int64_t>(entries.size()))
    throw std::out_of_range("SequenceTable::at: k=" + std::to_string(k));
  return entries[static_cast<std::size_t>(k - 1)];
}

SequenceTable build_table(std::int64_t K, BuildMode mode) {
  if (K < 1) throw std::invalid_argument("build_table: K must be >= 1");
  std::int64_t p = std::max<std::int64_t>(96, K + 64);
  for (;;) {
    if (p > precision_ceiling())
      throw PrecisionExhausted("build_table: K=" + std::to_string(K) +
                               " needs more than " +
                               std::to_string(precision_ceiling()) + " bits");
    PiCertificate cert = certify_pi(p);
    std::optional<std::vector<AlphaEntry>> rows =
        try_build(K, mode, cert.interval);
    if (rows) return SequenceTable{std::move(*rows), std::move(cert), mode};
    p *= 2;
  }
}

AlphaEntry alpha_direct(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("alpha_direct: k must be >= 1");
  // gamma needs the parity history, so build the prefix table, then replace
  // the last row with an independently divided one and insist they agree.
  SequenceTable table = build_table(k, BuildMode::RecurrenceWithSpotChecks);
  std::optional<RatioParts> r =
      certified_ratio(k, table.pi_certificate_used.interval);
  if (!r)
    throw std::logic_error("alpha_direct: table certificate too coarse at k=" +
                           std::to_string(k));
  AlphaEntry row = table.at(k);
  if (r->alpha != row.alpha)
    throw RecurrenceMismatch("alpha_direct: k=" + std::to_string(k) +
                             ": direct alpha " + r->alpha.get_str() +
                             " != table " + row.alpha.get_str());
  row.beta = std::move(r->beta);
  return row;
}

bool VerificationReport::all_passed() const {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << "\n";
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    out << "  k=" << r.k << " " << r.check << " " << yes_no(r.pass);
    if (!r.detail.empty()) out << " " << r.detail;
    out << "\n";
    if (r.pass) ++passed;
  }
  out << "  " << passed << "/" << results.size() << " checks passed\n";
  return out.str();
}

VerificationReport verify_bounds(const SequenceTable& table) {
  VerificationReport report;
  report.suite = "bounds";
  const mpq_class pi_hi = table.pi_certificate_used.interval.hi().to_rational();
  for (const AlphaEntry& e : table.entries) {
    // alpha_k * pi < 2^(k+1): exact rational comparison against the
    // certificate's upper endpoint, which dominates pi.
    bool strict = mpq_class(e.alpha) * pi_hi < mpq_class(pow2(e.k + 1));
    report.results.push_back(
        {e.k, "ratio-above-pi", strict, "alpha=" + e.alpha.get_str()});
    bool open_unit =
        e.beta.lo_scaled() > 0 && e.beta.hi_scaled() < pow2(e.beta.precision());
    report.results.push_back({e.k, "beta-open-unit", open_unit, ""});
  }
  return report;
}

VerificationReport verify_coprimality(const SequenceTable& table) {
  VerificationReport report;
  report.suite = "coprimality";
  for (const AlphaEntry& e : table.entries) {
    const AlphaEntry& at_gamma = table.at(e.gamma);
    report.results.push_back({e.k, "alpha-gamma-odd", at_gamma.alpha_is_odd,
                              "gamma=" + std::to_string(e.gamma)});
    BigInt g;
    mpz_gcd(g.get_mpz_t(), pow2(e.gamma + 1).get_mpz_t(),
            at_gamma.alpha.get_mpz_t());
    report.results.push_back({e.k, "coprime-power-of-two", g == 1, ""});
    if (!e.alpha_is_odd) {
      BigInt g2;
      mpz_gcd(g2.get_mpz_t(), pow2(e.k + 1).get_mpz_t(), e.alpha.get_mpz_t());
      report.results.push_back({e.k, "even-shares-factor-two", g2 >= 2, ""});
    }
  }
  return report;
}

VerificationReport verify_recurrence(const SequenceTable& table) {
  if (table.mode != BuildMode::DirectEveryK)
    throw std::invalid_argument(
        "verify_recurrence: table must be built DirectEveryK so consecutive "
        "rows are independent");
  VerificationReport report;
  report.suite = "recurrence";
  for (std::size_t i = 0; i + 1 < table.entries.size(); ++i) {
    const AlphaEntry& a = table.entries[i];
    const AlphaEntry& b = table.entries[i + 1];
    // floor(2 beta_k) is certified by beta's side of 1/2.
    BigInt one = pow2(a.beta.precision());
    int bit;
    if (2 * a.beta.hi_scaled() < one)
      bit = 0;
    else if (2 * a.beta.lo_scaled() >= one)
      bit = 1;
    else
      throw std::logic_error("verify_recurrence: beta straddles 1/2 at k=" +
                             std::to_string(a.k));
    bool step = b.alpha == 2 * a.alpha + bit;
    report.results.push_back(
        {a.k, "doubling-step", step, "bit=" + std::to_string(bit)});
    // (alpha_{k+1} + beta_{k+1}) / (alpha_k + beta_k) = 2 exactly; the
    // enclosure of the quotient must contain 2.
    DyadicInterval num =
        b.beta + DyadicInterval::from_integer(b.alpha, b.beta.precision());
    DyadicInterval den =
        a.beta + DyadicInterval::from_integer(a.alpha, a.beta.precision());
    DyadicInterval q = div_enclosure(num, den, num.precision());
    report.results.push_back(
        {a.k, "pair-ratio-contains-two", q.contains(BigInt(2)), ""});
  }
  return report;
}

VerificationReport cross_check_bfile(const SequenceTable& table,
                                     const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cross_check_bfile: cannot open " + path);
  VerificationReport report;
  report.suite = "bfile";
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::int64_t k = 0;
    std::string value;
    if (!(fields >> k >> value)) {
      report.results.push_back(
          {0, "bfile-line", false, "malformed line " + std::to_string(lineno)});
      continue;
    }
    if (k < 1 || k > static_cast<std::int64_t>(table.entries.size())) continue;
    BigInt expected;
    try {
      expected = BigInt(value, 10);
    } catch (const std::invalid_argument&) {
      report.results.push_back(
          {k, "bfile-line", false, "bad integer at line " + std::to_string(lineno)});
      continue;
    }
    report.results.push_back({k, "bfile-match", table.at(k).alpha == expected,
                              table.at(k).alpha == expected
                                  ? ""
                                  : "file=" + expected.get_str() + " table=" +
                                        table.at(k).alpha.get_str()});
  }
  return report;
}

}  // namespace nestrad
