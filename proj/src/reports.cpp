#include "nestrad/reports.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nestrad/errors.hpp"
#include "nestrad/precision.hpp"

namespace nestrad {

namespace {

BigInt pow2(std::int64_t e) {
  BigInt r;
  mpz_setbit(r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

BigInt pow10(std::int64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// First n_digits decimal digits of num/den (no decimal point), by exact
// long division. Requires 1 <= num/den < 10.
std::string ratio_digits(const BigInt& num, const BigInt& den,
                         std::int64_t n_digits) {
  BigInt scaled = num * pow10(n_digits - 1);
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  std::string s = q.get_str();
  if (static_cast<std::int64_t>(s.size()) != n_digits)
    throw std::logic_error("ratio_digits: value outside [1, 10)");
  return s;
}

// Decimal digit strings of the scaled value v * 2^-p with `digits`
// fractional places, rounded down / up. Requires 0 <= value <= 1.
std::string decimal_frac_lower(const BigInt& v, std::int64_t p,
                               std::int64_t digits) {
  BigInt scaled = v * pow10(digits);
  BigInt q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), scaled.get_mpz_t(),
                  static_cast<mp_bitcnt_t>(p));
  std::string s = q.get_str();
  if (static_cast<std::int64_t>(s.size()) <= digits)
    s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return s;
}

std::string decimal_frac_upper(const BigInt& v, std::int64_t p,
                               std::int64_t digits) {
  BigInt scaled = v * pow10(digits);
  BigInt q;
  mpz_cdiv_q_2exp(q.get_mpz_t(), scaled.get_mpz_t(),
                  static_cast<mp_bitcnt_t>(p));
  std::string s = q.get_str();
  if (static_cast<std::int64_t>(s.size()) <= digits)
    s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return s;
}

}  // namespace

std::string group_digits(const std::string& digits) {
  std::string out;
  std::size_t n = digits.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(digits[i]);
    std::size_t rest = n - 1 - i;
    if (rest > 0 && rest % 3 == 0) out.push_back(',');
  }
  return out;
}

ApproxReport approx_report(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("approx_report: k must be >= 1");
  SequenceTable table = build_table(k);
  const AlphaEntry& row = table.at(k);
  BigInt num = pow2(k + 1);

  // Count digits shared with pi under truncation. The ratio exceeds pi, so
  // a finite prefix always disagrees eventually.
  std::int64_t correct = 0;
  for (std::int64_t window = 32;; window *= 2) {
    if (window > precision_ceiling())
      throw PrecisionExhausted("approx_report: digit comparison at k=" +
                               std::to_string(k));
    std::string pi_str = pi_digits(window);
    pi_str.erase(1, 1);  // drop the point; both strings are raw digits
    std::string ratio_str = ratio_digits(num, row.alpha, window);
    std::int64_t diff = -1;
    for (std::int64_t i = 0; i < window; ++i) {
      if (pi_str[static_cast<std::size_t>(i)] !=
          ratio_str[static_cast<std::size_t>(i)]) {
        diff = i;
        break;
      }
    }
    if (diff >= 0) {
      correct = diff;
      break;
    }
  }

  // Rendering: certified digits, a bar, then the first eight digits of the
  // divergence. The bar position is the whole point of the report.
  std::string digits = ratio_digits(num, row.alpha, correct + 8);
  std::string rendering = digits.substr(0, 1) + "." + digits.substr(1);
  // +1 for the decimal point sitting inside the certified prefix.
  rendering.insert(static_cast<std::size_t>(correct) + 1, "|");

  // Certified positive gap: enclose the exact rational num/alpha tightly
  // and subtract a pi certificate, escalating until strictly positive.
  std::int64_t p = std::max<std::int64_t>(96, k + 32);
  for (;;) {
    if (p > precision_ceiling())
      throw PrecisionExhausted("approx_report: gap certification at k=" +
                               std::to_string(k));
    DyadicInterval ratio_iv =
        num / DyadicInterval::from_integer(row.alpha, p);
    DyadicInterval gap = ratio_iv - certify_pi(p).interval;
    if (gap.lo_scaled() > 0)
      return ApproxReport{k,       num,      row.alpha, row.gamma,
                          correct, rendering, gap};
    p *= 2;
  }
}

bool RatioRunReport::all_passed() const {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

RatioRunReport ratio_invariance_check(std::int64_t k_lo, std::int64_t k_hi) {
  if (k_lo < 1 || k_lo >= k_hi)
    throw std::invalid_argument("ratio_invariance_check: need 1 <= k_lo < k_hi");
  SequenceTable table = build_table(k_hi);
  RatioRunReport report;
  for (std::int64_t k = k_lo; k < k_hi; ++k) {
    const AlphaEntry& a = table.at(k);
    const AlphaEntry& b = table.at(k + 1);
    // 2^(k+2)/alpha_{k+1} = 2^(k+1)/alpha_k iff alpha_{k+1} = 2 alpha_k;
    // exact cross multiplication, no intervals involved.
    bool same = pow2(k + 2) * a.alpha == pow2(k + 1) * b.alpha;
    report.results.push_back(
        {k, "ratio-unchanged", same,
         same ? "" : "run breaks: floor(2 beta)=1"});
    if (!same) report.boundaries.push_back(k);
  }
  return report;
}

std::string render_bfile(const SequenceTable& table) {
  std::ostringstream out;
  for (const AlphaEntry& e : table.entries)
    out << e.k << " " << e.alpha.get_str() << "\n";
  return out.str();
}

void export_bfile(const SequenceTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("export_bfile: cannot open " + path);
  out << render_bfile(table);
  if (!out.flush()) throw IoError("export_bfile: write failed for " + path);
}

nlohmann::ordered_json table_to_json(const SequenceTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const AlphaEntry& e : table.entries) {
    nlohmann::ordered_json row;
    row["k"] = e.k;
    row["alpha"] = e.alpha.get_str();
    row["gamma"] = e.gamma;
    row["beta_lo"] =
        decimal_frac_lower(e.beta.lo_scaled(), e.beta.precision(), 40);
    row["beta_hi"] =
        decimal_frac_upper(e.beta.hi_scaled(), e.beta.precision(), 40);
    row["odd"] = e.alpha_is_odd;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string reference_tables_text() {
  std::ostringstream out;
  // Doubling run 70..74, then the next run 75..77. The shared exact ratio
  // of a run is reported once, off its base index.
  const struct {
    std::int64_t base, last;
  } runs[] = {{70, 74}, {75, 77}};
  SequenceTable table = build_table(runs[1].last);
  for (const auto& run : runs) {
    const AlphaEntry& base = table.at(run.base);
    out << "alpha_" << run.base << " = " << group_digits(base.alpha.get_str())
        << (base.alpha_is_odd ? "  (odd)" : "") << "\n";
    for (std::int64_t k = run.base + 1; k <= run.last; ++k) {
      BigInt mult = table.at(k).alpha / base.alpha;
      if (mult * base.alpha != table.at(k).alpha)
        throw std::logic_error("reference tables: run at k=" +
                               std::to_string(k) + " is not a doubling run");
      out << "alpha_" << k << " = " << mult.get_str() << "*alpha_" << run.base
          << " = " << group_digits(table.at(k).alpha.get_str()) << "\n";
    }
    ApproxReport approx = approx_report(run.base);
    for (std::int64_t k = run.last; k >= run.base; --k) {
      out << "2^" << (k + 1) << "/alpha_" << k
          << (k > run.base ? " = " : " =\n");
    }
    out << "  " << approx.decimal_rendering << "...  ("
        << approx.correct_decimal_digits << " correct digits)\n\n";
  }
  return out.str();
}

}  // namespace nestrad
