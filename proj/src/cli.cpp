#include "nestrad/cli.hpp"

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nestrad/errors.hpp"
#include "nestrad/pi.hpp"
#include "nestrad/precision.hpp"
#include "nestrad/radicals.hpp"
#include "nestrad/reports.hpp"
#include "nestrad/sequences.hpp"

namespace nestrad {

namespace {

constexpr const char* kSynopsis =
    "usage: nestrad [--precision-ceiling BITS] [--quiet]\n"
    "               [--max-radical-index K] <subcommand> [options]\n"
    "subcommands:\n"
    "  c-k <k> [--precision P]        enclosure of the nested radical c_k\n"
    "  pi --digits N [--method M]     certified digits of pi (M: radical,\n"
    "                                 oracle, both)\n"
    "  alpha <k>                      certified floor(2^(k+1)/pi)\n"
    "  table --max-k K [--mode M] [--json | --bfile PATH]\n"
    "                                 rows 1..K (M: direct, recur)\n"
    "  verify --max-k K [--bfile PATH]\n"
    "                                 run every verification suite\n"
    "  approx <k>                     2^(k+1)/alpha_k as a pi approximation\n"
    "  paper-tables                   the published reference blocks\n";

void print_report(const VerificationReport& report, bool quiet,
                  std::ostream& out) {
  if (!quiet) out << report.to_text();
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"certified nested radicals, pi enclosures and the floor "
               "sequence alpha_k = floor(2^(k+1)/pi)"};
  app.require_subcommand(1);

  std::int64_t ceiling = kDefaultPrecisionCeiling;
  bool quiet = false;
  std::int64_t max_radical_index = 10000;
  app.add_option("--precision-ceiling", ceiling,
                 "working-precision ceiling in bits")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", quiet, "suppress reports; exit code still decides");
  app.add_option("--max-radical-index", max_radical_index,
                 "largest radical index k accepted by subcommands")
      ->check(CLI::PositiveNumber);

  auto* cmd_ck = app.add_subcommand("c-k", "enclosure of the nested radical");
  std::int64_t ck_k = 1;
  std::int64_t ck_precision = 128;
  cmd_ck->add_option("k", ck_k, "radical index")->required();
  cmd_ck->add_option("--precision", ck_precision, "output scale in bits")
      ->check(CLI::PositiveNumber);

  auto* cmd_pi = app.add_subcommand("pi", "certified decimal digits of pi");
  std::int64_t pi_n = 0;
  std::string pi_method = "radical";
  cmd_pi->add_option("--digits", pi_n, "number of digits")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_pi->add_option("--method", pi_method, "radical, oracle or both")
      ->check(CLI::IsMember({"radical", "oracle", "both"}));

  auto* cmd_alpha = app.add_subcommand("alpha", "one certified floor value");
  std::int64_t alpha_k = 1;
  cmd_alpha->add_option("k", alpha_k, "row index")->required();

  auto* cmd_table = app.add_subcommand("table", "rows 1..K of the sequence");
  std::int64_t table_k = 1;
  std::string table_mode = "recur";
  bool table_json = false;
  std::string table_bfile;
  cmd_table->add_option("--max-k", table_k, "last row")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_table->add_option("--mode", table_mode, "direct or recur")
      ->check(CLI::IsMember({"direct", "recur"}));
  auto* json_flag = cmd_table->add_flag("--json", table_json, "emit JSON rows");
  cmd_table->add_option("--bfile", table_bfile, "write \"k alpha_k\" lines here")
      ->excludes(json_flag);

  auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
  std::int64_t verify_k = 1;
  std::string verify_bfile;
  cmd_verify->add_option("--max-k", verify_k, "last row")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--bfile", verify_bfile,
                         "also cross-check against this reference file");

  auto* cmd_approx = app.add_subcommand(
      "approx", "2^(k+1)/alpha_k as an approximation of pi");
  std::int64_t approx_k = 1;
  cmd_approx->add_option("k", approx_k, "row index")->required();

  auto* cmd_paper =
      app.add_subcommand("paper-tables", "the published reference blocks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << kSynopsis;
    return 2;
  }

  set_precision_ceiling(ceiling);

  try {
    if (*cmd_ck) {
      if (ck_k < 0 || ck_k > max_radical_index)
        throw std::invalid_argument(
            "c-k: k out of range (raise --max-radical-index?)");
      std::cout << compute_c(ck_k, ck_precision).to_debug_string() << "\n";
    } else if (*cmd_pi) {
      PiMethod method = pi_method == "radical" ? PiMethod::RadicalLimit
                        : pi_method == "oracle" ? PiMethod::ArctanSeriesOracle
                                                : PiMethod::Intersection;
      std::cout << pi_digits(pi_n, method) << "\n";
    } else if (*cmd_alpha) {
      if (alpha_k < 1 || alpha_k > max_radical_index)
        throw std::invalid_argument(
            "alpha: k out of range (raise --max-radical-index?)");
      std::cout << alpha_direct(alpha_k).alpha.get_str() << "\n";
    } else if (*cmd_table) {
      if (table_k > max_radical_index)
        throw std::invalid_argument(
            "table: --max-k out of range (raise --max-radical-index?)");
      BuildMode mode = table_mode == "direct"
                           ? BuildMode::DirectEveryK
                           : BuildMode::RecurrenceWithSpotChecks;
      SequenceTable table = build_table(table_k, mode);
      if (table_json) {
        std::cout << table_to_json(table).dump(2) << "\n";
      } else if (!table_bfile.empty()) {
        export_bfile(table, table_bfile);
        if (!quiet)
          std::cout << "wrote " << table_bfile << " (" << table.entries.size()
                    << " rows)\n";
      } else {
        for (const AlphaEntry& e : table.entries)
          std::cout << "k=" << e.k << " alpha=" << e.alpha.get_str()
                    << " gamma=" << e.gamma << (e.alpha_is_odd ? " odd" : "")
                    << "\n";
      }
    } else if (*cmd_verify) {
      if (verify_k > max_radical_index)
        throw std::invalid_argument(
            "verify: --max-k out of range (raise --max-radical-index?)");
      SequenceTable table = build_table(verify_k, BuildMode::DirectEveryK);
      bool ok = true;
      for (const VerificationReport& report :
           {verify_bounds(table), verify_recurrence(table),
            verify_coprimality(table)}) {
        print_report(report, quiet, std::cout);
        ok = ok && report.all_passed();
      }
      if (!verify_bfile.empty()) {
        VerificationReport report = cross_check_bfile(table, verify_bfile);
        print_report(report, quiet, std::cout);
        ok = ok && report.all_passed();
      }
      std::cout << (ok ? "all suites passed" : "verification FAILED") << "\n";
      return ok ? 0 : 1;
    } else if (*cmd_approx) {
      if (approx_k < 1 || approx_k > max_radical_index)
        throw std::invalid_argument(
            "approx: k out of range (raise --max-radical-index?)");
      ApproxReport report = approx_report(approx_k);
      std::cout << "k: " << report.k << "\n"
                << "numerator: 2^" << (report.k + 1) << "\n"
                << "alpha: " << report.alpha.get_str() << "\n"
                << "gamma: " << report.gamma << "\n"
                << "correct decimal digits: " << report.correct_decimal_digits
                << "\n"
                << "rendering: " << report.decimal_rendering << "...\n"
                << "ratio - pi in: "
                << report.ratio_minus_pi_bound.to_debug_string() << "\n";
    } else if (*cmd_paper) {
      std::cout << reference_tables_text();
    }
  } catch (const PrecisionExhausted& e) {
    std::cerr << "precision ceiling exhausted: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n" << kSynopsis;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace nestrad
