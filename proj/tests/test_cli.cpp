#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "test_support.hpp"

using testsupport::run_cli;

TEST_CASE("usage errors exit 2 with a synopsis on stderr") {
  for (const char* bad : {"", "frobnicate", "pi", "pi --digits 0",
                          "table --max-k 5 --json --bfile /tmp/x",
                          "c-k 20001", "alpha 0"}) {
    auto r = run_cli(bad);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("usage:") != std::string::npos);
  }
}

TEST_CASE("pi digits over both channels") {
  auto r = run_cli("pi --digits 22");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3.141592653589793238462\n");
  auto oracle = run_cli("pi --digits 22 --method oracle");
  CHECK(oracle.out == r.out);
  auto both = run_cli("pi --digits 23 --method both");
  CHECK(both.out == "3.1415926535897932384626\n");
}

TEST_CASE("c-k prints an exact debug enclosure") {
  auto r = run_cli("c-k 1 --precision 8");
  CHECK(r.exit_code == 0);
  // sqrt(2) at scale 2^-8: [362/256, 363/256]
  CHECK(r.out == "[1.4140625, 1.41796875] @ 2^-8\n");
  // default precision is wide enough for a tight c_2
  auto d = run_cli("c-k 2");
  CHECK(d.out.substr(0, 12) == "[1.847759065");
}

TEST_CASE("alpha and table subcommands") {
  auto a = run_cli("alpha 70");
  CHECK(a.exit_code == 0);
  CHECK(a.out == "751587968840192313983\n");

  auto t = run_cli("table --max-k 5");
  CHECK(t.exit_code == 0);
  CHECK(t.out ==
        "k=1 alpha=1 gamma=1 odd\n"
        "k=2 alpha=2 gamma=1\n"
        "k=3 alpha=5 gamma=3 odd\n"
        "k=4 alpha=10 gamma=3\n"
        "k=5 alpha=20 gamma=3\n");

  auto direct = run_cli("table --max-k 5 --mode direct");
  CHECK(direct.out == t.out);
}

TEST_CASE("table json and bfile outputs") {
  auto j = run_cli("table --max-k 3 --json");
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("\"alpha\": \"5\"") != std::string::npos);
  CHECK(j.out.find("\"beta_lo\"") != std::string::npos);

  std::string path = "/tmp/nestrad_cli_bfile.txt";
  auto b = run_cli("table --max-k 4 --bfile " + path);
  CHECK(b.exit_code == 0);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "1 1");
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("verify: all suites green, quiet mode, bfile hook") {
  auto r = run_cli("verify --max-k 40");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("suite bounds") != std::string::npos);
  CHECK(r.out.find("suite recurrence") != std::string::npos);
  CHECK(r.out.find("suite coprimality") != std::string::npos);
  CHECK(r.out.find("all suites passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  auto q = run_cli("--quiet verify --max-k 10");
  CHECK(q.exit_code == 0);
  CHECK(q.out == "all suites passed\n");

  // a corrupted reference file must flip the exit code to 1
  std::string path = "/tmp/nestrad_cli_badref.txt";
  {
    std::ofstream out(path);
    out << "3 6\n";
  }
  auto bad = run_cli("--quiet verify --max-k 10 --bfile " + path);
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("verification FAILED") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("approx subcommand") {
  auto r = run_cli("approx 70");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("alpha: 751587968840192313983") != std::string::npos);
  CHECK(r.out.find("correct decimal digits: 22") != std::string::npos);
  CHECK(r.out.find("3.141592653589793238462|80398052") != std::string::npos);
}

TEST_CASE("paper-tables subcommand") {
  auto r = run_cli("paper-tables");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("751,587,968,840,192,313,983") != std::string::npos);
  CHECK(r.out.find("(23 correct digits)") != std::string::npos);
}

TEST_CASE("precision ceiling exits 3") {
  auto r = run_cli("--precision-ceiling 64 pi --digits 100");
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("precision ceiling exhausted") != std::string::npos);
}

TEST_CASE("help exits 0") {
  auto r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("c-k") != std::string::npos);
  CHECK(r.out.find("paper-tables") != std::string::npos);
}
