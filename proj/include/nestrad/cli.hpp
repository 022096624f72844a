#pragma once

namespace nestrad {

// Full command-line entry point. Exit codes: 0 success and all
// verifications passing, 1 verification failure, 2 usage error,
// 3 precision ceiling exhausted.
int run_cli(int argc, char** argv);

}  // namespace nestrad
