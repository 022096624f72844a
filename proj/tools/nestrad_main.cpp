#include "nestrad/cli.hpp"

int main(int argc, char** argv) { return nestrad::run_cli(argc, argv); }
