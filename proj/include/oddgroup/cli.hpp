#pragma once

#include <ostream>

namespace oddgroup {

// Subcommands random, decompose, verify and selftest.
// Exit codes: 0 ok, 1 verification or test failure, 2 invalid input.
int run_cli(int argc, const char* const argv[], std::ostream& out, std::ostream& err);

}  // namespace oddgroup
