#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwemb::cli {

// Exit codes shared by every subcommand.
constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_usage = 2;
constexpr int exit_limit = 3;

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

/// The property suites behind `suite`; one line per suite to `out`.
auto run_suites(bool quick, unsigned long long seed, std::ostream & out) -> bool;

} // namespace gwemb::cli
