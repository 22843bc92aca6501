#pragma once

/// @file cli.hpp
/// @brief Command-line front end: generate, check, bounds, suite.
///
/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or config
/// error, 3 numerical breakdown.

#include "relcalc/harness/suite.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace relcalc::cli {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_numerical = 3 };

/// `args` excludes the program name. RELCALC_SEED supplies --seed when absent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string format_suite_text(const std::vector<harness::TheoremReport>& reports);
std::string format_suite_json(const std::vector<harness::TheoremReport>& reports);

} // namespace relcalc::cli
