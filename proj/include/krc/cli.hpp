#pragma once

#include <iosfwd>
#include <string>
#include <vector>

/*
 * Command-line front end.  run() parses the argument list (without the
 * program name), writes results to out and diagnostics to err, and
 * returns the process exit code:
 *   0  success / all verifications passed
 *   1  a verification failed (counterexamples are printed)
 *   2  usage or validation error
 */

namespace krc::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} /* namespace krc::cli */
