#pragma once

#include <iosfwd>
#include <string>

namespace mollow::cli {

enum ExitCode { ok = 0, config_error = 2, numeric_failure = 3 };

constexpr const char* kSchemaVersion = "1.0";
constexpr const char* kConstantsEnv = "MOLLOW_CONSTANTS";

// Shortest decimal form of x that keeps 12 significant digits.
std::string format_number(double x);
// x rounded to 12 significant digits.
double round12(double x);

// Full command-line entry point. Results go to `out` (or --output), error
// records (one JSON object per line) to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mollow::cli
