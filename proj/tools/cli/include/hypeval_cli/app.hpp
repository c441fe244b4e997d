#pragma once

#include <exception>
#include <ostream>

namespace hypeval::cli {

// Exit codes.
inline constexpr int exit_pass = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_domain = 3;

// Usage-class errors (ParseError, VariantOutOfRange, InvalidShape,
// DomainError) map to exit_usage, every other library error to exit_domain.
int exit_code_for(const std::exception& e);

// The whole command line, writing the report to `out` and diagnostics to
// `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypeval::cli
