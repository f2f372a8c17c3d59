#pragma once

#include <iosfwd>

namespace hexlet {

/// Runs one `hexlet` command. Documents go to `out`, JSON diagnostics to `err`.
/// Exit codes: 0 success, 1 domain error or failed verification, 2 bad input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hexlet
