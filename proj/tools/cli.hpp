#pragma once

#include <iosfwd>

namespace capset {

/// Parses argv, runs one subcommand and writes its JSON report to `out`.
/// Returns 0 when every check passes, 1 when a check fails, 2 on usage or input errors
/// (message on `err`, nothing on `out`).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace capset
