#pragma once

#include <ostream>

namespace rpm::cli {

/// Runs the `rpm` command line (subcommands `mine` and `verify`) and returns
/// the process exit status. Payloads go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rpm::cli
