#pragma once

#include <iosfwd>

namespace gridposet {

/// Entry point of the command-line front end. Machine-readable output goes
/// to `out`, diagnostics to `err`. Exit codes: 0 success (and, for report
/// subcommands, all asserted rows matching), 1 usage or limit error,
/// 2 reproduction mismatch.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gridposet
