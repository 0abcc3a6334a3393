#pragma once

#include <iosfwd>

namespace warpmat {

/// Entry point of the `warpmat` command line tool. Returns 0 on success,
/// 1 on a domain error (invalid code, failing rule check, ...), 2 on a
/// usage error.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace warpmat
