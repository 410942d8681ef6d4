#pragma once

#include <iosfwd>

namespace lahq {

/// Command-line entry point: `table`, `eval`, `verify`, `series`.
/// Returns 0 on success, 1 when a verification or series comparison fails,
/// 2 on usage or domain errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lahq
