#pragma once

namespace svds {

/* Full command-line surface.  Exit codes: 0 success, 1 validation failure,
 * 2 verification-suite failure. */
int run_cli(int argc, const char* const* argv);

}  // namespace svds
