#pragma once

#include <iosfwd>

namespace pistar {

// Exit codes: 0 success, 1 refutation or negative check, 2 usage or input
// error, 3 unresolved ambiguity (verify-paper only).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pistar
