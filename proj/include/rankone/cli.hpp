#pragma once

#include <iosfwd>

namespace rankone::cli {

/// Exit codes: 0 all checks pass, 1 a check failed or a computation errored,
/// 2 usage errors (unknown subcommand, flag, ring or check) and rings that
/// lack the structure a check needs.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rankone::cli
