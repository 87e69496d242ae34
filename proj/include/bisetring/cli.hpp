#pragma once

#include <iosfwd>

namespace bisetring::cli {

// Exit codes: 0 all checks passed, 1 a check failed or a counterexample was
// found, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bisetring::cli
