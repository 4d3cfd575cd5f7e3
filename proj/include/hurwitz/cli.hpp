#pragma once

#include <iosfwd>

namespace hurwitz {

/// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource budget.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hurwitz
