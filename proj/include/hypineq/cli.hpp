#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 a check fails,
// 2 usage errors and hypothesis violations.

#include <iosfwd>

namespace hypineq::cli {

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hypineq::cli
