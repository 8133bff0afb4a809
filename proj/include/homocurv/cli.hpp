#pragma once

#include <ostream>

namespace homocurv {

// Exit codes: 0 ok, 1 validation failure or bad usage, 2 tolerance failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace homocurv
