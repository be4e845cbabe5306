#pragma once

#include <ostream>

namespace ncmorse {

/// Exit codes: 0 success, 1 invalid or unsupported input, 2 a computed
/// property failed (invalid Morse function, failed collapse check, ...).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncmorse
