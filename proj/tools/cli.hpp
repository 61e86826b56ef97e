#pragma once

#include <iosfwd>

namespace rqc::cli {

/// Exit codes: 0 success, 1 input error (bad flags, invalid state), 2 numeric failure.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rqc::cli
