#pragma once

#include <iosfwd>

namespace gsqr {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of the gsqr tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNumerical = 2,  ///< breakdown, rank deficiency, singular input
  kExitParse = 3,
  kExitIo = 4,
};

/// Entry point of `gsqr factor|example1|glued|verify`; never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gsqr
