#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tc::cli {

// Exit codes shared by the tool and the in-process test harness.
inline constexpr int kOk = 0;
inline constexpr int kInvalidArguments = 2;
inline constexpr int kMethodInapplicable = 3;
inline constexpr int kAccuracyFailure = 4;

/// Run one CLI invocation. argv follows main() conventions (argv[0] is the
/// program name). Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace tc::cli
