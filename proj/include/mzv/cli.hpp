#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mzv::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kDomainError = 3,
};

/// Tokenized arguments (without the program name) plus environment-derived
/// defaults. Flags are validated by run() before anything is dispatched.
struct CommandRequest {
    std::vector<std::string> args;
    /// Default Fourier cutoff (MZV_DEFAULT_CUTOFF); 10^4 when unset.
    std::optional<long> default_fourier_cutoff;
};

struct CommandResult {
    int exit_code = kSuccess;
    std::string out;
    std::string err;
};

/// Reads MZV_DEFAULT_CUTOFF. Throws std::invalid_argument when it is set but
/// not a positive integer.
std::optional<long> default_cutoff_from_env();

CommandResult run(const CommandRequest& request);

}  // namespace mzv::cli
