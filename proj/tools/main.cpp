#include <iostream>
#include <stdexcept>

#include "mzv/cli.hpp"

int main(int argc, char** argv) {
    mzv::cli::CommandRequest request;
    request.args.assign(argv + 1, argv + argc);
    try {
        request.default_fourier_cutoff = mzv::cli::default_cutoff_from_env();
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return mzv::cli::kUsageError;
    }
    const auto result = mzv::cli::run(request);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
