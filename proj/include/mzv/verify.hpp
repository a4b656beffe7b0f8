#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mzv {

struct VerificationCase {
    std::string id;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    double error = 0.0;

    friend bool operator==(const VerificationCase&, const VerificationCase&) = default;
};

/// Invariant: overall() is true iff every case passes.
struct VerificationReport {
    std::string suite;
    std::vector<VerificationCase> cases;

    bool overall() const;
    std::size_t passed() const;

    /// {"suite":..,"overall":"pass"|"fail","cases":[{"id","status","lhs","rhs","error"}]}
    std::string to_json() const;
    /// Throws std::invalid_argument on malformed input or when "overall"
    /// disagrees with the case statuses.
    static VerificationReport from_json(const std::string& text);

    /// One line per case plus a summary line.
    std::string to_table() const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct SuiteOptions {
    std::size_t max_m = 30;
    long fourier_cutoff = 10000;
    long lattice_cutoff = 2000;
    int quadrature_panels = 40;
};

/// lemmas, prop1, prop2, parseval, fourier, mzv-crosscheck, numerics.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace mzv
