#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

/// Evaluation landed on a pole (s = 1 of zeta, non-positive integer of gamma).
class PoleHit : public std::domain_error {
public:
    explicit PoleHit(const std::string& what) : std::domain_error(what) {}
};

/// Argument outside the region where an operation is defined.
class DomainViolation : public std::domain_error {
public:
    explicit DomainViolation(const std::string& what) : std::domain_error(what) {}
};

/// A lattice sum that is not absolutely convergent; a truncated value would
/// depend on the truncation scheme.
class ConvergenceUnsafe : public std::domain_error {
public:
    explicit ConvergenceUnsafe(const std::string& what) : std::domain_error(what) {}
};

}  // namespace mzv
