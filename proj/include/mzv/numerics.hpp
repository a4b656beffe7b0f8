#pragma once

/**
 * @file numerics.hpp
 * @brief Floating-point zeta machinery: complex gamma, Hurwitz and Riemann
 * zeta by Euler-Maclaurin summation, and B(s, a) = s zeta(s + 1, a).
 *
 * These routines are the numeric oracle for the exact layer, so none of them
 * consults Bernoulli polynomials or the closed forms at negative integers.
 * The Euler-Maclaurin sum runs internally in binary128 so the head sum's
 * cancellation for Re s < 0 does not eat the double-precision result.
 */

#include <complex>

namespace mzv {

using Complex = std::complex<double>;

/// Throws DomainViolation if either component of z is NaN or infinite.
void require_finite(Complex z, const char* name);

struct EulerMaclaurinParams {
    /// N: terms summed directly before the asymptotic tail.
    int head_terms = 16;
    /// J: number of B_{2j} tail corrections.
    int correction_order = 12;

    /// N = max(16, ceil|Im s| + 16), J = 12.
    static EulerMaclaurinParams defaults_for(Complex s);

    /// Throws std::invalid_argument unless N >= 8 and 1 <= J <= 20.
    void validate() const;
};

/// sin(pi z) and cos(pi z) with exact reduction of Re z, so half-integer and
/// integer real parts give exact zeros.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

/// Lanczos approximation (g = 7, 9 terms), reflection for Re z < 1/2.
/// Throws PoleHit at non-positive integers (within 1e-12).
Complex gamma(Complex z);

/// zeta(s, alpha) for real alpha > 0. Throws PoleHit at s = 1 (within
/// 1e-12) and DomainViolation for alpha <= 0.
Complex hurwitz_zeta_num(Complex s, double alpha, const EulerMaclaurinParams& params);
Complex hurwitz_zeta_num(Complex s, double alpha);

Complex riemann_zeta_num(Complex s, const EulerMaclaurinParams& params);
Complex riemann_zeta_num(Complex s);

/// B(s, alpha) = s zeta(s + 1, alpha), returning the limit 1 at s = 0.
/// Throws DomainViolation for alpha <= 0.
Complex bernoulli_function(Complex s, double alpha, const EulerMaclaurinParams& params);
Complex bernoulli_function(Complex s, double alpha);

}  // namespace mzv
