#pragma once

/**
 * @file fourier.hpp
 * @brief Fourier series of Bernoulli polynomials and Hurwitz zeta on [0, 1],
 * the Parseval product integral, and constrained lattice sums for products of
 * Bernoulli polynomials.
 *
 * Index convention: B_m(a) = -m! sum_{n != 0} e^{2 pi i n a} / (2 pi i n)^m
 * for m >= 1, and an entry m_i of an m_list stands for the factor
 * B_{m_i + 1}(a).
 */

#include <cstddef>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "mzv/exact.hpp"
#include "mzv/numerics.hpp"

namespace mzv {

/// Keeps indices 1 <= |n| <= cutoff.
struct FourierTruncation {
    long cutoff = 10000;

    /// Throws std::invalid_argument when cutoff < 1.
    void validate() const;
};

/// -m! sum_{0<|n|<=N} e^{2 pi i n a} / (2 pi i n)^m, conjugate pairs summed
/// as real parts. Requires m >= 1 and a in [0, 1]; for m = 1 the endpoints
/// are excluded (DomainViolation) since the sawtooth series converges to the
/// midpoint there.
double bernoulli_fourier_partial(int m, double alpha, FourierTruncation trunc);

/// m! sum_{0<|n|<=N} e^{2 pi i n a} / (2 pi i n)^(m+1), the series for
/// zeta(-m, a). Requires m >= 0, a in [0, 1], and 0 < a < 1 when m = 0.
double hurwitz_neg_fourier_partial(int m, double alpha, FourierTruncation trunc);

/// Gamma(1-s) sum_{0<|n|<=N} e^{2 pi i n a} (2 pi i n)^(s-1), principal
/// branch. Requires Re s < 1 and 0 < a < 1.
Complex hurwitz_fourier_partial(Complex s, double alpha, FourierTruncation trunc);

/// 2 (2 pi)^(s1+s2-2) cos(pi (s1-s2)/2) Gamma(1-s1) Gamma(1-s2) zeta(2-s1-s2).
/// Requires Re(s1 + s2) < 1.
Complex parseval_rhs(Complex s1, Complex s2, const EulerMaclaurinParams& params);
Complex parseval_rhs(Complex s1, Complex s2);

struct ParsevalQuadrature {
    /// Geometric panels [2^-(k+1), 2^-k], k = 0..panels-1, 20-point
    /// Gauss-Legendre on each; [0, 2^-panels] is integrated from the leading
    /// terms zeta(s, a) ~ a^-s + zeta(s).
    int panels = 40;
};

/// Integral over (0, 1) of zeta(s1, a) zeta(s2, a). Requires Re s1 < 1,
/// Re s2 < 1 and Re(s1 + s2) < 1.
Complex parseval_lhs_num(Complex s1, Complex s2, ParsevalQuadrature quadrature = {});

/// (LHS, RHS) of the Parseval identity at s1 = -a, s2 = -b, both exact.
/// LHS integrates B_{a+1} B_{b+1} / ((a+1)(b+1)); RHS is the closed form
/// with zeta(2n) written through B_{2n}, so all powers of pi cancel.
std::pair<BigRational, BigRational> parseval_exact_negint(std::size_t a, std::size_t b);

/// sum_{k_1..k_r} prod_i B_{k_i} C(m_i+1, k_i) / (1 + sum_i (m_i + 1 - k_i)).
BigRational prop2_lhs(std::span<const std::size_t> m_list);

/// Integral over [0, 1] of prod_i B_{m_i+1}(a), by exact polynomial algebra.
BigRational prop2_lhs_by_integration(std::span<const std::size_t> m_list);

/// sum over (n_1..n_r) with 1 <= |n_i| <= cutoff and sum n_i = target of
/// prod_i (2 pi i n_i)^(-exponents_i).
struct LatticeSum {
    std::vector<int> exponents;
    long cutoff = 2000;
    long target = 0;
};

/// Throws ConvergenceUnsafe unless the untruncated sum converges absolutely:
/// for every subset S of at least two coordinates, sum_{i in S} e_i > |S| - 1.
/// Throws std::invalid_argument for an empty list or a negative exponent.
void check_absolute_convergence(std::span<const int> exponents);

/// Enumerates free coordinates n_1..n_{r-1} in ascending order and solves
/// n_r from the constraint, skipping n_r = 0 and |n_r| > cutoff. The result
/// is bit-reproducible.
Complex evaluate(const LatticeSum& sum);

/// (-1)^r prod (m_i+1)! times the target-0 lattice sum; real part.
double prop2_rhs_truncated(std::span<const std::size_t> m_list, FourierTruncation trunc);

/// Truncated Fourier coefficient a_target of prod_i B_{m_i+1}(a).
Complex product_fourier_coeff(std::span<const std::size_t> m_list, long target,
                              FourierTruncation trunc);

/// Exact-route Fourier coefficient of a polynomial on [0, 1]:
/// integral of p(a) e^{-2 pi i k a}. For k != 0 uses repeated integration by
/// parts, sum_j (p^(j)(1) - p^(j)(0)) / (2 pi i k)^(j+1), with the
/// differences computed exactly.
Complex polynomial_fourier_coeff(const RationalPoly& p, long k);

struct ConvergenceRow {
    long cutoff;
    double approximation;
    double reference;
    double abs_error;
};

/// Header "cutoff,approximation,reference,abs_error", one row per entry,
/// doubles printed with 17 significant digits.
void write_convergence_csv(std::ostream& os, std::span<const ConvergenceRow> rows);

}  // namespace mzv
