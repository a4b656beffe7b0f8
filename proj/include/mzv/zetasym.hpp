#pragma once

/**
 * @file zetasym.hpp
 * @brief Hurwitz zeta at non-positive integers as exact polynomials, and the
 * reduction of zeta_k(s1, -m2, ..., -mk) to shifted Riemann zeta values.
 */

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mzv/exact.hpp"

namespace mzv {

/// Trailing arguments (m2, ..., mk) of zeta_k(s1, -m2, ..., -mk).
/// The empty list is k = 1, plain Riemann zeta.
struct MZVSpec {
    std::vector<std::size_t> trailing_args;

    std::size_t depth() const { return trailing_args.size() + 1; }
};

/// s1 -> sum_e c_e zeta(s1 - e). Zero coefficients are never stored.
class ZetaCombination {
public:
    using Terms = std::map<std::size_t, BigRational>;

    ZetaCombination() = default;

    /// Adds c * zeta(s1 - shift); drops the entry if it cancels to zero.
    void add(std::size_t shift, const BigRational& c);

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    /// Zero when the shift is absent.
    BigRational coeff(std::size_t shift) const;
    /// Largest stored shift; 0 for the empty combination.
    std::size_t max_shift() const;

    friend bool operator==(const ZetaCombination&, const ZetaCombination&) = default;

    /// {"terms":[{"shift":e,"coeff":"p/q"},...]} sorted by descending shift,
    /// compact, no whitespace.
    std::string to_json() const;
    /// Inverse of to_json. Throws std::invalid_argument on malformed input,
    /// including duplicate shifts and zero coefficients.
    static ZetaCombination from_json(const std::string& text);

private:
    Terms terms_;
};

/// zeta(-m, x) = -B_{m+1}(x)/(m+1).
RationalPoly hurwitz_neg_poly(std::size_t m);

/// zeta(-m, x + 1) = -Bbar_{m+1}(x)/(m+1).
RationalPoly hurwitz_neg_poly_shifted(std::size_t m);

/// zeta(-m, x) assembled term by term from
/// sum_k C(m, k) zeta(-k) x^(m-k) + x^m - x^(m+1)/(m+1).
RationalPoly hurwitz_neg_via_lemma3(std::size_t m);

/// zeta(-m) = -Bbar_{m+1}/(m+1).
BigRational zeta_neg(std::size_t m);

/// The level polynomials of the reduction, outermost last:
/// result[0] = P_k, ..., result[k-2] = P_2. Empty for k = 1.
///
/// P_k(n) = zeta(-m_k, n + 1); each step replaces a monomial c n^e of P_j by
/// c zeta(-m_{j-1} - e, n + 1), the continuation of
/// c sum_{n' > n} n'^(m_{j-1} + e).
std::vector<RationalPoly> mzv_level_polys(const MZVSpec& spec);

/// zeta_k(s1, -m2, ..., -mk) as a combination of zeta(s1 - e). Each monomial
/// c n^e of P_2 contributes c zeta(s1 - e). The empty spec yields {0: 1}.
ZetaCombination mzv_reduce(const MZVSpec& spec);

/// The explicit k = 3 double sum over k3 in [0, m3+1] and
/// k2 in [0, m2+m3+2-k3] with Bbar coefficients.
ZetaCombination mzv_theorem_k3(std::size_t m2, std::size_t m3);

/// Value at s1 = -m1: sum_e c_e zeta(-(m1 + e)).
BigRational mzv_eval_exact(const MZVSpec& spec, std::size_t m1);
BigRational combination_eval_exact(const ZetaCombination& combination, std::size_t m1);

/// Floating evaluation for complex s1. Throws PoleHit when s1 - e = 1 for a
/// stored shift e (within 1e-12), otherwise DomainViolation when s1 is a
/// positive integer. Non-finite s1 is a DomainViolation.
std::complex<double> mzv_eval_numeric(const MZVSpec& spec, std::complex<double> s1);
std::complex<double> combination_eval_numeric(const ZetaCombination& combination,
                                              std::complex<double> s1);

}  // namespace mzv
