#pragma once

/**
 * @file bernoulli.hpp
 * @brief Bernoulli numbers and polynomials over the rationals.
 *
 * Convention: B_n = B_n(0), so B_1 = -1/2. The shifted numbers
 * Bbar_n = B_n(1) agree with B_n except Bbar_1 = 1/2.
 */

#include <cstddef>
#include <mutex>
#include <vector>

#include "mzv/exact.hpp"

namespace mzv {

/// Incrementally extended cache of B_0, B_1, ... computed from
/// sum_{k=0}^{n} C(n+1, k) B_k = 0. Extension is serialized by a mutex;
/// returned values are copies.
class BernoulliTable {
public:
    BernoulliTable();

    BigRational get(std::size_t n);
    std::size_t cached_size() const;

private:
    void extend_to(std::size_t n);

    mutable std::mutex mutex_;
    std::vector<BigRational> values_;
};

/// Process-wide table used by the free functions below.
BernoulliTable& shared_bernoulli_table();

BigRational bernoulli_number(std::size_t n);

/// B_n(1): B_n for n != 1, 1/2 for n = 1.
BigRational bernoulli_bar(std::size_t n);

/// B_m(x) = sum_k C(m, k) B_k x^(m-k).
RationalPoly bernoulli_poly(std::size_t m);

/// sum_k C(m, k) Bbar_k x^(m-k), which equals B_m(x + 1).
RationalPoly bernoulli_bar_poly(std::size_t m);

/// Checks the generating function z e^{xz}/(e^z - 1) = sum_n B_n(x) z^n/n!
/// through order `order` in z. The candidate series built from
/// bernoulli_poly is multiplied by (e^z - 1) in a truncated power-series ring
/// over RationalPoly and compared coefficientwise against z e^{xz}, so the
/// check never re-runs the defining recurrence. Returns true when every
/// coefficient of z^0 .. z^order matches exactly.
bool generating_function_matches(std::size_t order = 16);

}  // namespace mzv
