#include "mzv/bernoulli.hpp"

namespace mzv {

BernoulliTable::BernoulliTable() { values_.emplace_back(1); }

BigRational BernoulliTable::get(std::size_t n) {
    std::lock_guard lock(mutex_);
    extend_to(n);
    return values_[n];
}

std::size_t BernoulliTable::cached_size() const {
    std::lock_guard lock(mutex_);
    return values_.size();
}

void BernoulliTable::extend_to(std::size_t n) {
    while (values_.size() <= n) {
        const std::size_t next = values_.size();
        if (next >= 3 && next % 2 == 1) {
            values_.emplace_back(0);
            continue;
        }
        // (next + 1) B_next = -sum_{k<next} C(next+1, k) B_k
        BigRational acc;
        for (std::size_t k = 0; k < next; ++k) {
            if (!values_[k].is_zero()) {
                acc += BigRational(binomial(next + 1, k)) * values_[k];
            }
        }
        values_.push_back(-acc / BigRational(static_cast<long>(next + 1)));
    }
}

BernoulliTable& shared_bernoulli_table() {
    static BernoulliTable table;
    return table;
}

BigRational bernoulli_number(std::size_t n) { return shared_bernoulli_table().get(n); }

BigRational bernoulli_bar(std::size_t n) {
    if (n == 1) {
        return bernoulli_number(1) + BigRational(1);
    }
    return bernoulli_number(n);
}

namespace {

template <typename Coefficient>
RationalPoly binomial_sum(std::size_t m, Coefficient&& coefficient) {
    std::vector<BigRational> cs(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
        cs[m - k] = BigRational(binomial(m, k)) * coefficient(k);
    }
    return RationalPoly(std::move(cs));
}

}  // namespace

RationalPoly bernoulli_poly(std::size_t m) { return binomial_sum(m, bernoulli_number); }

RationalPoly bernoulli_bar_poly(std::size_t m) { return binomial_sum(m, bernoulli_bar); }

bool generating_function_matches(std::size_t order) {
    // Series in z with RationalPoly coefficients (polynomials in x).
    using Series = std::vector<RationalPoly>;

    Series candidate(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        candidate[n] = bernoulli_poly(n) * BigRational(1, factorial(n));
    }

    // e^z - 1 = sum_{k>=1} z^k / k!
    Series exp_minus_one(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        exp_minus_one[k] = RationalPoly::constant(BigRational(1, factorial(k)));
    }

    Series product(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        for (std::size_t j = 1; i + j <= order; ++j) {
            product[i + j] += candidate[i] * exp_minus_one[j];
        }
    }

    // z e^{xz} = sum_{n>=1} x^(n-1) z^n / (n-1)!
    for (std::size_t n = 0; n <= order; ++n) {
        const RationalPoly expected =
            n == 0 ? RationalPoly{} : RationalPoly::monomial(BigRational(1, factorial(n - 1)), n - 1);
        if (product[n] != expected) {
            return false;
        }
    }
    return true;
}

}  // namespace mzv
