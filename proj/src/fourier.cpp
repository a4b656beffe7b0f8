#include "mzv/fourier.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/cos_pi.hpp>

#include "mzv/bernoulli.hpp"
#include "mzv/errors.hpp"

namespace mzv {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Neumaier-compensated running sum.
template <typename T>
class CompensatedSum {
public:
    void add(T x) {
        const T t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    T value() const { return sum_ + carry_; }

private:
    T sum_{};
    T carry_{};
};

// frac(n * alpha) in [0, 1).
double phase(long n, double alpha) {
    const double x = static_cast<double>(n) * alpha;
    return x - std::floor(x);
}

double factorial_double(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) {
        f *= i;
    }
    return f;
}

// sum_{0<|n|<=N} e^{2 pi i n a} / (2 pi i n)^p as the sum of conjugate-pair
// real parts 2 cos(2 pi n a - p pi/2) / (2 pi n)^p, accumulated from the
// smallest terms up.
double paired_series(int power, double alpha, long cutoff) {
    CompensatedSum<double> acc;
    for (long n = cutoff; n >= 1; --n) {
        const double angle = 2.0 * phase(n, alpha) - 0.5 * power;
        acc.add(2.0 * boost::math::cos_pi(angle) / std::pow(kTwoPi * static_cast<double>(n), power));
    }
    return acc.value();
}

void require_unit_interval(double alpha, bool open) {
    const bool ok = open ? (alpha > 0.0 && alpha < 1.0) : (alpha >= 0.0 && alpha <= 1.0);
    if (!std::isfinite(alpha) || !ok) {
        throw DomainViolation(std::string("alpha must lie in ") + (open ? "(0, 1)" : "[0, 1]") +
                              ", got " + std::to_string(alpha));
    }
}

std::vector<int> exponents_of(std::span<const std::size_t> m_list) {
    if (m_list.empty()) {
        throw std::invalid_argument("m_list must contain at least one entry");
    }
    std::vector<int> exponents;
    exponents.reserve(m_list.size());
    for (const std::size_t m : m_list) {
        exponents.push_back(static_cast<int>(m) + 1);
    }
    return exponents;
}

// (-1)^r prod (m_i + 1)!
double product_prefactor(std::span<const std::size_t> m_list) {
    double f = m_list.size() % 2 == 0 ? 1.0 : -1.0;
    for (const std::size_t m : m_list) {
        f *= factorial_double(static_cast<int>(m) + 1);
    }
    return f;
}

}  // namespace

void FourierTruncation::validate() const {
    if (cutoff < 1) {
        throw std::invalid_argument("Fourier cutoff must be >= 1");
    }
}

double bernoulli_fourier_partial(int m, double alpha, FourierTruncation trunc) {
    trunc.validate();
    if (m < 1) {
        throw DomainViolation("Bernoulli Fourier series needs m >= 1");
    }
    require_unit_interval(alpha, m == 1);
    return -factorial_double(m) * paired_series(m, alpha, trunc.cutoff);
}

double hurwitz_neg_fourier_partial(int m, double alpha, FourierTruncation trunc) {
    trunc.validate();
    if (m < 0) {
        throw DomainViolation("zeta(-m, a) Fourier series needs m >= 0");
    }
    require_unit_interval(alpha, m == 0);
    return factorial_double(m) * paired_series(m + 1, alpha, trunc.cutoff);
}

Complex hurwitz_fourier_partial(Complex s, double alpha, FourierTruncation trunc) {
    trunc.validate();
    require_finite(s, "s");
    if (!(s.real() < 1.0)) {
        throw DomainViolation("Hurwitz Fourier series needs Re s < 1");
    }
    require_unit_interval(alpha, true);

    const Complex sm1 = s - 1.0;
    const Complex quarter_turn = sm1 * Complex(0.0, 0.5 * std::numbers::pi);
    Complex total = 0.0;
    for (long n = trunc.cutoff; n >= 1; --n) {
        const double log_n = std::log(kTwoPi * static_cast<double>(n));
        const double ph = 2.0 * phase(n, alpha);
        const Complex e_pos(boost::math::cos_pi(ph), boost::math::sin_pi(ph));
        const Complex e_neg = std::conj(e_pos);
        // (2 pi i n)^(s-1) = exp((s-1)(log(2 pi |n|) + i sign(n) pi/2))
        const Complex pos = e_pos * std::exp(sm1 * log_n + quarter_turn);
        const Complex neg = e_neg * std::exp(sm1 * log_n - quarter_turn);
        total += pos + neg;
    }
    return gamma(1.0 - s) * total;
}

Complex parseval_rhs(Complex s1, Complex s2, const EulerMaclaurinParams& params) {
    require_finite(s1, "s1");
    require_finite(s2, "s2");
    const Complex sum = s1 + s2;
    if (!(sum.real() < 1.0)) {
        throw DomainViolation("Parseval identity needs Re(s1 + s2) < 1");
    }
    return 2.0 * std::pow(Complex(kTwoPi), sum - 2.0) * cos_pi(0.5 * (s1 - s2)) *
           gamma(1.0 - s1) * gamma(1.0 - s2) * riemann_zeta_num(2.0 - sum, params);
}

Complex parseval_rhs(Complex s1, Complex s2) {
    return parseval_rhs(s1, s2, EulerMaclaurinParams::defaults_for(2.0 - s1 - s2));
}

Complex parseval_lhs_num(Complex s1, Complex s2, ParsevalQuadrature quadrature) {
    require_finite(s1, "s1");
    require_finite(s2, "s2");
    if (!(s1.real() < 1.0) || !(s2.real() < 1.0) || !((s1 + s2).real() < 1.0)) {
        throw DomainViolation("Parseval integral needs Re s1 < 1, Re s2 < 1, Re(s1 + s2) < 1");
    }
    if (quadrature.panels < 1 || quadrature.panels > 1000) {
        throw std::invalid_argument("quadrature panels must lie in [1, 1000]");
    }
    const auto p1 = EulerMaclaurinParams::defaults_for(s1);
    const auto p2 = EulerMaclaurinParams::defaults_for(s2);
    const auto integrand = [&](double a) -> Complex {
        return hurwitz_zeta_num(s1, a, p1) * hurwitz_zeta_num(s2, a, p2);
    };

    using Rule = boost::math::quadrature::gauss<double, 20>;
    Complex total = 0.0;
    double hi = 1.0;
    for (int k = 0; k < quadrature.panels; ++k) {
        const double lo = 0.5 * hi;
        total += Rule::integrate(integrand, lo, hi);
        hi = lo;
    }

    // [0, eps]: zeta(s, a) = a^-s + zeta(s, 1 + a) ~ a^-s + zeta(s)
    const double eps = hi;
    const Complex z1 = riemann_zeta_num(s1, p1);
    const Complex z2 = riemann_zeta_num(s2, p2);
    const auto power_integral = [eps](Complex exponent) {
        // integral_0^eps a^-exponent da
        return std::pow(Complex(eps), 1.0 - exponent) / (1.0 - exponent);
    };
    total += power_integral(s1 + s2) + z2 * power_integral(s1) + z1 * power_integral(s2) +
             z1 * z2 * eps;
    return total;
}

std::pair<BigRational, BigRational> parseval_exact_negint(std::size_t a, std::size_t b) {
    const BigRational lhs =
        poly_integrate_01(bernoulli_poly(a + 1) * bernoulli_poly(b + 1)) /
        BigRational(static_cast<long>((a + 1) * (b + 1)));

    if ((a + b) % 2 == 1) {
        return {lhs, BigRational()};
    }
    // cos(pi (b - a)/2) = (-1)^{|b-a|/2}; zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!)
    const std::size_t n = (a + b + 2) / 2;
    const std::size_t half_gap = (a > b ? a - b : b - a) / 2;
    const bool negative = (half_gap + n + 1) % 2 == 1;
    BigRational rhs = BigRational(factorial(a) * factorial(b), factorial(2 * n)) *
                      bernoulli_number(2 * n);
    if (negative) {
        rhs = -rhs;
    }
    return {lhs, rhs};
}

BigRational prop2_lhs(std::span<const std::size_t> m_list) {
    if (m_list.empty()) {
        throw std::invalid_argument("m_list must contain at least one entry");
    }
    const std::size_t r = m_list.size();
    std::vector<std::size_t> k(r, 0);
    BigRational total;
    while (true) {
        BigRational numerator(1);
        long degree = 1;
        for (std::size_t i = 0; i < r && !numerator.is_zero(); ++i) {
            numerator *= BigRational(binomial(m_list[i] + 1, k[i])) * bernoulli_number(k[i]);
            degree += static_cast<long>(m_list[i] + 1 - k[i]);
        }
        if (!numerator.is_zero()) {
            total += numerator / BigRational(degree);
        }
        // odometer over k_i in [0, m_i + 1]
        std::size_t i = 0;
        while (i < r && k[i] == m_list[i] + 1) {
            k[i] = 0;
            ++i;
        }
        if (i == r) {
            break;
        }
        ++k[i];
    }
    return total;
}

BigRational prop2_lhs_by_integration(std::span<const std::size_t> m_list) {
    if (m_list.empty()) {
        throw std::invalid_argument("m_list must contain at least one entry");
    }
    RationalPoly product = RationalPoly::constant(BigRational(1));
    for (const std::size_t m : m_list) {
        product = product * bernoulli_poly(m + 1);
    }
    return poly_integrate_01(product);
}

void check_absolute_convergence(std::span<const int> exponents) {
    if (exponents.empty()) {
        throw std::invalid_argument("lattice sum needs at least one coordinate");
    }
    for (const int e : exponents) {
        if (e < 0) {
            throw std::invalid_argument("lattice exponents must be non-negative");
        }
    }
    const std::size_t r = exponents.size();
    if (r > 20) {
        throw std::invalid_argument("lattice sum dimension too large");
    }
    // Shell count for a subset S of comparable large coordinates is
    // X^{|S|-1}; the terms decay like X^{-sum_S e_i}.
    for (unsigned long mask = 1; mask < (1UL << r); ++mask) {
        int size = 0;
        int weight = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if ((mask >> i) & 1UL) {
                ++size;
                weight += exponents[i];
            }
        }
        if (size >= 2 && weight <= size - 1) {
            throw ConvergenceUnsafe("lattice sum is not absolutely convergent: a subset of " +
                                    std::to_string(size) + " coordinates has total exponent " +
                                    std::to_string(weight));
        }
    }
}

Complex evaluate(const LatticeSum& sum) {
    check_absolute_convergence(sum.exponents);
    if (sum.cutoff < 1) {
        throw std::invalid_argument("lattice cutoff must be >= 1");
    }
    const std::size_t r = sum.exponents.size();
    const long n_max = sum.cutoff;
    const double free_points = std::pow(2.0 * static_cast<double>(n_max), static_cast<double>(r - 1));
    if (free_points > 4e9) {
        throw std::invalid_argument("lattice enumeration too large: about " +
                                    std::to_string(free_points) + " points");
    }

    // table[i][|n|] = |n|^{-e_i}
    std::vector<std::vector<double>> table(r, std::vector<double>(n_max + 1, 0.0));
    int total_exponent = 0;
    for (std::size_t i = 0; i < r; ++i) {
        total_exponent += sum.exponents[i];
        for (long n = 1; n <= n_max; ++n) {
            table[i][n] = std::pow(static_cast<double>(n), -sum.exponents[i]);
        }
    }
    const auto signed_power = [&](std::size_t i, long n) {
        const double mag = table[i][std::labs(n)];
        return (n < 0 && sum.exponents[i] % 2 == 1) ? -mag : mag;
    };

    // prod_i n_i^{-e_i} summed over the constraint surface; it is real.
    CompensatedSum<double> acc;
    if (r == 1) {
        if (sum.target != 0 && std::labs(sum.target) <= n_max) {
            acc.add(signed_power(0, sum.target));
        }
    } else {
        std::vector<long> n(r - 1, -n_max);
        long partial = -n_max * static_cast<long>(r - 1);
        while (true) {
            const long last = sum.target - partial;
            if (last != 0 && std::labs(last) <= n_max) {
                double term = signed_power(r - 1, last);
                for (std::size_t i = 0; i + 1 < r; ++i) {
                    term *= signed_power(i, n[i]);
                }
                acc.add(term);
            }
            // ascending odometer over [-N, -1] U [1, N], last free coordinate fastest
            std::size_t i = r - 1;
            while (i-- > 0) {
                const long before = n[i];
                n[i] = before == -1 ? 1 : before + 1;
                if (n[i] <= n_max) {
                    partial += n[i] - before;
                    break;
                }
                partial += -n_max - before;
                n[i] = -n_max;
            }
            if (i == static_cast<std::size_t>(-1)) {
                break;
            }
        }
    }

    // prod (2 pi i)^{-e_i} = (2 pi)^{-E} i^{-E}
    static constexpr Complex i_powers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    const Complex scale = std::pow(kTwoPi, -total_exponent) * i_powers[total_exponent % 4];
    return scale * acc.value();
}

double prop2_rhs_truncated(std::span<const std::size_t> m_list, FourierTruncation trunc) {
    return product_fourier_coeff(m_list, 0, trunc).real();
}

Complex product_fourier_coeff(std::span<const std::size_t> m_list, long target,
                              FourierTruncation trunc) {
    trunc.validate();
    LatticeSum sum{exponents_of(m_list), trunc.cutoff, target};
    return product_prefactor(m_list) * evaluate(sum);
}

Complex polynomial_fourier_coeff(const RationalPoly& p, long k) {
    if (k == 0) {
        return poly_integrate_01(p).to_double();
    }
    // integral_0^1 p(a) e^{c a} da with c = -2 pi i k and e^c = 1:
    // sum_j (-1)^j (p^(j)(1) - p^(j)(0)) / c^{j+1}
    const Complex c(0.0, -kTwoPi * static_cast<double>(k));
    std::vector<BigRational> derivative(p.coefficients().begin(), p.coefficients().end());
    Complex total = 0.0;
    Complex c_power = c;
    double sign = 1.0;
    while (!derivative.empty()) {
        BigRational at_one;
        for (const auto& coeff : derivative) {
            at_one += coeff;
        }
        const BigRational difference = at_one - derivative.front();
        total += sign * difference.to_double() / c_power;
        // differentiate
        std::vector<BigRational> next;
        for (std::size_t j = 1; j < derivative.size(); ++j) {
            next.push_back(derivative[j] * BigRational(static_cast<long>(j)));
        }
        derivative = std::move(next);
        c_power *= c;
        sign = -sign;
    }
    return total;
}

void write_convergence_csv(std::ostream& os, std::span<const ConvergenceRow> rows) {
    os << "cutoff,approximation,reference,abs_error\n";
    char buffer[128];
    for (const auto& row : rows) {
        std::snprintf(buffer, sizeof buffer, "%ld,%.17g,%.17g,%.17g\n", row.cutoff,
                      row.approximation, row.reference, row.abs_error);
        os << buffer;
    }
}

}  // namespace mzv
