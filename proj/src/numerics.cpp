#include "mzv/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/sin_pi.hpp>
#include <boost/math/special_functions/cos_pi.hpp>
#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

#include "mzv/bernoulli.hpp"
#include "mzv/errors.hpp"

namespace mzv {

namespace {

using boost::multiprecision::complex128;
using boost::multiprecision::float128;

constexpr double kPoleTolerance = 1e-12;
constexpr int kMaxCorrectionOrder = 20;

float128 to_float128(const BigRational& x) {
    return float128(x.numerator().get_str()) / float128(x.denominator().get_str());
}

// B_{2j} / (2j)! for j = 1..kMaxCorrectionOrder.
const std::array<float128, kMaxCorrectionOrder + 1>& tail_coefficients() {
    static const auto table = [] {
        std::array<float128, kMaxCorrectionOrder + 1> t{};
        for (int j = 1; j <= kMaxCorrectionOrder; ++j) {
            const auto n = static_cast<std::size_t>(2 * j);
            t[j] = to_float128(bernoulli_number(n) * BigRational(1, factorial(n)));
        }
        return t;
    }();
    return table;
}

// w^{-s} for real w > 0, principal branch.
complex128 real_power(const float128& log_w, const complex128& s) {
    return exp(-s * complex128(log_w));
}

Complex to_double(const complex128& z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

void require_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw DomainViolation("alpha must be a finite real > 0, got " + std::to_string(alpha));
    }
}

}  // namespace

void require_finite(Complex z, const char* name) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainViolation(std::string(name) + " must be finite");
    }
}

Complex sin_pi(Complex z) {
    const double x = z.real();
    const double y = std::numbers::pi * z.imag();
    return {boost::math::sin_pi(x) * std::cosh(y), boost::math::cos_pi(x) * std::sinh(y)};
}

Complex cos_pi(Complex z) {
    const double x = z.real();
    const double y = std::numbers::pi * z.imag();
    return {boost::math::cos_pi(x) * std::cosh(y), -boost::math::sin_pi(x) * std::sinh(y)};
}

EulerMaclaurinParams EulerMaclaurinParams::defaults_for(Complex s) {
    EulerMaclaurinParams p;
    p.head_terms = std::max(16, static_cast<int>(std::ceil(std::abs(s.imag()))) + 16);
    p.correction_order = 12;
    return p;
}

void EulerMaclaurinParams::validate() const {
    if (head_terms < 8) {
        throw std::invalid_argument("Euler-Maclaurin head_terms must be >= 8");
    }
    if (correction_order < 1 || correction_order > kMaxCorrectionOrder) {
        throw std::invalid_argument("Euler-Maclaurin correction_order must lie in [1, 20]");
    }
}

Complex gamma(Complex z) {
    require_finite(z, "z");
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z.imag()) <= kPoleTolerance &&
        std::abs(z.real() - nearest) <= kPoleTolerance) {
        throw PoleHit("gamma has a pole at " + std::to_string(static_cast<long>(nearest)));
    }
    if (z.real() < 0.5) {
        return std::numbers::pi / (sin_pi(z) * gamma(1.0 - z));
    }
    static constexpr double g = 7.0;
    static constexpr std::array<double, 9> p = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    const Complex w = z - 1.0;
    Complex series = p[0];
    for (std::size_t i = 1; i < p.size(); ++i) {
        series += p[i] / (w + static_cast<double>(i));
    }
    const Complex t = w + g + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::exp((w + 0.5) * std::log(t) - t) * series;
}

Complex hurwitz_zeta_num(Complex s, double alpha, const EulerMaclaurinParams& params) {
    require_finite(s, "s");
    require_alpha(alpha);
    params.validate();
    if (std::abs(s - 1.0) <= kPoleTolerance) {
        throw PoleHit("Hurwitz zeta has a pole at s = 1");
    }

    const complex128 sq(s.real(), s.imag());
    const float128 a(alpha);

    complex128 head(0);
    for (int n = 0; n < params.head_terms; ++n) {
        head += real_power(log(float128(n) + a), sq);
    }

    const float128 w = float128(params.head_terms) + a;
    const float128 log_w = log(w);
    const complex128 w_neg_s = real_power(log_w, sq);

    complex128 total = head + complex128(w) * w_neg_s / (sq - complex128(1)) + w_neg_s / 2;

    // sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * w^{-s-2j+1}
    const auto& coeffs = tail_coefficients();
    complex128 rising = sq;
    complex128 power = w_neg_s / complex128(w);
    const complex128 inv_w2(1 / (w * w));
    for (int j = 1; j <= params.correction_order; ++j) {
        total += complex128(coeffs[j]) * rising * power;
        rising *= (sq + complex128(2 * j - 1)) * (sq + complex128(2 * j));
        power *= inv_w2;
    }
    return to_double(total);
}

Complex hurwitz_zeta_num(Complex s, double alpha) {
    return hurwitz_zeta_num(s, alpha, EulerMaclaurinParams::defaults_for(s));
}

Complex riemann_zeta_num(Complex s, const EulerMaclaurinParams& params) {
    return hurwitz_zeta_num(s, 1.0, params);
}

Complex riemann_zeta_num(Complex s) { return hurwitz_zeta_num(s, 1.0); }

Complex bernoulli_function(Complex s, double alpha, const EulerMaclaurinParams& params) {
    require_finite(s, "s");
    require_alpha(alpha);
    if (s == Complex(0.0, 0.0)) {
        return 1.0;
    }
    return s * hurwitz_zeta_num(s + 1.0, alpha, params);
}

Complex bernoulli_function(Complex s, double alpha) {
    return bernoulli_function(s, alpha, EulerMaclaurinParams::defaults_for(s + 1.0));
}

}  // namespace mzv
