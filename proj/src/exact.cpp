#include "mzv/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mzv {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (den == 0) {
        throw std::domain_error("BigRational: zero denominator");
    }
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    BigInt num(std::string(num_text), 10);
    const BigInt den(std::string(den_text), 10);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
    }
    if (negative) {
        num = -num;
    }
    return BigRational(num, den);
}

std::string BigRational::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.value_ = -value_;
    return r;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("BigRational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.str(); }

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    // result stays C(n - k + i, i) after step i, so the division is exact
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= static_cast<unsigned long>(n - k + i);
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
    }
    return result;
}

BigInt factorial(std::uint64_t n) {
    BigInt result = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        result *= static_cast<unsigned long>(i);
    }
    return result;
}

// ---------------------------------------------------------------------------
// RationalPoly

RationalPoly::RationalPoly(std::vector<BigRational> coefficients)
    : coeffs_(std::move(coefficients)) {
    strip();
}

RationalPoly::RationalPoly(std::initializer_list<BigRational> coefficients)
    : coeffs_(coefficients) {
    strip();
}

RationalPoly RationalPoly::constant(const BigRational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(const BigRational& c, std::size_t power) {
    std::vector<BigRational> cs(power + 1);
    cs[power] = c;
    return RationalPoly(std::move(cs));
}

BigRational RationalPoly::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigRational();
}

void RationalPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    strip();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) { return *this += -rhs; }

RationalPoly& RationalPoly::operator*=(const BigRational& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return RationalPoly(std::move(out));
}

std::string RationalPoly::str(std::string_view var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigRational& c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        const BigRational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == BigRational(1);
        if (k == 0 || !unit) {
            os << mag.str();
        }
        if (k > 0) {
            if (!unit) {
                os << "*";
            }
            os << var;
            if (k > 1) {
                os << "^" << k;
            }
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& p) { return os << p.str(); }

RationalPoly poly_mul(const RationalPoly& p, const RationalPoly& q) { return p * q; }

BigRational poly_integrate_01(const RationalPoly& p) {
    BigRational total;
    const auto cs = p.coefficients();
    for (std::size_t j = 0; j < cs.size(); ++j) {
        total += cs[j] / BigRational(static_cast<long>(j + 1));
    }
    return total;
}

RationalPoly poly_antiderivative(const RationalPoly& p) {
    const auto cs = p.coefficients();
    std::vector<BigRational> out(cs.size() + 1);
    for (std::size_t j = 0; j < cs.size(); ++j) {
        out[j + 1] = cs[j] / BigRational(static_cast<long>(j + 1));
    }
    return RationalPoly(std::move(out));
}

namespace {

// p(x + step) via binomial expansion of each monomial.
RationalPoly translate(const RationalPoly& p, long step) {
    const auto cs = p.coefficients();
    std::vector<BigRational> out(cs.size());
    for (std::size_t j = 0; j < cs.size(); ++j) {
        if (cs[j].is_zero()) {
            continue;
        }
        // (x + step)^j = sum_i C(j, i) step^(j - i) x^i
        BigInt step_power = 1;
        for (std::size_t i = j + 1; i-- > 0;) {
            out[i] += cs[j] * BigRational(BigInt(binomial(j, i) * step_power));
            step_power *= step;
        }
    }
    return RationalPoly(std::move(out));
}

}  // namespace

RationalPoly poly_shift(const RationalPoly& p) { return translate(p, 1); }

RationalPoly poly_shift_inverse(const RationalPoly& p) { return translate(p, -1); }

BigRational poly_eval(const RationalPoly& p, const BigRational& x) {
    BigRational acc;
    const auto cs = p.coefficients();
    for (std::size_t k = cs.size(); k-- > 0;) {
        acc *= x;
        acc += cs[k];
    }
    return acc;
}

double poly_eval(const RationalPoly& p, double x) {
    double acc = 0.0;
    const auto cs = p.coefficients();
    for (std::size_t k = cs.size(); k-- > 0;) {
        acc = acc * x + cs[k].to_double();
    }
    return acc;
}

}  // namespace mzv
