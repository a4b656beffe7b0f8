#include "mzv/format.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace mzv {

namespace {

// Parses a full decimal number (strtod syntax, no inf/nan).
bool parse_real(std::string_view text, double& out) {
    if (text.empty()) {
        return false;
    }
    for (const char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'E' ||
              c == '+' || c == '-')) {
            return false;
        }
    }
    const std::string buffer(text);
    char* end = nullptr;
    errno = 0;
    out = std::strtod(buffer.c_str(), &end);
    return end == buffer.c_str() + buffer.size() && errno != ERANGE && std::isfinite(out);
}

// Coefficient of i: "" / "+" / "-" mean 1 / 1 / -1.
bool parse_imag_coeff(std::string_view text, double& out) {
    if (text.empty() || text == "+") {
        out = 1.0;
        return true;
    }
    if (text == "-") {
        out = -1.0;
        return true;
    }
    return parse_real(text, out);
}

}  // namespace

std::string format_rational(const BigRational& x) { return x.str(); }

std::string format_double(double x) {
    if (x == 0.0) {
        return "0";
    }
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) {
        return format_double(z.real());
    }
    std::string out = format_double(z.real());
    const std::string im = format_double(z.imag());
    out += im.front() == '-' ? im : "+" + im;
    return out + "i";
}

Complex parse_complex(std::string_view text) {
    const auto fail = [&]() -> Complex {
        throw std::invalid_argument("malformed complex value '" + std::string(text) +
                                    "' (expected a, a+bi or a-bi)");
    };
    if (text.empty()) {
        return fail();
    }
    double re = 0.0;
    if (text.back() != 'i') {
        if (!parse_real(text, re)) {
            return fail();
        }
        return {re, 0.0};
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    // split at the last sign that does not belong to an exponent
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    double im = 0.0;
    if (split == std::string_view::npos) {
        if (!parse_imag_coeff(body, im)) {
            return fail();
        }
        return {0.0, im};
    }
    if (!parse_real(body.substr(0, split), re) || !parse_imag_coeff(body.substr(split), im)) {
        return fail();
    }
    return {re, im};
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
    std::vector<std::size_t> out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item = text.substr(start, comma - start);
        if (item.empty() || item.size() > 9 ||
            item.find_first_not_of("0123456789") != std::string_view::npos) {
            throw std::invalid_argument("malformed index list '" + std::string(text) +
                                        "' (expected non-negative integers separated by commas)");
        }
        out.push_back(std::stoul(std::string(item)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::vector<long> parse_cutoff_list(std::string_view text) {
    std::vector<long> out;
    for (const std::size_t v : parse_index_list(text)) {
        if (v < 1) {
            throw std::invalid_argument("cutoffs must be >= 1");
        }
        out.push_back(static_cast<long>(v));
    }
    if (out.empty()) {
        throw std::invalid_argument("cutoff list must not be empty");
    }
    return out;
}

}  // namespace mzv
