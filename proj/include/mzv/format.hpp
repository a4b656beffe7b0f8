#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mzv/exact.hpp"
#include "mzv/numerics.hpp"

namespace mzv {

/// "p/q", or "p" when q = 1.
std::string format_rational(const BigRational& x);

/// Shortest "%.17g" form; "-0" is printed as "0".
std::string format_double(double x);

/// "a" for real values, otherwise "a+bi" / "a-bi".
std::string format_complex(Complex z);

/// Accepts "a", "a+bi", "a-bi", "bi", "i", "-i" with decimal or exponent
/// notation. Throws std::invalid_argument on anything else.
Complex parse_complex(std::string_view text);

/// "0,3,1" -> {0, 3, 1}; "" -> {}. Throws std::invalid_argument on
/// malformed or negative entries.
std::vector<std::size_t> parse_index_list(std::string_view text);

/// "100,1000" -> {100, 1000}; entries must be >= 1.
std::vector<long> parse_cutoff_list(std::string_view text);

}  // namespace mzv
