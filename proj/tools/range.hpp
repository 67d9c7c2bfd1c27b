#pragma once

// Sweep syntax for CLI flags: comma lists of items, each item either a value or a
// range a..b (unit step) or a..b:logK (K log-spaced points). Real values may be
// written as fractions such as 4/3.

#include <cstddef>
#include <string>
#include <vector>

namespace hermspace::cli {

/// Integer sweep. Log-spaced points are rounded and duplicates dropped; order is
/// preserved. Throws DomainError on malformed or empty input.
std::vector<std::size_t> parse_int_sweep(const std::string& text);

/// Real sweep: values, fractions, a..b:logK or a..b:linK.
std::vector<double> parse_real_sweep(const std::string& text);

/// 12 significant digits, the CSV float format.
std::string format_real(double value);

}  // namespace hermspace::cli
