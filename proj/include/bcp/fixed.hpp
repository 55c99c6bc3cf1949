#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bcp {

// Heights and cell loads are fixed-point integers with 9 fractional digits.
// All feasibility checks are exact integer comparisons against kUnit, so
// there is no floating-point tolerance anywhere in the solvers.
using Height = std::int64_t;

inline constexpr Height kUnit = 1'000'000'000;
inline constexpr Height kHalfUnit = kUnit / 2;

// Input that cannot be parsed or violates a precondition.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An algorithm applied to an instance outside its domain, e.g. a two-bar
// method on a wider chart.
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact decimal parse; digits past the 9th fractional place round half up.
Height parse_height(std::string_view text);

// Binary floats round half up to the 9-digit grid.
Height height_from_double(double value);

// Shortest exact decimal, e.g. "0.5", "1", "0.000000001".
std::string format_height(Height value);

// Nearest integer to num/den, halves up. Used for normalization by D.
Height div_round_half_up(__int128 num, Height den);

}  // namespace bcp
