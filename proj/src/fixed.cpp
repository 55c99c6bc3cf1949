#include "bcp/fixed.hpp"

#include <cmath>
#include <cstdio>

namespace bcp {

Height div_round_half_up(__int128 num, Height den) {
    if (den <= 0) throw ValidationError("division by non-positive denominator");
    if (num < 0) throw ValidationError("negative fixed-point intermediate");
    return static_cast<Height>((num + den / 2) / den);
}

Height parse_height(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = (text[i++] == '-');

    bool any_digit = false;
    std::int64_t whole = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        any_digit = true;
        whole = whole * 10 + (text[i] - '0');
        // keep whole * kUnit inside int64
        if (whole > 9'000'000'000LL) throw ValidationError("decimal out of range: " + std::string(text));
        ++i;
    }

    std::int64_t frac = 0;
    int frac_digits = 0;
    bool round_up = false;
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            any_digit = true;
            if (frac_digits < 9) {
                frac = frac * 10 + (text[i] - '0');
            } else if (frac_digits == 9) {
                // the 10th digit alone decides: tails >= 5000... round up
                round_up = (text[i] - '0') >= 5;
            }
            ++frac_digits;
            ++i;
        }
    }
    if (!any_digit || i != text.size())
        throw ValidationError("bad decimal literal: \"" + std::string(text) + "\"");

    for (int k = frac_digits; k < 9; ++k) frac *= 10;
    Height value = whole * kUnit + frac + (round_up ? 1 : 0);
    return negative ? -value : value;
}

Height height_from_double(double value) {
    if (!std::isfinite(value)) throw ValidationError("non-finite number");
    long double scaled = static_cast<long double>(value) * kUnit;
    if (scaled > 9.0e18L || scaled < -9.0e18L) throw ValidationError("number out of range");
    return static_cast<Height>(llroundl(scaled));
}

std::string format_height(Height value) {
    std::string sign;
    if (value < 0) {
        sign = "-";
        value = -value;
    }
    std::string out = sign + std::to_string(value / kUnit);
    Height frac = value % kUnit;
    if (frac != 0) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%09lld", static_cast<long long>(frac));
        std::string digits(buf);
        while (!digits.empty() && digits.back() == '0') digits.pop_back();
        out += "." + digits;
    }
    return out;
}

}  // namespace bcp
