#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ravenlab {

// All verdict-path arithmetic is exact. Rat is an arbitrary-precision
// rational kept in canonical form (coprime, positive denominator).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rat(std::move(num), std::move(den));
}

// Accepts "p/q", a plain integer, or a decimal literal. Decimals convert
// exactly from their digits: "0.25" -> 1/4, never through floating point.
inline Rat parse_rational(std::string_view text) {
    auto fail = [&]() -> Rat {
        throw std::invalid_argument("bad rational literal: '" + std::string(text) + "'");
    };
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) fail();

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
        if (text.empty()) fail();
    }

    auto digits = [&](std::string_view s) -> Int {
        if (s.empty()) fail();
        Int v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') fail();
            v = v * 10 + (c - '0');
        }
        return v;
    };

    Rat value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Int num = digits(text.substr(0, slash));
        Int den = digits(text.substr(slash + 1));
        value = make_rat(num, den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) fail();
        Int num = whole.empty() ? Int(0) : digits(whole);
        Int scale = 1;
        for (char c : frac) {
            if (c < '0' || c > '9') fail();
            num = num * 10 + (c - '0');
            scale *= 10;
        }
        value = make_rat(num, scale);
    } else {
        value = Rat(digits(text));
    }
    return negative ? Rat(-value) : value;
}

// "p/q" with the denominator always spelled out ("3/4", "0/1", "2/1").
inline std::string to_fraction_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Decimal approximation for display only; verdicts never depend on it.
inline std::string to_decimal_string(const Rat& r, int significant_digits = 12) {
    if (significant_digits < 1) significant_digits = 1;
    Int num = numerator(r);
    Int den = denominator(r);
    if (num == 0) return "0";
    std::string sign = num < 0 ? "-" : "";
    if (num < 0) num = -num;

    // exponent e with 10^e <= num/den < 10^(e+1)
    int e = 0;
    Int lo = num, hi = den;  // compare num/den against 1 by scaling
    while (lo >= hi * 10) { hi *= 10; ++e; }
    while (lo < hi) { lo *= 10; --e; }

    // round(num/den * 10^(significant_digits-1-e)) via integer division
    Int scaled_num = num;
    Int scaled_den = den;
    int shift = significant_digits - 1 - e;
    if (shift >= 0)
        for (int i = 0; i < shift; ++i) scaled_num *= 10;
    else
        for (int i = 0; i < -shift; ++i) scaled_den *= 10;
    Int q = (scaled_num * 2 + scaled_den) / (scaled_den * 2);
    std::string mantissa = q.str();
    if (static_cast<int>(mantissa.size()) > significant_digits) {
        // rounding overflowed into one more digit (e.g. 999.96 -> 1000)
        mantissa.pop_back();
        ++e;
    }
    while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();

    if (e >= significant_digits || e < -4) {
        std::string out = sign + mantissa.substr(0, 1);
        if (mantissa.size() > 1) out += "." + mantissa.substr(1);
        out += "e" + std::to_string(e);
        return out;
    }
    if (e >= 0) {
        std::string out = sign;
        if (static_cast<int>(mantissa.size()) <= e) mantissa.append(e + 1 - mantissa.size(), '0');
        out += mantissa.substr(0, e + 1);
        if (mantissa.size() > static_cast<std::size_t>(e + 1)) out += "." + mantissa.substr(e + 1);
        return out;
    }
    return sign + "0." + std::string(-e - 1, '0') + mantissa;
}

}  // namespace ravenlab
