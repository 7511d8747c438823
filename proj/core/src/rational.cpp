#include "mlapd/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mlapd {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) bad(text);

    Rat result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        BigInt n{std::string(num)};
        BigInt d{std::string(den)};
        if (d == 0) bad(text);
        result = Rat(n, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad(text);
        if (!whole.empty() && !all_digits(whole)) bad(text);
        if (!frac.empty() && !all_digits(frac)) bad(text);
        BigInt n = whole.empty() ? BigInt(0) : BigInt{std::string(whole)};
        BigInt scale = 1;
        for (char c : frac) {
            n = n * 10 + (c - '0');
            scale *= 10;
        }
        result = Rat(n, scale);
    } else {
        if (!all_digits(s)) bad(text);
        result = Rat(BigInt{std::string(s)});
    }
    if (negative) result = -result;
    return result;
}

std::string format_rational(const Rat& q) {
    std::ostringstream out;
    out << numerator(q);
    if (denominator(q) != 1) out << '/' << denominator(q);
    return out.str();
}

std::string decimal_approx(const Rat& q, int significant) {
    if (q == 0) return "0";
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    bool negative = num < 0;
    if (negative) num = -num;

    // scale so the integer quotient carries `significant` digits
    int exponent = 0;  // decimal point position relative to digit string
    BigInt scaled = num;
    while (BigInt(scaled / den) == 0) {
        scaled *= 10;
        --exponent;
    }
    std::string lead = BigInt(scaled / den).str();
    int have = static_cast<int>(lead.size());
    for (; have < significant; ++have) {
        scaled *= 10;
        --exponent;
    }
    // round half away from zero
    BigInt digits = scaled / den;
    BigInt rem = scaled % den;
    if (rem * 2 >= den) ++digits;
    std::string d = digits.str();
    if (static_cast<int>(d.size()) > significant) {
        // rounding overflowed into one more digit (e.g. 999.. -> 1000..)
        d.pop_back();
        ++exponent;
    }
    // strip trailing zeros of the fractional representation
    int point = static_cast<int>(d.size()) + exponent;  // digits before the decimal point
    std::string out;
    if (point <= 0) {
        out = "0.";
        out.append(static_cast<size_t>(-point), '0');
        out += d;
    } else if (point >= static_cast<int>(d.size())) {
        out = d;
        out.append(static_cast<size_t>(point - static_cast<int>(d.size())), '0');
    } else {
        out = d.substr(0, static_cast<size_t>(point)) + "." + d.substr(static_cast<size_t>(point));
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return negative ? "-" + out : out;
}

Rat pow_rational(const Rat& q, unsigned exponent) {
    Rat result = 1;
    Rat base = q;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

std::string format_ext(const ExtRat& v) {
    return v.is_finite() ? format_rational(v.value()) : "inf";
}

}  // namespace mlapd
