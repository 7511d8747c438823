#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace mlapd {

// All costs, times and budgets are exact rationals. The algorithms branch on
// exact zero (e.g. ell  == 0), so floating point is never used in the core.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "5", "-3", "3.25" or "13/4" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rat parse_rational(std::string_view text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rat& q);

/// Rounded decimal approximation with the given number of significant digits.
std::string decimal_approx(const Rat& q, int significant = 12);

/// q^e for nonnegative integer exponents, computed exactly.
Rat pow_rational(const Rat& q, unsigned exponent);

// A rational extended with +infinity; used for the per-vertex next timers.
class ExtRat {
public:
    ExtRat() = default;  // +infinity
    explicit ExtRat(Rat v) : value_(std::move(v)) {}

    static ExtRat infinity() { return ExtRat{}; }

    bool is_finite() const { return value_.has_value(); }
    const Rat& value() const { return *value_; }

    bool operator==(const ExtRat& o) const { return value_ == o.value_; }
    bool operator!=(const ExtRat& o) const { return !(*this == o); }

    // extended-real order: infinity compares greater than every rational
    bool operator<(const ExtRat& o) const {
        if (!o.is_finite()) return is_finite();
        if (!is_finite()) return false;
        return *value_ < *o.value_;
    }
    bool operator<=(const ExtRat& o) const { return !(o < *this); }

    bool less_equal(const Rat& t) const { return is_finite() && *value_ <= t; }
    bool greater(const Rat& t) const { return !less_equal(t); }

private:
    std::optional<Rat> value_;
};

/// "inf" or the canonical rational form.
std::string format_ext(const ExtRat& v);

}  // namespace mlapd
