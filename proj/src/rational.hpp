#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pickseq {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. All utilities, welfare values, MMS values and guarantee
/// ratios in this library are of this type; no floating point anywhere.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Parse "p/q", "p", or "-p/q". Throws std::invalid_argument on malformed
/// input or a non-positive denominator.
Rational parse_rational(const std::string& text);

/// "p/q" when the denominator is not 1, otherwise just "p".
std::string rational_str(const Rational& value);

inline Rational make_rational(long long num, long long den) {
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
    return Rational(BigInt(num), BigInt(den));
}

/// A rational extended with a distinguished +infinity, used for ratio
/// values where the denominator may be zero.
struct Ratio {
    bool infinite = false;
    Rational value;  // meaningful only when !infinite

    static Ratio of(const Rational& v) { return Ratio{false, v}; }
    static Ratio infinity() { return Ratio{true, Rational()}; }

    bool operator==(const Ratio& other) const {
        if (infinite != other.infinite) return false;
        return infinite || value == other.value;
    }
    bool operator<(const Ratio& other) const {
        if (infinite) return false;
        if (other.infinite) return true;
        return value < other.value;
    }
    bool operator<=(const Ratio& other) const { return *this < other || *this == other; }

    std::string str() const { return infinite ? "inf" : rational_str(value); }
};

/// ratio(a, b) with the conventions 0/0 = 1 and a/0 = +inf for a > 0.
Ratio make_ratio(const Rational& numerator, const Rational& denominator);

}  // namespace pickseq
