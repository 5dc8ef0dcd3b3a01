#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace schemebounds {

/// Arbitrary-precision signed integer.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Canonical form is maintained by the backend:
/// the denominator is always positive and gcd(|num|, den) = 1, so equal
/// values have identical representations.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) {
    return boost::multiprecision::numerator(r);
}

inline Integer denominator(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline int sign(const Rational& r) {
    if (r < 0) return -1;
    if (r > 0) return 1;
    return 0;
}

/// Total order on exact values.
inline std::strong_ordering compare(const Rational& a, const Rational& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// Largest integer <= r.
inline Integer floor_to_integer(const Rational& r) {
    Integer q = numerator(r) / denominator(r);  // truncates toward zero
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

/// Raised on text that does not parse as a canonical rational or integer.
class rational_parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Digit run with no leading zero ("0" itself is fine).
inline bool is_strict_digits(std::string_view s) {
    if (s.empty()) return false;
    if (s.size() > 1 && s.front() == '0') return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace detail

/*
 * Canonical rational text form, used verbatim in scheme files:
 *
 *   "a"     when the denominator is 1
 *   "a/b"   with b > 1, gcd(|a|, b) = 1, sign on the numerator only
 *
 * Integers and denominators carry no leading zeros and "-0" is invalid.
 * parse_rational rejects anything outside this grammar, including
 * unreduced fractions ("2/4"), zero denominators ("3/0") and
 * non-canonical "a/1".
 */
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&](const char* why) {
        throw rational_parse_error("bad rational \"" + std::string(text) + "\": " + why);
    };
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (den.find('/') != std::string_view::npos) bad("multiple '/'");
    }
    bool negative = false;
    if (!num.empty() && num.front() == '-') {
        negative = true;
        num.remove_prefix(1);
    }
    if (!detail::is_strict_digits(num)) bad("malformed numerator");
    if (negative && num == "0") bad("negative zero");
    Integer n{std::string(num)};
    if (negative) n = -n;
    if (den.empty()) return Rational(n);

    if (!detail::is_strict_digits(den)) bad("malformed denominator");
    if (den == "0") bad("zero denominator");
    if (den == "1") bad("non-canonical denominator 1");
    Integer d{std::string(den)};
    if (gcd(abs(n), d) != 1) bad("not in lowest terms");
    return Rational(n, d);
}

/// Inverse of parse_rational; always emits the canonical form.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (!is_integer(r)) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

/// Strict integer token; used for the "order" field of scheme files.
inline Integer parse_integer(std::string_view text) {
    Rational r = parse_rational(text);
    if (!is_integer(r)) {
        throw rational_parse_error("expected an integer, got \"" + std::string(text) + "\"");
    }
    return numerator(r);
}

inline Integer pow2(unsigned e) { return Integer(1) << e; }

}  // namespace schemebounds
