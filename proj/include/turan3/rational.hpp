#ifndef TURAN3_RATIONAL_HPP
#define TURAN3_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace turan3 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
    const BigInt den = denominator_of(q);
    if (den == 1) {
        return numerator_of(q).str();
    }
    return numerator_of(q).str() + "/" + den.str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Accepts "p", "p/q" and finite decimals such as "0.196" or "-2.21119".
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
    if (text.empty()) {
        throw bad();
    }
    auto parse_int = [&](std::string_view s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start) {
            throw bad();
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw bad();
            }
        }
        BigInt v(std::string(s.substr(start)));
        return s[0] == '-' ? BigInt(-v) : v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) {
            throw bad();
        }
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string digits(text.substr(0, dot));
        std::string frac(text.substr(dot + 1));
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
            throw bad();
        }
        if (digits.empty() || digits == "-" || digits == "+") {
            digits += "0";
        }
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        BigInt whole = parse_int(digits + frac);
        return Rational(whole, scale);
    }
    return Rational(parse_int(text));
}

/// Closed rational interval [lo, hi].
struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool within(const Rational& a, const Rational& b) const { return a <= lo && hi <= b; }
};

} // namespace turan3

#endif // TURAN3_RATIONAL_HPP
