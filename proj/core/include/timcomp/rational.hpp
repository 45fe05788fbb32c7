#ifndef TIMCOMP_RATIONAL_HPP
#define TIMCOMP_RATIONAL_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace timcomp {

/**
 * Exact rational number used for every DoF value and all LP arithmetic.
 * cpp_rational keeps the value reduced to lowest terms with a positive
 * denominator, which is exactly the canonical form the rest of the
 * library relies on.
 */
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p" (integral) or "p/q" (otherwise), never decimal.
inline std::string to_fraction(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

/// Parses "p" or "p/q" back into a Rational. Throws std::invalid_argument
/// on malformed input or a zero denominator.
inline Rational parse_fraction(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("not a fraction: '" + std::string(text) + "'");
    };
    const auto parse_int = [&](std::string_view part) {
        if (part.empty()) throw bad();
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw bad();
        for (std::size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') throw bad();
        }
        return boost::multiprecision::cpp_int(std::string(part));
    };
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    boost::multiprecision::cpp_int num = parse_int(text.substr(0, slash));
    boost::multiprecision::cpp_int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
}

}  // namespace timcomp

#endif  // TIMCOMP_RATIONAL_HPP
