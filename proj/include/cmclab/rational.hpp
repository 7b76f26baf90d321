#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "cmclab/errors.hpp"

namespace cmclab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p", "p/q" or a plain decimal like "-0.25" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParameterError("parse_rational: empty string");
    const auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            const Integer num(s.substr(0, slash));
            const Integer den(s.substr(slash + 1));
            if (den == 0) throw ParameterError("parse_rational: zero denominator");
            return Rational(num, den);
        }
        const auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(Integer(s));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const std::size_t frac_len = s.size() - dot - 1;
        Integer den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(Integer(digits), den);
    } catch (const std::runtime_error&) {
        throw ParameterError("parse_rational: cannot parse '" + s + "'");
    }
}

} // namespace cmclab
