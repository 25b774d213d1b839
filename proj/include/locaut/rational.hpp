#ifndef LOCAUT_RATIONAL_HPP
#define LOCAUT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace locaut {

// Exact rational scalar. cpp_rational keeps the canonical form we rely on:
// reduced fraction, positive denominator, decidable equality.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Serializes as "p/q", or just "p" when q = 1. Sign lives on the numerator.
inline std::string to_string(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1)
        s += "/" + den(r).str();
    return s;
}

/// Parses "p" or "p/q". Rejects zero denominators and malformed input.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&](const char* why) {
        return std::invalid_argument("bad rational \"" + text + "\": " + why);
    };
    auto slash = text.find('/');
    std::string ns = text.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (ns.empty() || ds.empty())
        throw bad("empty numerator or denominator");
    auto is_int = [](const std::string& s) {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    if (!is_int(ns) || !is_int(ds))
        throw bad("not an integer fraction");
    Integer n(ns), d(ds);
    if (d == 0)
        throw bad("zero denominator");
    return Rational(n, d);
}

} // namespace locaut

#endif
