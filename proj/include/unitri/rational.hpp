#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace unitri {

// Exact arithmetic everywhere; no floating point crosses any interface.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline int sign_of(const Rational& q) { return q.sign(); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Renders integers as plain decimal and non-integers as "p/q".
inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string to_string(const Int& v) { return v.str(); }

inline Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer literal: " + s);
    }
}

/// Accepts "p/q", plain integers, and exact decimal literals such as "-1.25".
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num = parse_int(s.substr(0, slash));
        Int den = parse_int(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(parse_int(s));
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.empty()) return Rational(parse_int(head.empty() ? "0" : head));
    for (char c : frac)
        if (c < '0' || c > '9') throw std::invalid_argument("bad decimal literal: " + s);
    bool negative = !head.empty() && head[0] == '-';
    std::string digits = head;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits = digits.substr(1);
    if (digits.empty()) digits = "0";
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int value = parse_int(digits) * scale + parse_int(frac);
    if (negative) value = -value;
    return Rational(value, scale);
}

}  // namespace unitri
