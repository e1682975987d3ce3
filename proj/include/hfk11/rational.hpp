#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace hfk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact point in the plane (or a representative of a torus point).
struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
};

inline Point scale(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

/// Sign of the orientation of the triangle (a, b, c): +1 ccw, -1 cw, 0 collinear.
inline int orient(const Point& a, const Point& b, const Point& c) {
    Rational d = cross(b - a, c - a);
    if (d > 0) return 1;
    if (d < 0) return -1;
    return 0;
}

/// Parses "p/q" or "p" into an exact rational. Throws std::invalid_argument on junk.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

/// Canonical "p/q" form with positive denominator (q kept even when 1, so output is uniform).
inline std::string rational_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline Rational frac_part(const Rational& r) {
    BigInt n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) q -= 1;  // floor
    return r - Rational(q);
}

inline BigInt floor_div(const Rational& r) {
    BigInt n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

}  // namespace hfk
