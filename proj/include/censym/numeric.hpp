#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace censym {

/// Exact arbitrary-precision integer. No floating point is used anywhere in
/// this library.
using Int = boost::multiprecision::cpp_int;
/// Exact rational, used for certificates, facet normals and solves.
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Int& a) { return a.sign(); }

/// Floor division (quotient rounded toward -infinity). Requires b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/// Euclidean remainder in [0, |b|).
inline Int floor_mod(const Int& a, const Int& b) {
    Int r = a - floor_div(a, b) * b;
    return r;
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs_int(a / gcd_int(a, b) * b);
}

}  // namespace censym
