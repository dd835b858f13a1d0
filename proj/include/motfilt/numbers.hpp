#pragma once

// Exact arithmetic aliases shared by every module.  All lattice and order
// computations run over GMP-backed integers/rationals; floating point only
// appears in explicitly numerical checks (root magnitudes, rendering).

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace homalg {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int ipow(const Int& base, unsigned long e) {
    return boost::multiprecision::pow(base, e);
}

// x^e for possibly negative e; requires x != 0 when e < 0.
inline Rat rpow(const Rat& x, long e) {
    if (e >= 0) {
        Rat r = 1;
        for (long k = 0; k < e; ++k) r *= x;
        return r;
    }
    if (x == 0) throw std::domain_error("rpow: zero base with negative exponent");
    Rat r = 1;
    for (long k = 0; k < -e; ++k) r /= x;
    return r;
}

inline Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

// Canonical rendering: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

// Trial division; fine at the scales this library works at.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// q = p^k with p prime, k >= 1; fills p and k on success.
inline bool is_prime_power(const Int& q, Int& p, unsigned& k) {
    if (q < 2) return false;
    Int m = q;
    for (Int d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            p = d;
            k = 0;
            while (m % d == 0) {
                m /= d;
                ++k;
            }
            return m == 1;
        }
    p = q;
    k = 1;
    return true;
}

} // namespace homalg
