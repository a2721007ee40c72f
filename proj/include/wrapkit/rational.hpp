#pragma once

#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "wrapkit/errors.hpp"

namespace wrapkit {

// Arbitrary-precision integers and rationals. Rational is always stored
// reduced with a positive denominator (canonical form of cpp_rational).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int int_sign(const Int& n) { return n.sign(); }
inline int rat_sign(const Rational& q) { return q.sign(); }

// Floor of num/den for den > 0.
inline Int floor_div(const Int& num, const Int& den) {
    Int q = num / den;
    if (num % den != 0 && num.sign() < 0) --q;
    return q;
}

inline Int rat_floor(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

// Floor of the nonnegative integer square root.
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n.sign() < 0) return false;
    Int s = isqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

// The nonnegative rational square root of q, when one exists.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    Int sn, sd;
    if (!is_perfect_square(numerator(q), &sn)) return std::nullopt;
    if (!is_perfect_square(denominator(q), &sd)) return std::nullopt;
    return Rational(sn, sd);
}

// Writes n >= 0 as s^2 * f with f squarefree; trial division, adequate for
// the small radicands this library meets.
inline std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (n.sign() < 0) throw Error("squarefree_decompose: negative input");
    if (n == 0) return {Int(1), Int(0)};
    Int s = 1, f = 1, rest = n;
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) f *= p;
    }
    f *= rest;  // remaining factor appears once
    return {s, f};
}

// Exact textual form used in documents and reports: "num/den".
inline std::string rat_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// Compact form for human-facing report lines: denominator 1 is dropped.
inline std::string rat_pretty(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return rat_string(q);
}

inline double rat_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace wrapkit
