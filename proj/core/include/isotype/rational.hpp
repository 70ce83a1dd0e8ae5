#pragma once

#include <gmpxx.h>

#include <string>

namespace isotype {

// Exact rational arithmetic everywhere; no floating point in any core module.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical literal: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

inline bool is_integral(const Rational& q) {
    return q.get_den() == 1;
}

}  // namespace isotype
