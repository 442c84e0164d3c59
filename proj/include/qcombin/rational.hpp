#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qcombin {

/// Arbitrary-precision integers and rationals (GMP-backed).
/// Rational values are kept canonical: gcd(|num|, den) = 1, den >= 1.
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational p/q. Throws on q = 0.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, int n) {
    Rational acc(1);
    Rational term(a);
    for (int i = 0; i < n; ++i) {
        acc *= term;
        term += 1;
    }
    return acc;
}

/// Renders as "p" or "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qcombin
