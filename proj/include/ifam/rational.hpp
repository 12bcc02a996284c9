#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ifam {

using BigInt = mpz_class;

// Arbitrary-precision rational, always canonical: reduced, denominator > 0,
// zero is 0/1. GMP keeps results canonical as long as inputs are.
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "a", "-a", "a/b"; rejects empty strings and zero denominators.
Rational parse_rational(const std::string& s);

// "a" or "a/b", matching the CLI wire format.
std::string rational_to_string(const Rational& r);

// Truncated decimal expansion with exactly `digits` fractional digits.
// Display only; never feed back into arithmetic.
std::string rational_to_decimal(const Rational& r, int digits);

inline int rational_sign(const Rational& r) { return sgn(r); }

Rational rational_pow(const Rational& base, unsigned long exp);

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline BigInt pow10(unsigned long digits) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
    return p;
}

}  // namespace ifam
