#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace renormlab {

// Exact arbitrary-precision rationals, kept in canonical form
// (positive denominator, gcd(|num|, den) = 1) by GMP.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational ratz(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// 2^e for any integer e (negative exponents give dyadic fractions).
inline Rational pow2(long e) {
    BigInt p(1);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : ratz(1, p);
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Accepts "p/q" or "p" with optional sign; canonicalizes.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace renormlab
