#pragma once

#include <string>

#include "renormlab/rational.hpp"

namespace renormlab {

// A certified real: the true value lies in [mid - rad, mid + rad].
// Exact values carry rad = 0. The radius is an absolute error bound.
struct CertReal {
    Rational mid;
    Rational rad;

    CertReal() : mid(0), rad(0) {}
    CertReal(Rational m, Rational r) : mid(std::move(m)), rad(std::move(r)) {
        if (rad < 0) throw std::domain_error("CertReal with negative radius");
    }
    explicit CertReal(const Rational& exact_value) : mid(exact_value), rad(0) {}

    bool exact() const { return rad == 0; }
    Rational lo() const { return Rational(mid - rad); }
    Rational hi() const { return Rational(mid + rad); }

    static CertReal hull(const Rational& lo, const Rational& hi) {
        if (lo > hi) throw std::domain_error("CertReal hull with lo > hi");
        Rational mid((lo + hi) / 2);
        Rational rad((hi - lo) / 2);
        return CertReal(std::move(mid), std::move(rad));
    }
};

inline CertReal operator+(const CertReal& a, const CertReal& b) {
    return CertReal(Rational(a.mid + b.mid), Rational(a.rad + b.rad));
}
inline CertReal operator-(const CertReal& a) { return CertReal(Rational(-a.mid), a.rad); }
inline CertReal operator-(const CertReal& a, const CertReal& b) { return a + (-b); }

inline CertReal operator*(const Rational& c, const CertReal& a) {
    return CertReal(Rational(c * a.mid), Rational(rat_abs(c) * a.rad));
}

// Interval product: exact endpoint arithmetic.
CertReal operator*(const CertReal& a, const CertReal& b);
// Interval reciprocal / quotient; the divisor enclosure must exclude 0.
CertReal recip(const CertReal& a);
inline CertReal operator/(const CertReal& a, const CertReal& b) { return a * recip(b); }
CertReal square(const CertReal& a);

enum class Cmp { LT, GT, EQ, INCONCLUSIVE };
const char* to_string(Cmp c);

// LT/GT only on disjoint enclosures; EQ only for two exact equal values.
Cmp cert_cmp(const CertReal& a, const CertReal& b);

// Smallest k >= 0 with 2^-k <= prec; prec must be positive.
int precision_bits(const Rational& prec);

// sqrt(x) for rational x >= 0. Exact (radius 0) for perfect rational
// squares, otherwise a dyadic enclosure of radius <= precision.
CertReal cert_sqrt(const Rational& x, const Rational& precision);
// Monotone extension to enclosures; the lower endpoint is clamped at 0.
CertReal cert_sqrt(const CertReal& x, const Rational& precision);

// x^e for rational x >= 0 and rational e. Exact when detectable
// (integer e, or x a perfect b-th power for e = a/b); a dyadic
// enclosure of radius <= precision otherwise. 0^0 and 0^negative fail.
CertReal cert_pow(const Rational& x, const Rational& e, const Rational& precision);
CertReal cert_pow(const CertReal& x, const Rational& e, const Rational& precision);

struct RefineSchedule {
    int start_bits = 64;
    int max_bits = 512;
};

std::string to_string(const CertReal& v);

}  // namespace renormlab
