#include "renormlab/certreal.hpp"

#include <algorithm>

namespace renormlab {

const char* to_string(Cmp c) {
    switch (c) {
        case Cmp::LT: return "LT";
        case Cmp::GT: return "GT";
        case Cmp::EQ: return "EQ";
        default: return "INCONCLUSIVE";
    }
}

CertReal operator*(const CertReal& a, const CertReal& b) {
    if (a.exact() && b.exact()) return CertReal(Rational(a.mid * b.mid));
    Rational c1(a.lo() * b.lo()), c2(a.lo() * b.hi()), c3(a.hi() * b.lo()), c4(a.hi() * b.hi());
    Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return CertReal::hull(lo, hi);
}

CertReal recip(const CertReal& a) {
    if (a.lo() <= 0 && a.hi() >= 0) throw std::domain_error("reciprocal of enclosure containing 0");
    if (a.exact()) return CertReal(Rational(1 / a.mid));
    return CertReal::hull(Rational(1 / a.hi()), Rational(1 / a.lo()));
}

CertReal square(const CertReal& a) {
    if (a.exact()) return CertReal(Rational(a.mid * a.mid));
    Rational alo = a.lo(), ahi = a.hi();
    Rational s1(alo * alo), s2(ahi * ahi);
    Rational hi = std::max(s1, s2);
    Rational lo = (alo <= 0 && ahi >= 0) ? Rational(0) : std::min(s1, s2);
    return CertReal::hull(lo, hi);
}

Cmp cert_cmp(const CertReal& a, const CertReal& b) {
    if (a.hi() < b.lo()) return Cmp::LT;
    if (b.hi() < a.lo()) return Cmp::GT;
    if (a.exact() && b.exact() && a.mid == b.mid) return Cmp::EQ;
    return Cmp::INCONCLUSIVE;
}

int precision_bits(const Rational& prec) {
    if (prec <= 0) throw std::domain_error("precision must be positive");
    int k = 0;
    Rational p(1);
    while (p > prec) {
        p /= 2;
        ++k;
        if (k > 1 << 20) throw std::domain_error("precision too small");
    }
    return k;
}

namespace {

bool perfect_square(const BigInt& z, BigInt& root) {
    if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
    return true;
}

CertReal dyadic_enclosure(const BigInt& floor_scaled, int t) {
    // true value in [m, m+1] / 2^t
    BigInt two_m_plus_1 = 2 * floor_scaled + 1;
    BigInt den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(t + 1));
    return CertReal(ratz(two_m_plus_1, den), ratz(1, den));
}

}  // namespace

CertReal cert_sqrt(const Rational& x, const Rational& precision) {
    if (x < 0) throw std::domain_error("cert_sqrt: negative input");
    if (x == 0) return CertReal(Rational(0));
    const BigInt num = x.get_num();
    const BigInt den = x.get_den();
    BigInt rn, rd;
    if (perfect_square(num, rn) && perfect_square(den, rd)) return CertReal(ratz(rn, rd));

    int t = precision_bits(precision);
    // floor(sqrt(x) * 2^t) = floor(sqrt(floor(x * 4^t))) for integer grids
    BigInt scaled = num;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * t));
    BigInt big_floor = scaled / den;
    BigInt m;
    mpz_sqrt(m.get_mpz_t(), big_floor.get_mpz_t());
    return dyadic_enclosure(m, t);
}

CertReal cert_sqrt(const CertReal& x, const Rational& precision) {
    if (x.exact()) return cert_sqrt(x.mid, precision);
    Rational lo = std::max(Rational(0), x.lo());
    if (x.hi() < 0) throw std::domain_error("cert_sqrt: negative enclosure");
    CertReal slo = cert_sqrt(lo, precision);
    CertReal shi = cert_sqrt(Rational(x.hi()), precision);
    return CertReal::hull(slo.lo(), shi.hi());
}

namespace {

// Exact q^e for integer exponent e (|e| bounded by practicality).
Rational rational_int_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    bool neg = e < 0;
    unsigned long a = static_cast<unsigned long>(neg ? -e : e);
    BigInt pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), q.get_num_mpz_t(), a);
    mpz_pow_ui(pd.get_mpz_t(), q.get_den_mpz_t(), a);
    return neg ? ratz(pd, pn) : ratz(pn, pd);
}

}  // namespace

CertReal cert_pow(const Rational& x, const Rational& e, const Rational& precision) {
    if (x < 0) throw std::domain_error("cert_pow: negative base");
    if (x == 0) {
        if (e <= 0) throw std::domain_error("cert_pow: 0^e with e <= 0");
        return CertReal(Rational(0));
    }
    if (e == 0 || x == 1) return CertReal(Rational(1));
    if (!e.get_num().fits_slong_p() || !e.get_den().fits_slong_p())
        throw std::domain_error("cert_pow: exponent out of supported range");
    long a = e.get_num().get_si();
    long b = e.get_den().get_si();
    if (is_integer(e)) return CertReal(rational_int_pow(x, a));

    Rational base = a < 0 ? Rational(1 / x) : x;
    unsigned long aa = static_cast<unsigned long>(a < 0 ? -a : a);

    // perfect b-th power of the base gives an exact value
    BigInt rn, rd;
    int en = mpz_root(rn.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(b));
    int ed = mpz_root(rd.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(b));
    if (en != 0 && ed != 0) return CertReal(rational_int_pow(ratz(rn, rd), static_cast<long>(aa)));

    // enclose (base^a)^(1/b) on a dyadic grid:
    // floor(y^(1/b) * 2^t) = floor(floor(y * 2^(b t))^(1/b))
    Rational y = rational_int_pow(base, static_cast<long>(aa));
    int t = precision_bits(precision);
    BigInt scaled = y.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(static_cast<unsigned long>(b) * static_cast<unsigned long>(t)));
    BigInt big_floor = scaled / y.get_den();
    BigInt m;
    mpz_root(m.get_mpz_t(), big_floor.get_mpz_t(), static_cast<unsigned long>(b));
    return dyadic_enclosure(m, t);
}

CertReal cert_pow(const CertReal& x, const Rational& e, const Rational& precision) {
    if (x.exact()) return cert_pow(x.mid, e, precision);
    Rational lo = std::max(Rational(0), x.lo());
    Rational hi = x.hi();
    if (hi < 0) throw std::domain_error("cert_pow: negative enclosure");
    if (e > 0) {
        CertReal plo = cert_pow(lo, e, precision);
        CertReal phi = cert_pow(hi, e, precision);
        return CertReal::hull(plo.lo(), phi.hi());
    }
    if (lo == 0) throw std::domain_error("cert_pow: nonpositive exponent on enclosure touching 0");
    CertReal plo = cert_pow(hi, e, precision);
    CertReal phi = cert_pow(lo, e, precision);
    return CertReal::hull(plo.lo(), phi.hi());
}

std::string to_string(const CertReal& v) {
    if (v.exact()) return to_string(v.mid);
    return to_string(v.mid) + " +- " + to_string(v.rad);
}

}  // namespace renormlab
