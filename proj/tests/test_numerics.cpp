#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "renormlab/certreal.hpp"
#include "renormlab/renormkit.hpp"

using namespace renormlab;

namespace {

// Independent oracle: bisection enclosure of sqrt(x), refined while the
// endpoint squares straddle x. Never touches the integer-sqrt path the
// implementation uses.
std::pair<Rational, Rational> bisect_sqrt(const Rational& x, const Rational& width) {
    Rational lo(0);
    Rational hi = x < 1 ? Rational(1) : Rational(x);
    while (hi - lo > width) {
        Rational mid((lo + hi) / 2);
        if (mid * mid <= x) lo = mid;
        else hi = mid;
    }
    return {lo, hi};
}

// bisection enclosure of x^(1/b) for integer b >= 1
std::pair<Rational, Rational> bisect_root(const Rational& x, int b, const Rational& width) {
    Rational lo(0);
    Rational hi = x < 1 ? Rational(1) : Rational(x);
    auto pow_int = [](Rational base, int e) {
        Rational r(1);
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };
    while (hi - lo > width) {
        Rational mid((lo + hi) / 2);
        if (pow_int(mid, b) <= x) lo = mid;
        else hi = mid;
    }
    return {lo, hi};
}

}  // namespace

TEST_CASE("perfect squares are exact") {
    CertReal r = cert_sqrt(rat(9, 4), pow2(-64));
    CHECK(r.exact());
    CHECK(r.mid == rat(3, 2));
    CertReal z = cert_sqrt(Rational(0), pow2(-64));
    CHECK(z.exact());
    CHECK(z.mid == 0);
}

TEST_CASE("negative input is a domain error") {
    CHECK_THROWS_AS(cert_sqrt(rat(-1), pow2(-10)), std::domain_error);
}

TEST_CASE("sqrt(2) enclosure matches the bisection oracle") {
    Rational p = pow2(-40);
    CertReal r = cert_sqrt(rat(2), p);
    CHECK(r.rad <= p);
    CHECK(r.rad > 0);
    CHECK(r.lo() * r.lo() <= 2);
    CHECK(r.hi() * r.hi() >= 2);
    auto [olo, ohi] = bisect_sqrt(rat(2), pow2(-44));
    CHECK(r.lo() <= ohi);
    CHECK(r.hi() >= olo);
}

TEST_CASE("sqrt of rational squares is exact with midpoint q*r") {
    Sampler s(7);
    for (int t = 0; t < 200; ++t) {
        Rational q = s.rational(20, 50);
        Rational r = s.rational(20, 50);
        CertReal v = cert_sqrt(Rational(q * q * r * r), pow2(-64));
        CHECK(v.exact());
        CHECK(v.mid == rat_abs(Rational(q * r)));
    }
}

TEST_CASE("enclosure soundness on random inputs") {
    Sampler s(11);
    Rational p = pow2(-40);
    for (int t = 0; t < 1000; ++t) {
        Rational x = rat_abs(s.rational(50, 64));
        CertReal v = cert_sqrt(x, p);
        Rational lo = v.lo(), hi = v.hi();
        CHECK(lo * lo <= x);
        CHECK(hi * hi >= x);
        CHECK(hi * hi - lo * lo <= 3 * p * (1 + x));
    }
}

TEST_CASE("refinement nests enclosures") {
    Sampler s(13);
    for (int t = 0; t < 100; ++t) {
        Rational x = rat_abs(s.nonzero_rational(30, 64));
        CertReal coarse = cert_sqrt(x, pow2(-20));
        CertReal fine = cert_sqrt(x, pow2(-60));
        CHECK(fine.lo() >= coarse.lo());
        CHECK(fine.hi() <= coarse.hi());
    }
}

TEST_CASE("cert_cmp basics") {
    CHECK(cert_cmp(CertReal(rat(3, 2)), CertReal(rat(3, 2))) == Cmp::EQ);
    CHECK(cert_cmp(cert_sqrt(rat(2), pow2(-20)), CertReal(rat(3, 2))) == Cmp::LT);
    CertReal fuzz{Rational(1), rat(1, 10)};
    CHECK(cert_cmp(fuzz, fuzz) == Cmp::INCONCLUSIVE);
    // touching enclosures are not disjoint
    CHECK(cert_cmp(CertReal{Rational(1), Rational(1)}, CertReal{Rational(3), Rational(1)}) ==
          Cmp::INCONCLUSIVE);
}

TEST_CASE("cert_cmp is antisymmetric and stable under refinement") {
    Sampler s(17);
    for (int t = 0; t < 300; ++t) {
        Rational x = rat_abs(s.nonzero_rational());
        Rational y = rat_abs(s.nonzero_rational());
        Cmp coarse = cert_cmp(cert_sqrt(x, pow2(-16)), cert_sqrt(y, pow2(-16)));
        Cmp rev = cert_cmp(cert_sqrt(y, pow2(-16)), cert_sqrt(x, pow2(-16)));
        if (coarse == Cmp::LT) CHECK(rev == Cmp::GT);
        if (coarse == Cmp::GT) CHECK(rev == Cmp::LT);
        Cmp fine = cert_cmp(cert_sqrt(x, pow2(-80)), cert_sqrt(y, pow2(-80)));
        if (coarse == Cmp::LT) CHECK(fine == Cmp::LT);
        if (coarse == Cmp::GT) CHECK(fine == Cmp::GT);
    }
}

TEST_CASE("cert_pow exact cases") {
    CertReal cube = cert_pow(rat(8), rat(1, 3), pow2(-64));
    CHECK(cube.exact());
    CHECK(cube.mid == 2);
    Sampler s(19);
    for (int t = 0; t < 50; ++t) {
        Rational x = rat_abs(s.rational());
        CertReal ident = cert_pow(x, rat(1), pow2(-64));
        CHECK(ident.exact());
        CHECK(ident.mid == x);
    }
    CertReal isq = cert_pow(rat(4), rat(-1, 2), pow2(-64));
    CHECK(isq.exact());
    CHECK(isq.mid == rat(1, 2));
    CertReal sq = cert_pow(rat(2, 3), rat(2), pow2(-64));
    CHECK(sq.exact());
    CHECK(sq.mid == rat(4, 9));
}

TEST_CASE("cert_pow domain errors") {
    CHECK_THROWS_AS(cert_pow(Rational(0), Rational(0), pow2(-10)), std::domain_error);
    CHECK_THROWS_AS(cert_pow(Rational(0), rat(-1), pow2(-10)), std::domain_error);
    CHECK_THROWS_AS(cert_pow(rat(-2), rat(1, 2), pow2(-10)), std::domain_error);
}

TEST_CASE("cert_pow(2, 3/2) agrees with the sqrt-composition oracle") {
    Rational p = pow2(-30);
    CertReal v = cert_pow(rat(2), rat(3, 2), p);
    CHECK(v.rad <= p);
    // 2^(3/2) = sqrt(8)
    auto [olo, ohi] = bisect_sqrt(rat(8), pow2(-40));
    CHECK(v.lo() <= ohi);
    CHECK(v.hi() >= olo);
}

TEST_CASE("cert_pow enclosures against the root bisection oracle") {
    Sampler s(23);
    for (int t = 0; t < 60; ++t) {
        Rational x = rat_abs(s.nonzero_rational(9, 12));
        long b = s.int_in(2, 5);
        long a = s.int_in(1, 4);
        Rational e = rat(a, b);
        if (is_integer(e)) continue;
        CertReal v = cert_pow(x, e, pow2(-40));
        long ac = e.get_num().get_si();
        long bc = e.get_den().get_si();
        Rational xa(1);
        for (long i = 0; i < ac; ++i) xa *= x;
        auto [olo, ohi] = bisect_root(xa, static_cast<int>(bc), pow2(-50));
        CHECK(v.lo() <= ohi);
        CHECK(v.hi() >= olo);
    }
}

TEST_CASE("interval arithmetic is endpoint-exact") {
    CertReal a{rat(3), rat(1, 2)};   // [5/2, 7/2]
    CertReal b{rat(-2), rat(1, 4)};  // [-9/4, -7/4]
    CertReal prod = a * b;
    CHECK(prod.lo() == rat(-63, 8));
    CHECK(prod.hi() == rat(-35, 8));
    CertReal rec = recip(b);
    CHECK(rec.lo() == rat(-4, 7));
    CHECK(rec.hi() == rat(-4, 9));
    CertReal sq = square(CertReal{Rational(0), Rational(1)});
    CHECK(sq.lo() == 0);
    CHECK(sq.hi() == 1);
    CHECK_THROWS_AS(recip(CertReal{Rational(0), Rational(1)}), std::domain_error);
}

TEST_CASE("interval sqrt and pow are monotone hulls") {
    CertReal x{rat(2), rat(1, 4)};  // [7/4, 9/4]
    CertReal r = cert_sqrt(x, pow2(-40));
    CHECK(r.lo() * r.lo() <= rat(7, 4));
    CHECK(r.hi() * r.hi() >= rat(9, 4));
    CertReal pw = cert_pow(x, rat(3, 2), pow2(-40));
    CHECK(pw.lo() <= cert_pow(rat(7, 4), rat(3, 2), pow2(-60)).hi());
    CHECK(pw.hi() >= cert_pow(rat(9, 4), rat(3, 2), pow2(-60)).lo());
}

TEST_CASE("precision_bits") {
    CHECK(precision_bits(Rational(1)) == 0);
    CHECK(precision_bits(rat(1, 2)) == 1);
    CHECK(precision_bits(rat(1, 3)) == 2);
    CHECK(precision_bits(pow2(-64)) == 64);
    CHECK_THROWS_AS(precision_bits(Rational(0)), std::domain_error);
}
