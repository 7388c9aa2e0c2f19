#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "renormlab/cantorspace.hpp"
#include "renormlab/instances.hpp"

using namespace renormlab;

TEST_CASE("point evaluation on the subshift") {
    XPoint m = XPoint::marker(1, 0);
    CHECK(x_eval(m, 0) == 0);
    CHECK(x_eval(m, 3) == 1);
    CHECK(x_eval(m, -2) == -1);
    CHECK(x_eval(XPoint::constant(2), 17) == 2);
    CHECK(x_eval(XPoint::marker(2, 5), 5) == 0);
    CHECK_THROWS_AS(XPoint::marker(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(XPoint::constant(0), std::invalid_argument);
}

TEST_CASE("shift semantics") {
    CHECK(shift(XPoint::marker(1, 0), 1) == XPoint::marker(1, 1));
    CHECK(shift(XPoint::constant(-1), 5) == XPoint::constant(-1));
    XPoint x = XPoint::marker(2, -3);
    CHECK(shift(shift(x, 1), -1) == x);
    // σ(x)(n) = x(n-1) across a window
    for (long n = -4; n <= 4; ++n) CHECK(x_eval(shift(x, 1), n) == x_eval(x, n - 1));
}

TEST_CASE("classification matches the pattern table") {
    CHECK(classify(XPoint::marker(1, 0)) == XClass::B);
    CHECK(classify(XPoint::marker(2, 0)) == XClass::C);
    CHECK(classify(XPoint::constant(-1)) == XClass::D);
    CHECK(classify(XPoint::marker(2, 1)) == XClass::E);
    CHECK(classify(XPoint::marker(1, -7)) == XClass::A);
    CHECK(classify(XPoint::marker(1, 3)) == XClass::D);
    CHECK(classify(XPoint::constant(1)) == XClass::A);
    CHECK(classify(XPoint::constant(-2)) == XClass::E);
}

TEST_CASE("swap map is the involution exchanging the two zero markers") {
    CHECK(swap_map(XPoint::marker(1, 0)) == XPoint::marker(2, 0));
    CHECK(swap_map(XPoint::marker(2, 0)) == XPoint::marker(1, 0));
    CHECK(swap_map(XPoint::constant(1)) == XPoint::constant(1));
    CHECK(swap_map(XPoint::marker(1, 3)) == XPoint::marker(1, 3));
    for (long n = -5; n <= 5; ++n) {
        XPoint x = XPoint::marker(1, n);
        CHECK(swap_map(swap_map(x)) == x);
    }
}

TEST_CASE("partition function evaluation") {
    PartFn f = obstruction_f();
    CHECK(eval_partition_fn(f, XPoint::marker(1, 0)) == 1);       // B
    CHECK(eval_partition_fn(f, XPoint::constant(2)) == rat(1, 2));  // A
    CHECK(eval_partition_fn(f, XPoint::marker(2, 1)) == 0);       // E
}

TEST_CASE("XFn is closed under the action and linear structure") {
    XFn f = XFn::from_partition(obstruction_f());
    XFn fp = XFn::from_partition(obstruction_f_prime());
    Sampler s(3);
    std::vector<XPoint> probes;
    for (int k = 1; k <= 2; ++k)
        for (long n = -6; n <= 6; ++n) probes.push_back(XPoint::marker(k, n));
    for (int v : {-2, -1, 1, 2}) probes.push_back(XPoint::constant(v));

    for (const XPoint& x : probes) {
        CHECK(f.eval(x) == eval_partition_fn(obstruction_f(), x));
        CHECK(f.shift_pullback(1).eval(x) == f.eval(shift(x, -1)));
        CHECK(f.shift_pullback(-2).eval(x) == f.eval(shift(x, 2)));
        CHECK(f.swap_pullback().eval(x) == f.eval(swap_map(x)));
        CHECK((f + fp).eval(x) == f.eval(x) + fp.eval(x));
        CHECK((rat(1, 3) * f).eval(x) == rat(1, 3) * f.eval(x));
    }
    CHECK(f.swap_pullback() == fp);
    CHECK(f.shift_pullback(1) == rat(1, 2) * (f + fp));
    CHECK(f.shift_pullback(1).shift_pullback(-1) == f);
    CHECK(f != fp);
}

TEST_CASE("verify_cover_identities passes both routes") {
    CoverReport rep = verify_cover_identities(8);
    CHECK(rep.all_pass());
    for (const auto& c : rep.checks) {
        CHECK(c.exhaustive_pass);
        CHECK(c.symbolic_pass);
    }
    CHECK_THROWS_AS(verify_cover_identities(1), std::invalid_argument);
}

TEST_CASE("mutated partition fails with a witness") {
    CoverReport rep = verify_cover_identities_with(mutated_classifier(), 8);
    CHECK(!rep.all_pass());
    bool witnessed = false;
    for (const auto& c : rep.checks) witnessed = witnessed || !c.witness.empty();
    CHECK(witnessed);
}

TEST_CASE("cylinder functions") {
    CylFn half = CylFn::cylinder({0});
    CHECK(half.sup() == 1);
    CHECK(half.l2_sq() == rat(1, 2));
    CHECK(odometer_act(half) == CylFn::cylinder({1}));
    CHECK(odometer_act(CylFn::cylinder({1, 0})) == CylFn::cylinder({0, 1}));
    CHECK(odometer_act(CylFn::constant(rat(5, 7))) == CylFn::constant(rat(5, 7)));
    // canonical reduction: a table ignoring its last coordinate drops depth
    CylFn redundant(2, {rat(1), rat(2), rat(1), rat(2)});
    CHECK(redundant.depth() == 1);
    CHECK(cert_cmp(odometer_sc_norm(CylFn::constant(Rational(1)), pow2(-64)), CertReal(rat(2))) ==
          Cmp::EQ);
    CHECK(cert_cmp(odometer_sc_norm(CylFn(), pow2(-64)), CertReal(Rational(0))) == Cmp::EQ);
}

TEST_CASE("odometer invariance is radicand-exact up to depth 10") {
    Sampler s(7);
    for (int t = 0; t < 200; ++t) {
        CylFn f = sample_cylfn(s, 10);
        long p = s.int_in(1, 1L << std::max(1, f.depth()));
        CylFn g = odometer_act_pow(f, p);
        CHECK(g.sup() == f.sup());
        CHECK(g.l2_sq() == f.l2_sq());
    }
    // the act is a bijection: one full period returns the table
    CylFn probe = sample_cylfn(s, 4);
    long period = 1L << probe.depth();
    CHECK(odometer_act_pow(probe, period) == probe);
    CylFn back = odometer_act_pow(odometer_act(probe), -1);
    CHECK(back == probe);
}

TEST_CASE("subshift certificate validates and rejects corruptions") {
    ObstructionCertificate<XFn> cert = subshift_certificate();
    CHECK(check_obstruction(cert).valid);

    ObstructionCertificate<XFn> same = cert;
    same.y = same.x;
    CHECK(!check_obstruction(same).valid);
    CHECK(check_obstruction(same).reason == "x = y");

    ObstructionCertificate<XFn> twice = cert;
    twice.h_word = GenWord::generator(0) * GenWord::generator(0);
    CHECK(!check_obstruction(twice).valid);
    CHECK(check_obstruction(twice).reason == "h·x != (x+y)/2");
}
