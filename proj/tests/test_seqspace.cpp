#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "renormlab/instances.hpp"
#include "renormlab/seqspace.hpp"

using namespace renormlab;

TEST_CASE("CSeq canonical form and arithmetic") {
    CSeq x({Rational(1), Rational(2), Rational(2)}, Rational(2));
    CHECK(x.prefix_len() == 1);  // trailing entries equal to the tail are trimmed
    CHECK(x.at(1) == 1);
    CHECK(x.at(5) == 2);
    CHECK(CSeq::constant(Rational(3)).prefix_len() == 0);
    CSeq sum = x + CSeq::basis(3);
    CHECK(sum.at(3) == 3);
    CHECK(sum.tail() == 2);
    CHECK((rat(1, 2) * CSeq::constant(Rational(4))) == CSeq::constant(Rational(2)));
}

TEST_CASE("sup_norm") {
    CHECK(sup_norm(CSeq({rat(3), rat(-1)}, Rational(1))) == 3);
    CHECK(sup_norm(CSeq()) == 0);
    CHECK(sup_norm(CSeq({rat(1, 2)}, rat(-2))) == 2);
}

TEST_CASE("signed permutation action") {
    // transposition of the first two coordinates
    IsoCElem swap12 = IsoCElem::transposition(1, 2);
    CSeq x({rat(5), rat(7)}, Rational(0));
    CHECK(act_c(swap12, x) == CSeq({rat(7), rat(5)}, Rational(0)));

    // sign flip at position 1 with tail sign +1 on the constant sequence
    IsoCElem flip1({}, {1}, 1);
    CHECK(act_c(flip1, CSeq::constant(Rational(1))) == CSeq({Rational(-1)}, Rational(1)));

    CHECK(act_c(IsoCElem(), x) == x);
}

TEST_CASE("IsoCElem group structure") {
    Sampler s(5);
    for (int t = 0; t < 100; ++t) {
        IsoCElem g = sample_signed_perm(s, 8);
        IsoCElem h = sample_signed_perm(s, 8);
        CSeq x = sample_c(s, 8);
        CHECK(act_c(g.compose(h), x) == act_c(g, act_c(h, x)));
        CHECK(act_c(g.compose(g.inverse()), x) == x);
        CHECK(act_c(g.inverse().compose(g), x) == x);
        CHECK(sup_norm(act_c(g, x)) == sup_norm(x));
    }
}

TEST_CASE("sorted norm examples") {
    CHECK(cert_cmp(sorted_sc_norm(CSeq(), pow2(-64)), CertReal(Rational(0))) == Cmp::EQ);
    CHECK(cert_cmp(sorted_sc_norm(CSeq::basis(1), pow2(-64)), CertReal(rat(3, 2))) == Cmp::EQ);
    CSeq x({Rational(1), Rational(1)}, Rational(0));
    CHECK(sorted_radicand(x) == rat(5, 16));
    CHECK_THROWS_AS(sorted_sc_norm(CSeq::constant(Rational(1)), pow2(-64)), std::domain_error);
}

TEST_CASE("sorted norm invariance and rearrangement dominance") {
    Sampler s(9);
    for (int t = 0; t < 300; ++t) {
        CSeq x = sample_c0(s, 10);
        IsoCElem g = sample_signed_perm(s, 10);
        CSeq gx = act_c(g, x);
        CHECK(sorted_radicand(gx) == sorted_radicand(x));
        CHECK(sup_norm(gx) == sup_norm(x));
        CHECK(positional_radicand(gx) <= sorted_radicand(x));
        CSeq best = act_c(sorting_permutation(x), x);
        CHECK(positional_radicand(best) == sorted_radicand(x));
        // the rearranged sequence really is decreasing in absolute value
        for (int i = 1; i < best.prefix_len(); ++i)
            CHECK(rat_abs(best.at(i)) >= rat_abs(best.at(i + 1)));
    }
}

TEST_CASE("equivalence constants of the sorted norm") {
    Sampler s(21);
    for (int t = 0; t < 200; ++t) {
        CSeq x = sample_c0(s, 12);
        Rational sup = sup_norm(x);
        CHECK(sorted_radicand(x) * 3 <= sup * sup);  // radicand <= sup²/3, sharp
    }
}

TEST_CASE("c renorm examples and fingerprint") {
    CHECK(cert_cmp(c_renorm(CSeq(), pow2(-64)), CertReal(Rational(0))) == Cmp::EQ);
    CHECK(cert_cmp(c_renorm(CSeq::constant(Rational(1)), pow2(-64)), CertReal(rat(2))) == Cmp::EQ);
    CHECK(cert_cmp(c_renorm(CSeq::basis(1), pow2(-64)), CertReal(rat(5, 2))) == Cmp::EQ);
    IsoCElem flip1({}, {1}, 1);
    CSeq gone = act_c(flip1, CSeq::constant(Rational(1)));
    CHECK(c_renorm_fingerprint(gone) ==
          std::vector<Rational>{Rational(1), Rational(2), Rational(1), Rational(1)});
    CertReal v = c_renorm(gone, pow2(-64));
    CHECK(v.rad <= pow2(-64));
    // 1 + sqrt(10) lies inside the enclosure: check by squaring (v - 1)
    CertReal shifted = v - CertReal(Rational(1));
    CHECK(shifted.lo() * shifted.lo() <= 10);
    CHECK(shifted.hi() * shifted.hi() >= 10);
}

TEST_CASE("block vectors and sum isometries") {
    BlockVec v({{0, {rat(1)}}, {0, {rat(2)}}}, Ambient::C0Sum);
    CHECK(c0sum_max_sq(v) == 4);
    CHECK(c0sum_radicand(v) == rat(17, 16));

    BlockVec mixed({{0, {Rational(0)}}, {1, {rat(3), rat(4)}}}, Ambient::C0Sum);
    CHECK(cert_cmp(c0sum_sorted_norm(mixed, pow2(-64)), CertReal(rat(25, 4))) == Cmp::EQ);

    BlockVec r2({{0, {rat(3)}}, {0, {rat(4)}}}, Ambient::L1Sum);
    CHECK(cert_cmp(l1sum_sc_norm(r2, pow2(-64)), CertReal(rat(12))) == Cmp::EQ);

    CHECK_THROWS_AS(c0sum_radicand(r2), std::domain_error);
    CHECK_THROWS_AS(BlockVec({{0, {rat(1)}}, {0, {rat(1), rat(2)}}}, Ambient::C0Sum),
                    std::invalid_argument);
    CHECK_THROWS_AS(BlockIso({0}, {{{rat(1), rat(1)}, {rat(0), rat(1)}}}), std::invalid_argument);
}

TEST_CASE("block action preserves block squares and the two norms") {
    Sampler s(33);
    BlockShape shape{{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}};
    for (int t = 0; t < 100; ++t) {
        BlockVec x = sample_blockvec(s, shape, Ambient::C0Sum);
        BlockIso g = sample_blockiso(s, shape);
        BlockVec gx = act_blocks(g, x);
        CHECK(c0sum_max_sq(gx) == c0sum_max_sq(x));
        CHECK(c0sum_radicand(gx) == c0sum_radicand(x));
        BlockVec y = sample_blockvec(s, shape, Ambient::L1Sum);
        BlockVec gy = act_blocks(sample_blockiso(s, shape), y);
        CHECK(l1sum_fingerprint(gy) == l1sum_fingerprint(y));
        CHECK(act_blocks(g, act_blocks(g.inverse(), x)) == x);
    }
}

TEST_CASE("pair space norm and action") {
    IsoCElem flip({}, {}, -1);
    CZeroPlusR z{CSeq::basis(2), rat(3)};
    CZeroPlusR fz = act_pair(flip, z);
    CHECK(fz.t == -3);
    CHECK(cert_cmp(pair_norm(z, pow2(-64)), pair_norm(fz, pow2(-64))) != Cmp::LT);
    // (e2, 0): pair norm equals the sorted norm of e2 = 1 + 1/2... squared check
    CZeroPlusR just_u{CSeq::basis(1), Rational(0)};
    CHECK(cert_cmp(pair_norm(just_u, pow2(-64)), CertReal(rat(3, 2))) == Cmp::EQ);
    CZeroPlusR just_t{CSeq(), rat(-5, 2)};
    CHECK(cert_cmp(pair_norm(just_t, pow2(-64)), CertReal(rat(5, 2))) == Cmp::EQ);
}
