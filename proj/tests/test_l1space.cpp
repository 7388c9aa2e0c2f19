#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "renormlab/instances.hpp"
#include "renormlab/l1space.hpp"

using namespace renormlab;

TEST_CASE("step function basics") {
    StepFn f = StepFn::indicator(Rational(0), rat(1, 3));
    CHECK(l1_norm(f) == rat(1, 3));
    CHECK(l1_norm(rat(1, 2) * StepFn::indicator(Rational(0), rat(2, 3))) == rat(1, 3));
    StepFn mixed({Rational(0), rat(1, 2), Rational(1)}, {rat(1), rat(-2)});
    CHECK(l1_norm(mixed) == rat(3, 2));
    CHECK(mixed.integral() == rat(-1, 2));
    CHECK(mixed.at(rat(3, 4)) == -2);
    CHECK(mixed.abs().nonnegative());
    CHECK(StepFn().is_zero());
    // canonical form merges equal neighbours
    StepFn merged({Rational(0), rat(1, 2), Rational(1)}, {rat(1), rat(1)});
    CHECK(merged == StepFn::constant(Rational(1)));
    CHECK(f.support_end() == rat(1, 3));
}

TEST_CASE("step function json round trip") {
    Sampler s(3);
    for (int t = 0; t < 50; ++t) {
        StepFn f = sample_step(s, 8);
        CHECK(stepfn_from_json(to_json(f)) == f);
    }
    StepFn f = stepfn_from_json(nlohmann::json::parse(
        R"({"breakpoints": ["0","1/3","1"], "values": ["1","0"]})"));
    CHECK(f == StepFn::indicator(Rational(0), rat(1, 3)));
}

TEST_CASE("interval map validation and composition") {
    CHECK_THROWS_AS(IntervalMap({MapPiece{Rational(0), rat(1, 2), Rational(0), Rational(1), 1}}),
                    std::invalid_argument);
    IntervalMap rot = IntervalMap::rotation(rat(1, 3));
    CHECK(rot.apply(Rational(0)) == rat(1, 3));
    CHECK(rot.apply(rat(2, 3)) == Rational(0));
    IntervalMap rot3 = rot.compose(rot).compose(rot);
    CHECK(rot3 == IntervalMap::identity());
    CHECK(rot.compose(rot.inverse()) == IntervalMap::identity());

    // composing the stretch with itself: slope 4 on [0,1/9], density 1/4 on the image
    auto [t1, t2] = f2_counterexample();
    IntervalMap phi2 = t1.map.compose(t1.map);
    CHECK(phi2.apply(rat(1, 9)) == rat(4, 9));
    CHECK(phi2.pieces().front().src_len() / phi2.pieces().front().dst_len() == rat(1, 4));
    StepFn rn = phi2.rn_derivative();
    CHECK(rn.at(rat(1, 5)) == rat(1, 4));
}

TEST_CASE("random interval maps: group laws and the density chain rule") {
    Sampler s(71);
    for (int t = 0; t < 60; ++t) {
        IntervalMap a = sample_interval_map(s, 4);
        IntervalMap b = sample_interval_map(s, 4);
        IntervalMap c = sample_interval_map(s, 4);
        CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
        CHECK(a.compose(a.inverse()) == IntervalMap::identity());
        CHECK(a.inverse().compose(a) == IntervalMap::identity());
        // d((a∘b)_*λ)/dλ = (da_*λ/dλ) · (db_*λ/dλ)∘a^{-1}
        CHECK(a.compose(b).rn_derivative() ==
              a.rn_derivative() * a.pushforward_values(b.rn_derivative()));
        StepFn f = sample_step(s, 5);
        CHECK(L1Iso(a.compose(b)).apply(f) == L1Iso(a).apply(L1Iso(b).apply(f)));
        CHECK(l1_norm(L1Iso(a).apply(f)) == l1_norm(f));
        // denominator 8192 cannot collide with any breakpoint (den <= 64),
        // so the point stays interior through the round trip
        Rational x = ratz(2 * s.int_in(0, 4095) + 1, 8192);
        CHECK(a.inverse().apply(a.apply(x)) == x);
    }
}

TEST_CASE("Banach-Lamperti application and the counterexample pair") {
    auto [t1, t2] = f2_counterexample();
    StepFn chi = StepFn::indicator(Rational(0), rat(1, 3));
    CHECK(t1.apply(chi) == rat(1, 2) * StepFn::indicator(Rational(0), rat(2, 3)));
    CHECK(t2.apply(chi) == StepFn::indicator(rat(1, 3), rat(2, 3)));
    CHECK(L1Iso::identity_iso().apply(chi) == chi);
    CHECK(t1.map.rn_derivative() ==
          StepFn({Rational(0), rat(2, 3), Rational(1)}, {rat(1, 2), rat(2)}));
    // sign parts compose through the map
    StepFn sgn({Rational(0), rat(1, 2), Rational(1)}, {Rational(1), Rational(-1)});
    L1Iso signed_iso(IntervalMap::identity(), sgn);
    CHECK(signed_iso.compose(signed_iso) == L1Iso::identity_iso());
    CHECK_THROWS_AS(L1Iso(IntervalMap::identity(), StepFn::constant(rat(2))),
                    std::invalid_argument);
}

TEST_CASE("orientation-reversing pieces") {
    // x ↦ 1 - x as a single reversed piece
    IntervalMap flip({MapPiece{Rational(0), Rational(1), Rational(0), Rational(1), -1}});
    CHECK(flip.apply(rat(1, 4)) == rat(3, 4));
    CHECK(flip.compose(flip) == IntervalMap::identity());
    CHECK(flip.inverse() == flip);
    StepFn f({Rational(0), rat(1, 3), Rational(1)}, {rat(2), rat(-1)});
    StepFn flipped = flip.pushforward_values(f);
    CHECK(flipped.at(rat(9, 10)) == 2);
    CHECK(flipped.at(rat(1, 10)) == -1);
    CHECK(l1_norm(L1Iso(flip).apply(f)) == l1_norm(f));
    // reversed piece composed with the rotation still round-trips
    IntervalMap rot = IntervalMap::rotation(rat(2, 5));
    IntervalMap mixed = rot.compose(flip);
    CHECK(mixed.compose(mixed.inverse()) == IntervalMap::identity());
    CHECK(mixed.apply(rat(1, 5)) == rot.apply(flip.apply(rat(1, 5))));
}

TEST_CASE("signed isometries break positivity but not the norm") {
    IntervalMap flip({MapPiece{Rational(0), Rational(1), Rational(0), Rational(1), -1}});
    StepFn sgn({Rational(0), rat(1, 2), Rational(1)}, {Rational(1), Rational(-1)});
    L1Iso t(flip, sgn);
    Sampler s(61);
    for (int i = 0; i < 50; ++i) {
        StepFn f = sample_step(s, 6);
        CHECK(l1_norm(t.apply(f)) == l1_norm(f));
        CHECK(t.inverse().apply(t.apply(f)) == f);
    }
    StepFn pos = StepFn::constant(Rational(1));
    CHECK(!t.apply(pos).nonnegative());  // not a lattice isometry
    CHECK(L1Iso(flip).apply(pos).nonnegative());
}

TEST_CASE("word evaluation is a homomorphism into the isometries") {
    auto [t1, t2] = f2_counterexample();
    CHECK(eval_word(GenWord::one(), t1, t2) == L1Iso::identity_iso());
    CHECK(eval_word(GenWord::parse("a"), t1, t2) == t1);
    StepFn chi = StepFn::indicator(Rational(0), rat(1, 3));
    CHECK(l1_norm(eval_word(GenWord::parse("abA"), t1, t2).apply(chi)) == rat(1, 3));
    Sampler s(15);
    for (int t = 0; t < 200; ++t) {
        GenWord w = sample_word(s, 2, static_cast<int>(s.int_in(1, 8)));
        L1Iso g = eval_word(w, t1, t2);
        for (int j = 0; j < 3; ++j) {
            StepFn f = sample_step(s, 6);
            CHECK(l1_norm(g.apply(f)) == l1_norm(f));
            CHECK(g.apply(f.abs()).nonnegative());  // lattice isometries preserve positivity
        }
        GenWord u = sample_word(s, 2, static_cast<int>(s.int_in(0, 4)));
        CHECK(eval_word(w * u, t1, t2) == g.compose(eval_word(u, t1, t2)));
        CHECK(g.compose(g.inverse()) == L1Iso::identity_iso());
    }
}

TEST_CASE("fundamental domain actions") {
    FDAction z = FDAction::integers();
    CHECK(z.shell(0) == std::make_pair(Rational(0), rat(1, 2)));
    CHECK(z.shell(1) == std::make_pair(rat(1, 2), rat(3, 4)));
    CHECK(z.index_of(z.elem_at(7)) == 7);
    FDAction::Elem one = z.generator(0);
    MapPiece t = z.transport(one, z.identity());
    CHECK(t.dst_lo == rat(1, 2));
    CHECK(t.dst_hi == rat(3, 4));

    FDAction f2 = FDAction::free_group(2);
    for (long k = 0; k < 200; ++k) CHECK(f2.index_of(f2.elem_at(k)) == k);
    // spiral enumeration starts e, a, A, b, B
    CHECK(f2.elem_str(f2.elem_at(0)) == "e");
    CHECK(f2.elem_str(f2.elem_at(1)) == "a");
    CHECK(f2.elem_str(f2.elem_at(2)) == "A");
    CHECK(f2.elem_str(f2.elem_at(3)) == "b");
    CHECK(f2.elem_str(f2.elem_at(4)) == "B");

    CHECK_THROWS_AS(FDAction::cyclic(0), std::invalid_argument);
    CHECK_THROWS_AS(FDAction::free_group(0), std::invalid_argument);

    FDAction cyc = FDAction::cyclic(4);
    CHECK(cyc.shell(3) == std::make_pair(rat(7, 8), Rational(1)));
    Rational total(0);
    for (long k = 0; k < 4; ++k) {
        auto [lo, hi] = cyc.shell(k);
        total += hi - lo;
    }
    CHECK(total == 1);
}

TEST_CASE("symbolic action against the truncated generator map") {
    Sampler s(27);
    for (const FDAction& act : {FDAction::integers(), FDAction::free_group(2), FDAction::cyclic(6)}) {
        for (int gi = 0; gi < act.num_generators(); ++gi) {
            IntervalMap gm = act.generator_map(gi, 20);
            StepFn f = sample_step(s, 5) * StepFn::indicator(Rational(0), rat(15, 16));
            CHECK(L1Iso(gm).apply(f) == act.apply(act.generator(gi), f));
        }
    }
    FDAction z = FDAction::integers();
    StepFn f = sample_step(s, 5) * StepFn::indicator(Rational(0), rat(3, 4));
    FDAction::Elem g = z.generator(0);
    CHECK(z.apply(z.inv(g), z.apply(g, f)) == f);
    CHECK(l1_norm(z.apply(g, f)) == l1_norm(f));
    // support reaching 1 cannot be acted on symbolically
    CHECK_THROWS_AS(z.apply(g, StepFn::constant(Rational(1))), std::invalid_argument);
    // but a cyclic action is total
    FDAction cyc = FDAction::cyclic(4);
    CHECK(l1_norm(cyc.apply(cyc.generator(0), StepFn::constant(Rational(1)))) == 1);
}

TEST_CASE("pn_apply pinned values and bounds") {
    FDAction z = FDAction::integers();
    std::vector<FDAction::Elem> just_e{z.identity()};
    TruncVec v = pn_apply(z, 1, StepFn::indicator(Rational(0), rat(1, 2)), just_e);
    REQUIRE(v.entries.size() == 1);
    CHECK(v.entries[0].value == rat(1, 2));
    CHECK(v.tail_bound == 0);

    TruncVec v2 = pn_apply(z, 2, StepFn::constant(Rational(1)), just_e);
    REQUIRE(v2.entries.size() == 2);
    CHECK(v2.entries[0].value == rat(1, 4));
    CHECK(v2.entries[1].value == rat(1, 4));
    CHECK(v2.tail_bound == rat(1, 2));

    CHECK_THROWS_AS(pn_apply(z, 1, StepFn(), std::vector<FDAction::Elem>{z.generator(0)}),
                    std::invalid_argument);

    Sampler s(31);
    for (int t = 0; t < 50; ++t) {
        StepFn f = sample_step(s, 6);
        std::vector<FDAction::Elem> trunc;
        for (long k = 0; k < 4; ++k) trunc.push_back(z.elem_at(k));
        TruncVec tv = pn_apply(z, 3, f, trunc);
        CHECK(l1_entries(tv) <= l1_norm(f));
        CHECK(tv.tail_bound >= 0);
        CHECK(l1_entries(tv) + tv.tail_bound <= l1_norm(f) + Rational(0));
    }
}

TEST_CASE("lp norm exactness and interpolation") {
    TruncVec v;
    v.n = 1;
    v.entries = {{0, "0", 1, rat(1, 2)}, {1, "1", 1, rat(1, 2)}};
    CHECK(lp_norm(v, rat(1), pow2(-64)).mid == 1);
    CertReal l2 = lp_norm(v, rat(2), pow2(-64));
    CHECK(l2.lo() * l2.lo() <= rat(1, 2));
    CHECK(l2.hi() * l2.hi() >= rat(1, 2));
    // p = 3/2 gives 2^{-1/3}: cube the enclosure
    CertReal l32 = lp_norm(v, rat(3, 2), pow2(-64));
    CHECK(l32.lo() * l32.lo() * l32.lo() <= rat(1, 2));
    CHECK(l32.hi() * l32.hi() * l32.hi() >= rat(1, 2));
    CHECK_THROWS_AS(lp_norm(v, rat(1, 2), pow2(-10)), std::domain_error);

    // nonincreasing in p, tending to the ℓ1 value as p ↓ 1
    Sampler s(37);
    const Rational ps[] = {rat(1), rat(9, 8), rat(5, 4), rat(3, 2), rat(2)};
    for (int t = 0; t < 20; ++t) {
        TruncVec w;
        w.n = 1;
        int k = static_cast<int>(s.int_in(1, 5));
        for (int i = 0; i < k; ++i) w.entries.push_back({i, std::to_string(i), 1, s.rational(4, 16)});
        CertReal prev;
        bool first = true;
        for (const Rational& p : ps) {
            CertReal cur = lp_norm(w, p, pow2(-72));
            if (!first) CHECK(cur.lo() <= prev.hi());  // nonincreasing within radii
            prev = cur;
            first = false;
        }
        CertReal near_one = lp_norm(w, rat(129, 128), pow2(-72));
        bool from_below = near_one.hi() <= l1_entries(w) + pow2(-60) ||
                          near_one.lo() <= l1_entries(w);  // approaches ℓ1 from below
        CHECK(from_below);
    }
}

TEST_CASE("find_np certificates") {
    FDAction z = FDAction::integers();
    StepFn f = StepFn::indicator(Rational(0), rat(1, 4)) - StepFn::indicator(rat(1, 4), rat(1, 2));
    auto r = find_np(z, f, rat(1, 2));
    REQUIRE(r.has_value());
    CHECK(r->n == 2);
    CHECK(r->value.lo() >= rat(1, 4));

    auto r2 = find_np(z, StepFn::indicator(Rational(0), rat(1, 2)), rat(1, 2));
    REQUIRE(r2.has_value());
    CHECK(r2->n == 1);
    CHECK(r2->value.lo() >= rat(1, 4));

    CHECK_THROWS_AS(find_np(z, StepFn(), rat(1, 2)), std::domain_error);
    CHECK_THROWS_AS(find_np(z, f, rat(2)), std::domain_error);

    // mass living away from the fundamental domain needs a larger truncation
    StepFn far = StepFn::indicator(rat(3, 4), rat(15, 16));
    auto r3 = find_np(z, far, rat(1, 2));
    REQUIRE(r3.has_value());
    CHECK(r3->trunc_size == 4);
    CHECK(r3->value.lo() >= rat(3, 32));
}

TEST_CASE("pn equivariance inside the truncation") {
    FDAction z = FDAction::integers();
    Sampler s(41);
    std::vector<FDAction::Elem> trunc;
    for (long k = 0; k < 8; ++k) trunc.push_back(z.elem_at(k));
    for (int t = 0; t < 20; ++t) {
        StepFn f = sample_step(s, 6) * StepFn::indicator(Rational(0), rat(15, 16));
        int n = static_cast<int>(s.int_in(1, 3));
        TruncVec base = pn_apply(z, n, f, trunc);
        std::map<std::pair<long, int>, Rational> base_map;
        for (const auto& e : base.entries) base_map[{e.gidx, e.i}] = e.value;
        for (long hn : {1L, -1L, 2L, -3L}) {
            FDAction::Elem h;
            h.n = hn;
            TruncVec moved = pn_apply(z, n, z.apply(h, f), trunc);
            for (const auto& e : moved.entries) {
                FDAction::Elem g = z.elem_at(e.gidx);
                auto it = base_map.find({z.index_of(z.mul(z.inv(h), g)), e.i});
                if (it != base_map.end()) CHECK(it->second == e.value);
            }
        }
    }
}
