#include "renormlab/instances.hpp"

#include <algorithm>

namespace renormlab {

// -------------------------------------------------------------------- VecR

VecR VecR::operator+(const VecR& o) const {
    if (coords.size() != o.coords.size()) throw std::invalid_argument("VecR: dimension mismatch");
    VecR out = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] += o.coords[i];
    return out;
}

VecR operator*(const Rational& c, const VecR& v) {
    VecR out = v;
    for (auto& x : out.coords) x *= c;
    return out;
}

Rational linf_norm(const VecR& v) {
    Rational m(0);
    for (const Rational& x : v.coords) m = std::max(m, rat_abs(x));
    return m;
}

Rational l2_sq(const VecR& v) {
    Rational s(0);
    for (const Rational& x : v.coords) s += x * x;
    return s;
}

nlohmann::ordered_json to_json(const VecR& v) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const Rational& x : v.coords) j.push_back(to_string(x));
    return j;
}

// ------------------------------------------------------------------ oracles

NormOracle<CSeq> sup_oracle() {
    NormOracle<CSeq> n;
    n.space = "c (sup norm)";
    n.exact = true;
    n.eval = [](const CSeq& x, const Rational&) { return CertReal(sup_norm(x)); };
    n.fingerprint = [](const CSeq& x) { return std::vector<Rational>{sup_norm(x)}; };
    return n;
}

NormOracle<CSeq> sorted_sc_oracle() {
    NormOracle<CSeq> n;
    n.space = "c0 (sorted weighted norm)";
    n.claimed_bounds = std::make_pair(rat(1), rat(8, 5));  // true upper constant is 1 + 1/sqrt 3
    n.eval = [](const CSeq& x, const Rational& p) { return sorted_sc_norm(x, p); };
    n.fingerprint = [](const CSeq& x) {
        return std::vector<Rational>{sup_norm(x), sorted_radicand(x)};
    };
    return n;
}

NormOracle<CSeq> c_renorm_oracle() {
    NormOracle<CSeq> n;
    n.space = "c (renormed)";
    n.eval = [](const CSeq& x, const Rational& p) { return c_renorm(x, p); };
    n.fingerprint = [](const CSeq& x) { return c_renorm_fingerprint(x); };
    return n;
}

NormOracle<CZeroPlusR> pair_oracle() {
    NormOracle<CZeroPlusR> n;
    n.space = "c0 ⊕_2 R";
    n.eval = [](const CZeroPlusR& z, const Rational& p) { return pair_norm(z, p); };
    n.fingerprint = [](const CZeroPlusR& z) {
        return std::vector<Rational>{sup_norm(z.u), sorted_radicand(z.u), rat_abs(z.t)};
    };
    return n;
}

NormOracle<BlockVec> c0sum_oracle() {
    NormOracle<BlockVec> n;
    n.space = "c0-sum (sorted weighted norm)";
    n.eval = [](const BlockVec& v, const Rational& p) { return c0sum_sorted_norm(v, p); };
    n.fingerprint = [](const BlockVec& v) {
        return std::vector<Rational>{c0sum_max_sq(v), c0sum_radicand(v)};
    };
    return n;
}

NormOracle<BlockVec> c0sum_base_oracle() {
    NormOracle<BlockVec> n;
    n.space = "c0-sum (base norm)";
    n.eval = [](const BlockVec& v, const Rational& p) { return cert_sqrt(c0sum_max_sq(v), p); };
    n.fingerprint = [](const BlockVec& v) { return std::vector<Rational>{c0sum_max_sq(v)}; };
    return n;
}

NormOracle<BlockVec> l1sum_oracle() {
    NormOracle<BlockVec> n;
    n.space = "ℓ1-sum (renormed)";
    n.claimed_bounds = std::make_pair(rat(1), rat(2));  // the ℓ2 part is at most the ℓ1 part
    n.eval = [](const BlockVec& v, const Rational& p) { return l1sum_sc_norm(v, p); };
    n.fingerprint = [](const BlockVec& v) { return l1sum_fingerprint(v); };
    return n;
}

NormOracle<BlockVec> l1sum_base_oracle() {
    NormOracle<BlockVec> n;
    n.space = "ℓ1-sum (base norm)";
    n.eval = [](const BlockVec& v, const Rational& p) {
        std::size_t parts = std::max<std::size_t>(1, v.blocks().size());
        Rational prec(p / static_cast<long>(parts));
        CertReal sum{Rational(0), Rational(0)};
        for (std::size_t i = 0; i < v.blocks().size(); ++i)
            sum = sum + cert_sqrt(v.block_sq(i), prec);
        return sum;
    };
    n.fingerprint = [](const BlockVec& v) { return l1sum_fingerprint(v); };
    return n;
}

NormOracle<BlockVec> l2sum_oracle() {
    NormOracle<BlockVec> n;
    n.space = "ℓ2-sum of blocks";
    n.eval = [](const BlockVec& v, const Rational& p) {
        Rational total(0);
        for (std::size_t i = 0; i < v.blocks().size(); ++i) total += v.block_sq(i);
        return cert_sqrt(total, p);
    };
    n.fingerprint = [](const BlockVec& v) {
        Rational total(0);
        for (std::size_t i = 0; i < v.blocks().size(); ++i) total += v.block_sq(i);
        return std::vector<Rational>{total};
    };
    return n;
}

NormOracle<StepFn> l1_oracle() {
    NormOracle<StepFn> n;
    n.space = "L1[0,1]";
    n.exact = true;
    n.eval = [](const StepFn& f, const Rational&) { return CertReal(l1_norm(f)); };
    n.fingerprint = [](const StepFn& f) { return std::vector<Rational>{l1_norm(f)}; };
    return n;
}

NormOracle<StepFn> step_l2_oracle() {
    NormOracle<StepFn> n;
    n.space = "L2[0,1] (on step functions)";
    n.eval = [](const StepFn& f, const Rational& p) { return cert_sqrt(l2_sq(f), p); };
    n.fingerprint = [](const StepFn& f) { return std::vector<Rational>{l2_sq(f)}; };
    n.sq_value = [](const StepFn& f) { return l2_sq(f); };
    return n;
}

NormOracle<CylFn> cyl_sup_oracle() {
    NormOracle<CylFn> n;
    n.space = "C(2^N) (sup norm)";
    n.exact = true;
    n.eval = [](const CylFn& f, const Rational&) { return CertReal(f.sup()); };
    n.fingerprint = [](const CylFn& f) { return std::vector<Rational>{f.sup()}; };
    return n;
}

NormOracle<CylFn> cyl_l2_oracle() {
    NormOracle<CylFn> n;
    n.space = "L2(2^N, coin-flip)";
    n.eval = [](const CylFn& f, const Rational& p) { return cert_sqrt(f.l2_sq(), p); };
    n.fingerprint = [](const CylFn& f) { return std::vector<Rational>{f.l2_sq()}; };
    n.sq_value = [](const CylFn& f) { return f.l2_sq(); };
    return n;
}

NormOracle<CylFn> odometer_sc_oracle() {
    NormOracle<CylFn> n;
    n.space = "C(2^N) (sup + L2)";
    n.eval = [](const CylFn& f, const Rational& p) { return odometer_sc_norm(f, p); };
    n.fingerprint = [](const CylFn& f) { return std::vector<Rational>{f.sup(), f.l2_sq()}; };
    return n;
}

NormOracle<VecR> linf_oracle() {
    NormOracle<VecR> n;
    n.space = "R^d (sup norm)";
    n.exact = true;
    n.eval = [](const VecR& v, const Rational&) { return CertReal(linf_norm(v)); };
    n.fingerprint = [](const VecR& v) { return std::vector<Rational>{linf_norm(v)}; };
    return n;
}

NormOracle<VecR> l2_vec_oracle() {
    NormOracle<VecR> n;
    n.space = "R^d (ℓ2)";
    n.eval = [](const VecR& v, const Rational& p) { return cert_sqrt(l2_sq(v), p); };
    n.fingerprint = [](const VecR& v) { return std::vector<Rational>{l2_sq(v)}; };
    n.sq_value = [](const VecR& v) { return l2_sq(v); };
    return n;
}

// ------------------------------------------------------------------ actions

GroupAction<StepFn> l1iso_action(std::vector<L1Iso> gens, const std::string& name) {
    std::vector<L1Iso> inverses;
    inverses.reserve(gens.size());
    for (const L1Iso& g : gens) inverses.push_back(g.inverse());
    GroupAction<StepFn> act;
    act.name = name;
    for (std::size_t i = 0; i < gens.size(); ++i)
        act.generator_names.push_back(std::string(1, static_cast<char>('a' + i)));
    act.apply_gen = [gens = std::move(gens), inverses = std::move(inverses)](
                        int gen, bool inv, const StepFn& f) {
        const auto& list = inv ? inverses : gens;
        return list.at(static_cast<std::size_t>(gen)).apply(f);
    };
    return act;
}

GroupAction<StepFn> f2_action() {
    auto [t1, t2] = f2_counterexample();
    return l1iso_action({t1, t2}, "F2 on L1[0,1]");
}

GroupAction<XFn> subshift_group_action() {
    GroupAction<XFn> act;
    act.name = "F2 on C(X)";
    act.generator_names = {"shift", "swap"};
    act.apply_gen = [](int gen, bool inv, const XFn& f) {
        if (gen == 0) return f.shift_pullback(inv ? -1 : 1);
        if (gen == 1) return f.swap_pullback();
        throw std::invalid_argument("subshift action: unknown generator");
    };
    return act;
}

GroupAction<CylFn> odometer_group_action() {
    GroupAction<CylFn> act;
    act.name = "binary odometer";
    act.generator_names = {"odometer"};
    act.apply_gen = [](int gen, bool inv, const CylFn& f) {
        if (gen != 0) throw std::invalid_argument("odometer action: unknown generator");
        return odometer_act_pow(f, inv ? -1 : 1);
    };
    return act;
}

GroupAction<CSeq> cseq_action(std::vector<IsoCElem> gens, const std::string& name) {
    std::vector<IsoCElem> inverses;
    inverses.reserve(gens.size());
    for (const IsoCElem& g : gens) inverses.push_back(g.inverse());
    GroupAction<CSeq> act;
    act.name = name;
    for (std::size_t i = 0; i < gens.size(); ++i) act.generator_names.push_back("g" + std::to_string(i));
    act.apply_gen = [gens = std::move(gens), inverses = std::move(inverses)](
                        int gen, bool inv, const CSeq& x) {
        const auto& list = inv ? inverses : gens;
        return act_c(list.at(static_cast<std::size_t>(gen)), x);
    };
    return act;
}

GroupAction<CZeroPlusR> pair_group_action(std::vector<IsoCElem> gens, const std::string& name) {
    std::vector<IsoCElem> inverses;
    inverses.reserve(gens.size());
    for (const IsoCElem& g : gens) inverses.push_back(g.inverse());
    GroupAction<CZeroPlusR> act;
    act.name = name;
    for (std::size_t i = 0; i < gens.size(); ++i) act.generator_names.push_back("g" + std::to_string(i));
    act.apply_gen = [gens = std::move(gens), inverses = std::move(inverses)](
                        int gen, bool inv, const CZeroPlusR& z) {
        const auto& list = inv ? inverses : gens;
        return act_pair(list.at(static_cast<std::size_t>(gen)), z);
    };
    return act;
}

GroupAction<BlockVec> block_group_action(std::vector<BlockIso> gens, const std::string& name) {
    std::vector<BlockIso> inverses;
    inverses.reserve(gens.size());
    for (const BlockIso& g : gens) inverses.push_back(g.inverse());
    GroupAction<BlockVec> act;
    act.name = name;
    for (std::size_t i = 0; i < gens.size(); ++i) act.generator_names.push_back("g" + std::to_string(i));
    act.apply_gen = [gens = std::move(gens), inverses = std::move(inverses)](
                        int gen, bool inv, const BlockVec& v) {
        const auto& list = inv ? inverses : gens;
        return act_blocks(list.at(static_cast<std::size_t>(gen)), v);
    };
    return act;
}

GroupAction<VecR> trivial_vec_action(const std::string& name) {
    GroupAction<VecR> act;
    act.name = name;
    act.generator_names = {"e"};
    act.apply_gen = [](int, bool, const VecR& v) { return v; };
    return act;
}

EquivariantMap<CSeq, CZeroPlusR> c_embedding() {
    EquivariantMap<CSeq, CZeroPlusR> d;
    d.domain = "c";
    d.codomain = "c0 ⊕_2 R";
    d.map = [](const CSeq& x) { return c_embed(x); };
    d.operator_bound = 4;  // coarse: ||x - lim·1||_∞ <= 2||x||, |lim| <= ||x||
    d.injectivity_constant = 1;
    return d;
}

EquivariantMap<StepFn, VecR> dyadic_integral_map(int level) {
    if (level < 0 || level > 16) throw std::invalid_argument("dyadic_integral_map: level out of range");
    EquivariantMap<StepFn, VecR> d;
    d.domain = "L1[0,1]";
    d.codomain = "R^" + std::to_string(1 << level) + " (ℓ2)";
    d.map = [level](const StepFn& f) {
        VecR v;
        long cells = 1L << level;
        for (long i = 0; i < cells; ++i)
            v.coords.push_back(f.integral(ratz(i, cells), ratz(i + 1, cells)));
        return v;
    };
    d.operator_bound = 1;  // ℓ2 of cell integrals <= Σ |∫| <= ||f||_1
    return d;
}

// ----------------------------------------------------------------- sampling

CSeq sample_c0(Sampler& s, int max_len) {
    int len = static_cast<int>(s.int_in(1, max_len));
    std::vector<Rational> p;
    p.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) p.push_back(s.rational());
    return CSeq(std::move(p), Rational(0));
}

CSeq sample_c(Sampler& s, int max_len) {
    int len = static_cast<int>(s.int_in(0, max_len));
    std::vector<Rational> p;
    p.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) p.push_back(s.rational());
    return CSeq(std::move(p), s.rational());
}

namespace {

std::map<int, int> random_permutation(Sampler& s, int window) {
    std::vector<int> img(static_cast<std::size_t>(window));
    for (int i = 0; i < window; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    for (int i = window - 1; i > 0; --i) {
        long j = s.int_in(0, i);
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
    }
    std::map<int, int> perm;
    for (int i = 0; i < window; ++i)
        if (img[static_cast<std::size_t>(i)] != i + 1) perm[i + 1] = img[static_cast<std::size_t>(i)];
    return perm;
}

}  // namespace

IsoCElem sample_signed_perm(Sampler& s, int window) {
    std::map<int, int> perm = random_permutation(s, window);
    std::set<int> dev;
    for (int i = 1; i <= window; ++i)
        if (s.bounded(4) == 0) dev.insert(i);
    int tail = s.coin() ? 1 : -1;
    return IsoCElem(std::move(perm), std::move(dev), tail);
}

IsoCElem sample_perm_only(Sampler& s, int window) {
    return IsoCElem(random_permutation(s, window), {}, 1);
}

IsoCElem sorting_permutation(const CSeq& x) {
    if (!x.in_c0()) throw std::domain_error("sorting_permutation: c0 sequence expected");
    int k = x.prefix_len();
    std::vector<int> order(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return rat_abs(x.at(a)) > rat_abs(x.at(b));
    });
    std::map<int, int> perm;  // original position -> rank
    std::set<int> dev;
    for (int r = 0; r < k; ++r) {
        int p = order[static_cast<std::size_t>(r)];
        if (p != r + 1) perm[p] = r + 1;
        if (x.at(p) < 0) dev.insert(r + 1);
    }
    return IsoCElem(std::move(perm), std::move(dev), 1);
}

Rational positional_radicand(const CSeq& x) {
    if (!x.in_c0()) throw std::domain_error("positional_radicand: c0 sequence expected");
    Rational r(0);
    Rational w(1);
    for (int i = 1; i <= x.prefix_len(); ++i) {
        w /= 4;
        r += x.at(i) * x.at(i) * w;
    }
    return r;
}

StepFn sample_step(Sampler& s, int max_pieces, long max_den) {
    int k = static_cast<int>(s.int_in(1, max_pieces));
    std::set<Rational> cuts;
    for (int i = 0; i < k - 1; ++i) {
        long den = s.int_in(2, max_den);
        long num = s.int_in(1, den - 1);
        cuts.insert(rat(num, den));
    }
    std::vector<Rational> breaks{Rational(0)};
    breaks.insert(breaks.end(), cuts.begin(), cuts.end());
    breaks.push_back(Rational(1));
    std::vector<Rational> vals;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) vals.push_back(s.rational());
    return StepFn(std::move(breaks), std::move(vals));
}

namespace {

std::vector<Rational> sample_partition(Sampler& s, int pieces, long max_den) {
    std::set<Rational> cuts;
    while (static_cast<int>(cuts.size()) < pieces - 1) {
        long den = s.int_in(2, max_den);
        long num = s.int_in(1, den - 1);
        cuts.insert(rat(num, den));
    }
    std::vector<Rational> breaks{Rational(0)};
    breaks.insert(breaks.end(), cuts.begin(), cuts.end());
    breaks.push_back(Rational(1));
    return breaks;
}

}  // namespace

IntervalMap sample_interval_map(Sampler& s, int max_pieces, long max_den) {
    int k = static_cast<int>(s.int_in(1, max_pieces));
    std::vector<Rational> src = sample_partition(s, k, max_den);
    std::vector<Rational> dst = sample_partition(s, k, max_den);
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = k - 1; i > 0; --i) {
        long j = s.int_in(0, i);
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    std::vector<MapPiece> pieces;
    for (int i = 0; i < k; ++i) {
        int j = perm[static_cast<std::size_t>(i)];
        pieces.push_back(MapPiece{src[static_cast<std::size_t>(i)],
                                  src[static_cast<std::size_t>(i) + 1],
                                  dst[static_cast<std::size_t>(j)],
                                  dst[static_cast<std::size_t>(j) + 1], s.coin() ? 1 : -1});
    }
    return IntervalMap(std::move(pieces));
}

GenWord sample_word(Sampler& s, int n_gens, int len) {
    GenWord w;
    int prev = -1;
    for (int i = 0; i < len; ++i) {
        long r;
        if (prev < 0) {
            r = static_cast<long>(s.bounded(static_cast<std::uint64_t>(2 * n_gens)));
        } else {
            long forbidden = prev ^ 1;
            r = static_cast<long>(s.bounded(static_cast<std::uint64_t>(2 * n_gens - 1)));
            if (r >= forbidden) ++r;
        }
        w.push(Letter{static_cast<int>(r / 2), (r % 2) != 0});
        prev = static_cast<int>(r);
    }
    return w;
}

BlockVec sample_blockvec(Sampler& s, const BlockShape& shape, Ambient ambient) {
    std::vector<BlockVec::Block> blocks;
    for (const auto& [cls, dim] : shape) {
        BlockVec::Block b;
        b.class_id = cls;
        for (int i = 0; i < dim; ++i) b.coords.push_back(s.rational());
        blocks.push_back(std::move(b));
    }
    return BlockVec(std::move(blocks), ambient);
}

BlockIso sample_blockiso(Sampler& s, const BlockShape& shape) {
    std::size_t n = shape.size();
    // class-preserving permutation of positions
    std::map<int, std::vector<int>> by_class;
    for (std::size_t i = 0; i < n; ++i) by_class[shape[i].first].push_back(static_cast<int>(i));
    std::vector<int> perm(n);
    for (auto& [cls, pos] : by_class) {
        std::vector<int> shuffled = pos;
        for (std::size_t i = shuffled.size(); i-- > 1;) {
            std::size_t j = static_cast<std::size_t>(s.bounded(i + 1));
            std::swap(shuffled[i], shuffled[j]);
        }
        for (std::size_t k = 0; k < pos.size(); ++k)
            perm[static_cast<std::size_t>(pos[k])] = shuffled[k];
    }
    std::vector<std::vector<std::vector<Rational>>> maps;
    for (std::size_t j = 0; j < n; ++j) {
        int d = shape[j].second;
        std::vector<std::vector<Rational>> q(static_cast<std::size_t>(d),
                                             std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
        for (int i = 0; i < d; ++i) q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        // random rational rotations from Pythagorean triples, then signs
        for (int t = 0; t < 2 * d; ++t) {
            if (d < 2) break;
            std::size_t r1 = static_cast<std::size_t>(s.bounded(static_cast<std::uint64_t>(d)));
            std::size_t r2 = static_cast<std::size_t>(s.bounded(static_cast<std::uint64_t>(d - 1)));
            if (r2 >= r1) ++r2;
            long m = s.int_in(2, 5);
            long k = s.int_in(1, m - 1);
            Rational c = ratz(m * m - k * k, m * m + k * k);
            Rational dd = ratz(2 * m * k, m * m + k * k);
            for (std::size_t col = 0; col < static_cast<std::size_t>(d); ++col) {
                Rational u = q[r1][col];
                Rational v = q[r2][col];
                q[r1][col] = c * u - dd * v;
                q[r2][col] = dd * u + c * v;
            }
        }
        for (int i = 0; i < d; ++i)
            if (s.coin())
                for (std::size_t col = 0; col < static_cast<std::size_t>(d); ++col)
                    q[static_cast<std::size_t>(i)][col] *= -1;
        maps.push_back(std::move(q));
    }
    return BlockIso(std::move(perm), std::move(maps));
}

CylFn sample_cylfn(Sampler& s, int max_depth) {
    int d = static_cast<int>(s.int_in(0, max_depth));
    std::vector<Rational> table(std::size_t{1} << d);
    for (auto& v : table) v = s.rational();
    return CylFn(d, std::move(table));
}

VecR sample_vecr(Sampler& s, int dim) {
    VecR v;
    for (int i = 0; i < dim; ++i) v.coords.push_back(s.rational());
    return v;
}

// ------------------------------------------------------------- parallelism

bool is_parallel(const CSeq& a, const CSeq& b) {
    int len = std::max(a.prefix_len(), b.prefix_len());
    std::vector<Rational> ca, cb;
    for (int i = 1; i <= len; ++i) {
        ca.push_back(a.at(i));
        cb.push_back(b.at(i));
    }
    ca.push_back(a.tail());
    cb.push_back(b.tail());
    return proportional(ca, cb);
}

bool is_parallel(const StepFn& a, const StepFn& b) {
    std::vector<Rational> breaks;
    std::set_union(a.breakpoints().begin(), a.breakpoints().end(), b.breakpoints().begin(),
                   b.breakpoints().end(), std::back_inserter(breaks));
    std::vector<Rational> ca, cb;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        ca.push_back(a.at(breaks[i]));
        cb.push_back(b.at(breaks[i]));
    }
    return proportional(ca, cb);
}

bool is_parallel(const BlockVec& a, const BlockVec& b) {
    std::vector<Rational> ca, cb;
    for (const auto& blk : a.blocks()) ca.insert(ca.end(), blk.coords.begin(), blk.coords.end());
    for (const auto& blk : b.blocks()) cb.insert(cb.end(), blk.coords.begin(), blk.coords.end());
    return proportional(ca, cb);
}

bool is_parallel(const CylFn& a, const CylFn& b) {
    int m = std::max(a.depth(), b.depth());
    return proportional(a.at_depth(m).table(), b.at_depth(m).table());
}

bool is_parallel(const VecR& a, const VecR& b) { return proportional(a.coords, b.coords); }

// ------------------------------------------------------------- certificates

ObstructionCertificate<StepFn> f2_l1_certificate() {
    ObstructionCertificate<StepFn> cert;
    cert.space = "L1[0,1]";
    cert.x = StepFn::indicator(Rational(0), rat(1, 3));
    cert.y = StepFn::indicator(rat(1, 3), rat(2, 3));
    cert.g_word = GenWord::parse("b");  // the rotation sends x to y
    cert.h_word = GenWord::parse("a");  // the stretch sends x to the midpoint
    cert.action = f2_action();
    return cert;
}

ObstructionCertificate<XFn> subshift_certificate() {
    ObstructionCertificate<XFn> cert;
    cert.space = "C(X), X ⊆ S^Z";
    cert.x = XFn::from_partition(obstruction_f());
    cert.y = XFn::from_partition(obstruction_f_prime());
    cert.g_word = GenWord::generator(1);  // swap
    cert.h_word = GenWord::generator(0);  // shift
    cert.action = subshift_group_action();
    return cert;
}

}  // namespace renormlab
