#include "renormlab/l1space.hpp"

#include <algorithm>
#include <map>

namespace renormlab {

// ---------------------------------------------------------------- StepFn

StepFn::StepFn(std::vector<Rational> breaks, std::vector<Rational> vals)
    : breaks_(std::move(breaks)), vals_(std::move(vals)) {
    if (breaks_.size() < 2 || vals_.size() + 1 != breaks_.size())
        throw std::invalid_argument("StepFn: breakpoint/value count mismatch");
    if (breaks_.front() != 0 || breaks_.back() != 1)
        throw std::invalid_argument("StepFn: breakpoints must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw std::invalid_argument("StepFn: breakpoints must be strictly increasing");
    canonicalize();
}

void StepFn::canonicalize() {
    std::vector<Rational> nb{breaks_.front()};
    std::vector<Rational> nv;
    for (std::size_t i = 0; i < vals_.size(); ++i) {
        if (!nv.empty() && nv.back() == vals_[i]) {
            nb.back() = breaks_[i + 1];
        } else {
            nv.push_back(vals_[i]);
            nb.push_back(breaks_[i + 1]);
        }
    }
    breaks_ = std::move(nb);
    vals_ = std::move(nv);
}

StepFn StepFn::constant(const Rational& c) {
    return StepFn({Rational(0), Rational(1)}, {c});
}

StepFn StepFn::indicator(const Rational& a, const Rational& b) {
    if (!(Rational(0) <= a && a < b && b <= 1))
        throw std::invalid_argument("indicator: need 0 <= a < b <= 1");
    std::vector<Rational> breaks{Rational(0)};
    std::vector<Rational> vals;
    if (a > 0) {
        breaks.push_back(a);
        vals.push_back(Rational(0));
    }
    breaks.push_back(b);
    vals.push_back(Rational(1));
    if (b < 1) {
        breaks.push_back(Rational(1));
        vals.push_back(Rational(0));
    }
    return StepFn(std::move(breaks), std::move(vals));
}

Rational StepFn::at(const Rational& x) const {
    if (x < 0 || x >= 1) throw std::domain_error("StepFn::at: point outside [0,1)");
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - breaks_.begin());
    return vals_[idx - 1];
}

Rational StepFn::integral(const Rational& a, const Rational& b) const {
    Rational lo = std::max(a, Rational(0));
    Rational hi = std::min(b, Rational(1));
    Rational total(0);
    for (std::size_t i = 0; i < vals_.size(); ++i) {
        Rational l = std::max(lo, breaks_[i]);
        Rational h = std::min(hi, breaks_[i + 1]);
        if (l < h) total += vals_[i] * (h - l);
    }
    return total;
}

StepFn StepFn::abs() const {
    std::vector<Rational> v;
    v.reserve(vals_.size());
    for (const Rational& x : vals_) v.push_back(rat_abs(x));
    return StepFn(breaks_, v);
}

bool StepFn::nonnegative() const {
    for (const Rational& x : vals_)
        if (x < 0) return false;
    return true;
}

Rational StepFn::support_end() const {
    for (std::size_t i = vals_.size(); i-- > 0;)
        if (vals_[i] != 0) return breaks_[i + 1];
    return Rational(0);
}

template <class Op>
StepFn StepFn::merge(const StepFn& a, const StepFn& b, Op op) {
    std::vector<Rational> breaks;
    breaks.reserve(a.breaks_.size() + b.breaks_.size());
    std::set_union(a.breaks_.begin(), a.breaks_.end(), b.breaks_.begin(), b.breaks_.end(),
                   std::back_inserter(breaks));
    std::vector<Rational> vals;
    vals.reserve(breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        vals.push_back(op(a.at(breaks[i]), b.at(breaks[i])));
    return StepFn(std::move(breaks), std::move(vals));
}

StepFn StepFn::operator+(const StepFn& o) const {
    return merge(*this, o, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}
StepFn StepFn::operator-(const StepFn& o) const {
    return merge(*this, o, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}
StepFn StepFn::operator*(const StepFn& o) const {
    return merge(*this, o, [](const Rational& x, const Rational& y) { return Rational(x * y); });
}
StepFn operator*(const Rational& c, const StepFn& f) {
    std::vector<Rational> v;
    v.reserve(f.vals_.size());
    for (const Rational& x : f.vals_) v.push_back(Rational(c * x));
    return StepFn(f.breaks_, v);
}

Rational l1_norm(const StepFn& f) {
    Rational total(0);
    const auto& b = f.breakpoints();
    const auto& v = f.values();
    for (std::size_t i = 0; i < v.size(); ++i) total += rat_abs(v[i]) * (b[i + 1] - b[i]);
    return total;
}

Rational l2_sq(const StepFn& f) {
    Rational total(0);
    const auto& b = f.breakpoints();
    const auto& v = f.values();
    for (std::size_t i = 0; i < v.size(); ++i) total += v[i] * v[i] * (b[i + 1] - b[i]);
    return total;
}

nlohmann::ordered_json to_json(const StepFn& f) {
    nlohmann::ordered_json j;
    j["breakpoints"] = nlohmann::ordered_json::array();
    for (const Rational& b : f.breakpoints()) j["breakpoints"].push_back(to_string(b));
    j["values"] = nlohmann::ordered_json::array();
    for (const Rational& v : f.values()) j["values"].push_back(to_string(v));
    return j;
}

StepFn stepfn_from_json(const nlohmann::json& j) {
    std::vector<Rational> breaks, vals;
    for (const auto& s : j.at("breakpoints")) breaks.push_back(parse_rational(s.get<std::string>()));
    for (const auto& s : j.at("values")) vals.push_back(parse_rational(s.get<std::string>()));
    return StepFn(std::move(breaks), std::move(vals));
}

// ------------------------------------------------------------ IntervalMap

Rational MapPiece::fwd(const Rational& x) const {
    Rational k(dst_len() / src_len());
    if (orient > 0) return Rational(dst_lo + (x - src_lo) * k);
    return Rational(dst_hi - (x - src_lo) * k);
}

Rational MapPiece::inv(const Rational& y) const {
    Rational k(src_len() / dst_len());
    if (orient > 0) return Rational(src_lo + (y - dst_lo) * k);
    return Rational(src_lo + (dst_hi - y) * k);
}

namespace {

void check_partition(std::vector<std::pair<Rational, Rational>> ivals, const char* what) {
    std::sort(ivals.begin(), ivals.end());
    if (ivals.empty() || ivals.front().first != 0)
        throw std::invalid_argument(std::string("IntervalMap: ") + what + " must start at 0");
    for (std::size_t i = 0; i < ivals.size(); ++i) {
        if (!(ivals[i].first < ivals[i].second))
            throw std::invalid_argument(std::string("IntervalMap: empty ") + what + " interval");
        if (i + 1 < ivals.size() && ivals[i].second != ivals[i + 1].first)
            throw std::invalid_argument(std::string("IntervalMap: ") + what +
                                        " intervals must tile [0,1)");
    }
    if (ivals.back().second != 1)
        throw std::invalid_argument(std::string("IntervalMap: ") + what + " must end at 1");
}

}  // namespace

IntervalMap::IntervalMap(std::vector<MapPiece> pieces) : pieces_(std::move(pieces)) {
    std::sort(pieces_.begin(), pieces_.end(),
              [](const MapPiece& a, const MapPiece& b) { return a.src_lo < b.src_lo; });
    std::vector<std::pair<Rational, Rational>> srcs, dsts;
    for (const MapPiece& p : pieces_) {
        if (p.orient != 1 && p.orient != -1)
            throw std::invalid_argument("IntervalMap: orientation must be ±1");
        srcs.emplace_back(p.src_lo, p.src_hi);
        dsts.emplace_back(p.dst_lo, p.dst_hi);
    }
    check_partition(srcs, "source");
    check_partition(dsts, "target");
    // canonical form: fuse adjacent pieces that continue the same affine map
    std::vector<MapPiece> fused;
    for (const MapPiece& p : pieces_) {
        if (!fused.empty()) {
            MapPiece& q = fused.back();
            bool same_slope = q.orient == p.orient &&
                              q.dst_len() * p.src_len() == p.dst_len() * q.src_len();
            bool contiguous = q.src_hi == p.src_lo &&
                              (p.orient > 0 ? q.dst_hi == p.dst_lo : q.dst_lo == p.dst_hi);
            if (same_slope && contiguous) {
                q.src_hi = p.src_hi;
                if (p.orient > 0) q.dst_hi = p.dst_hi;
                else q.dst_lo = p.dst_lo;
                continue;
            }
        }
        fused.push_back(p);
    }
    pieces_ = std::move(fused);
}

IntervalMap IntervalMap::identity() {
    return IntervalMap({MapPiece{Rational(0), Rational(1), Rational(0), Rational(1), 1}});
}

IntervalMap IntervalMap::rotation(const Rational& r) {
    if (r < 0 || r >= 1) throw std::invalid_argument("rotation: angle must lie in [0,1)");
    if (r == 0) return identity();
    Rational c(1 - r);
    return IntervalMap({MapPiece{Rational(0), c, r, Rational(1), 1},
                        MapPiece{c, Rational(1), Rational(0), r, 1}});
}

Rational IntervalMap::apply(const Rational& x) const {
    for (const MapPiece& p : pieces_)
        if (p.src_lo <= x && x < p.src_hi) return p.fwd(x);
    throw std::domain_error("IntervalMap::apply: point outside [0,1)");
}

IntervalMap IntervalMap::inverse() const {
    std::vector<MapPiece> inv;
    inv.reserve(pieces_.size());
    for (const MapPiece& p : pieces_)
        inv.push_back(MapPiece{p.dst_lo, p.dst_hi, p.src_lo, p.src_hi, p.orient});
    return IntervalMap(std::move(inv));
}

IntervalMap IntervalMap::compose(const IntervalMap& inner) const {
    std::vector<MapPiece> out;
    for (const MapPiece& p : inner.pieces_) {
        for (const MapPiece& q : pieces_) {
            Rational lo = std::max(p.dst_lo, q.src_lo);
            Rational hi = std::min(p.dst_hi, q.src_hi);
            if (!(lo < hi)) continue;
            MapPiece r;
            r.orient = p.orient * q.orient;
            if (p.orient > 0) {
                r.src_lo = p.inv(lo);
                r.src_hi = p.inv(hi);
            } else {
                r.src_lo = p.inv(hi);
                r.src_hi = p.inv(lo);
            }
            if (q.orient > 0) {
                r.dst_lo = q.fwd(lo);
                r.dst_hi = q.fwd(hi);
            } else {
                r.dst_lo = q.fwd(hi);
                r.dst_hi = q.fwd(lo);
            }
            out.push_back(std::move(r));
        }
    }
    return IntervalMap(std::move(out));
}

namespace {

struct ValuePiece {
    Rational lo, hi, value;
};

StepFn assemble(std::vector<ValuePiece> vp) {
    std::sort(vp.begin(), vp.end(),
              [](const ValuePiece& a, const ValuePiece& b) { return a.lo < b.lo; });
    std::vector<Rational> breaks{Rational(0)};
    std::vector<Rational> vals;
    Rational cursor(0);
    for (const ValuePiece& p : vp) {
        if (p.lo > cursor) {
            breaks.push_back(p.lo);
            vals.push_back(Rational(0));
            cursor = p.lo;
        } else if (p.lo < cursor) {
            throw std::logic_error("assemble: overlapping value pieces");
        }
        breaks.push_back(p.hi);
        vals.push_back(p.value);
        cursor = p.hi;
    }
    if (cursor < 1) {
        breaks.push_back(Rational(1));
        vals.push_back(Rational(0));
    }
    return StepFn(std::move(breaks), std::move(vals));
}

// transport the graph of f over [p.src_lo, p.src_hi) onto the target,
// scaling values by `scale`
void transport_piece(const MapPiece& p, const StepFn& f, const Rational& scale,
                     std::vector<ValuePiece>& out) {
    std::vector<Rational> cuts{p.src_lo};
    for (const Rational& b : f.breakpoints())
        if (p.src_lo < b && b < p.src_hi) cuts.push_back(b);
    cuts.push_back(p.src_hi);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational v(scale * f.at(cuts[i]));
        Rational t1 = p.fwd(cuts[i]);
        Rational t2 = p.fwd(cuts[i + 1]);
        if (p.orient > 0) out.push_back({t1, t2, v});
        else out.push_back({t2, t1, v});
    }
}

}  // namespace

StepFn IntervalMap::pushforward_values(const StepFn& f) const {
    std::vector<ValuePiece> out;
    for (const MapPiece& p : pieces_) transport_piece(p, f, Rational(1), out);
    return assemble(std::move(out));
}

StepFn IntervalMap::rn_derivative() const {
    std::vector<ValuePiece> out;
    out.reserve(pieces_.size());
    for (const MapPiece& p : pieces_)
        out.push_back({p.dst_lo, p.dst_hi, Rational(p.src_len() / p.dst_len())});
    return assemble(std::move(out));
}

// ----------------------------------------------------------------- L1Iso

L1Iso::L1Iso(IntervalMap m) : map(std::move(m)), sign(StepFn::constant(Rational(1))) {}

L1Iso::L1Iso(IntervalMap m, StepFn s) : map(std::move(m)), sign(std::move(s)) {
    for (const Rational& v : sign.values())
        if (v != 1 && v != -1) throw std::invalid_argument("L1Iso: sign must take values ±1");
}

StepFn L1Iso::apply(const StepFn& f) const {
    std::vector<ValuePiece> out;
    for (const MapPiece& p : map.pieces())
        transport_piece(p, f, Rational(p.src_len() / p.dst_len()), out);
    return assemble(std::move(out)) * sign;
}

L1Iso L1Iso::compose(const L1Iso& other) const {
    return L1Iso(map.compose(other.map), sign * map.pushforward_values(other.sign));
}

L1Iso L1Iso::inverse() const {
    IntervalMap phi_inv = map.inverse();
    return L1Iso(phi_inv, phi_inv.pushforward_values(sign));
}

std::pair<L1Iso, L1Iso> f2_counterexample() {
    Rational third = rat(1, 3);
    Rational two_thirds = rat(2, 3);
    IntervalMap stretch({MapPiece{Rational(0), third, Rational(0), two_thirds, 1},
                         MapPiece{third, Rational(1), two_thirds, Rational(1), 1}});
    return {L1Iso(std::move(stretch)), L1Iso(IntervalMap::rotation(third))};
}

L1Iso eval_word(const GenWord& w, const L1Iso& a, const L1Iso& b) {
    L1Iso acc = L1Iso::identity_iso();
    for (const Letter& l : w.letters()) {
        if (l.gen < 0 || l.gen > 1) throw std::invalid_argument("eval_word: word over {a,b} expected");
        const L1Iso& g = l.gen == 0 ? a : b;
        acc = acc.compose(l.inverse ? g.inverse() : g);
    }
    return acc;
}

// -------------------------------------------------------------- FDAction

FDAction FDAction::integers() { return FDAction(Kind::Integers, 0); }

FDAction FDAction::cyclic(int order) {
    if (order < 1) throw std::invalid_argument("cyclic: order must be positive");
    return FDAction(Kind::Cyclic, order);
}

FDAction FDAction::free_group(int rank) {
    if (rank < 1 || rank > 26) throw std::invalid_argument("free_group: rank must be in 1..26");
    return FDAction(Kind::Free, rank);
}

int FDAction::num_generators() const { return kind_ == Kind::Free ? param_ : 1; }

long FDAction::num_elements() const { return kind_ == Kind::Cyclic ? param_ : -1; }

FDAction::Elem FDAction::identity() const { return Elem{}; }

FDAction::Elem FDAction::generator(int i) const {
    if (i < 0 || i >= num_generators()) throw std::invalid_argument("generator index out of range");
    Elem e;
    if (kind_ == Kind::Free) e.w = GenWord::generator(i);
    else if (kind_ == Kind::Cyclic) e.n = 1 % param_;
    else e.n = 1;
    return e;
}

FDAction::Elem FDAction::mul(const Elem& a, const Elem& b) const {
    Elem e;
    if (kind_ == Kind::Free) {
        e.w = a.w * b.w;
    } else {
        e.n = a.n + b.n;
        if (kind_ == Kind::Cyclic) e.n = ((e.n % param_) + param_) % param_;
    }
    return e;
}

FDAction::Elem FDAction::inv(const Elem& a) const {
    Elem e;
    if (kind_ == Kind::Free) e.w = a.w.inverse();
    else if (kind_ == Kind::Cyclic) e.n = (param_ - a.n % param_) % param_;
    else e.n = -a.n;
    return e;
}

bool FDAction::is_identity(const Elem& a) const {
    return kind_ == Kind::Free ? a.w.empty() : a.n == 0;
}

bool FDAction::elem_eq(const Elem& a, const Elem& b) const {
    return kind_ == Kind::Free ? a.w == b.w : a.n == b.n;
}

std::string FDAction::elem_str(const Elem& a) const {
    if (kind_ == Kind::Free) return a.w.str();
    return std::to_string(a.n);
}

long FDAction::index_of(const Elem& g) const {
    switch (kind_) {
        case Kind::Integers:
            if (g.n == 0) return 0;
            return g.n > 0 ? 2 * g.n - 1 : -2 * g.n;
        case Kind::Cyclic:
            if (g.n < 0 || g.n >= param_) throw std::invalid_argument("cyclic element out of range");
            return g.n;
        case Kind::Free: {
            long k = param_;
            long count = 1;  // identity
            long len = static_cast<long>(g.w.size());
            long index = 0;
            for (long l = 1; l < len; ++l) {
                long words_of_l = 2 * k;
                for (long j = 1; j < l; ++j) words_of_l *= 2 * k - 1;
                count += words_of_l;
            }
            index = len == 0 ? 0 : count;
            // rank within the words of this length
            long prev_rank = -1;
            long remaining = len;
            for (const Letter& l : g.w.letters()) {
                long r = l.gen * 2 + (l.inverse ? 1 : 0);
                long slot;
                if (prev_rank < 0) {
                    slot = r;
                } else {
                    long forbidden = prev_rank ^ 1;  // the inverse of the previous letter
                    slot = r - (r > forbidden ? 1 : 0);
                    if (r == forbidden) throw std::logic_error("unreduced word");
                }
                long tail = 1;
                for (long j = 1; j < remaining; ++j) tail *= 2 * k - 1;
                index += slot * tail;
                prev_rank = r;
                --remaining;
            }
            return index;
        }
    }
    throw std::logic_error("unreachable");
}

FDAction::Elem FDAction::elem_at(long index) const {
    if (index < 0) throw std::invalid_argument("negative enumeration index");
    Elem e;
    switch (kind_) {
        case Kind::Integers:
            e.n = index == 0 ? 0 : (index % 2 == 1 ? (index + 1) / 2 : -index / 2);
            return e;
        case Kind::Cyclic:
            if (index >= param_) throw std::invalid_argument("cyclic index out of range");
            e.n = index;
            return e;
        case Kind::Free: {
            long k = param_;
            if (index == 0) return e;
            long len = 1;
            long rest = index - 1;
            long words_of_l = 2 * k;
            while (rest >= words_of_l) {
                rest -= words_of_l;
                words_of_l *= 2 * k - 1;
                ++len;
            }
            long prev_rank = -1;
            for (long pos = 0; pos < len; ++pos) {
                long choices = prev_rank < 0 ? 2 * k : 2 * k - 1;
                long tail = 1;
                for (long j = pos + 1; j < len; ++j) tail *= 2 * k - 1;
                long slot = rest / tail;
                rest %= tail;
                (void)choices;
                long r = slot;
                if (prev_rank >= 0) {
                    long forbidden = prev_rank ^ 1;
                    if (r >= forbidden) ++r;
                }
                e.w.push(Letter{static_cast<int>(r / 2), (r % 2) != 0});
                prev_rank = r;
            }
            return e;
        }
    }
    throw std::logic_error("unreachable");
}

std::pair<Rational, Rational> FDAction::shell(long index) const {
    if (index < 0) throw std::invalid_argument("negative shell index");
    if (kind_ == Kind::Cyclic) {
        if (index >= param_) throw std::invalid_argument("shell index out of range");
        Rational lo(1 - pow2(-index));
        Rational hi = index == param_ - 1 ? Rational(1) : Rational(1 - pow2(-index - 1));
        return {lo, hi};
    }
    return {Rational(1 - pow2(-index)), Rational(1 - pow2(-index - 1))};
}

Rational FDAction::domain_measure() const {
    auto [lo, hi] = shell(0);
    return Rational(hi - lo);
}

std::pair<Rational, Rational> FDAction::cell(int n, int i) const {
    if (n < 1 || i < 1 || i > n) throw std::invalid_argument("cell: need 1 <= i <= n");
    auto [lo, hi] = shell(0);
    Rational width((hi - lo) / n);
    return {Rational(lo + (i - 1) * width), Rational(lo + i * width)};
}

MapPiece FDAction::transport(const Elem& g, const Elem& h) const {
    auto [slo, shi] = shell_of(h);
    auto [dlo, dhi] = shell_of(mul(g, h));
    return MapPiece{slo, shi, dlo, dhi, 1};
}

StepFn FDAction::apply(const Elem& g, const StepFn& f) const {
    long shells;
    if (kind_ == Kind::Cyclic) {
        shells = param_;
    } else {
        Rational c = f.support_end();
        if (c == 0) return StepFn();
        shells = 0;
        Rational covered(1 - pow2(-shells));
        while (covered < c) {
            ++shells;
            if (shells > 4096) throw std::invalid_argument("FDAction::apply: support reaches 1");
            covered = 1 - pow2(-shells);
        }
    }
    std::vector<ValuePiece> out;
    for (long k = 0; k < shells; ++k) {
        Elem h = elem_at(k);
        MapPiece t = transport(g, h);
        transport_piece(t, f, Rational(t.src_len() / t.dst_len()), out);
    }
    StepFn result = assemble(std::move(out));
    return result;
}

IntervalMap FDAction::generator_map(int gen, long depth) const {
    if (depth < 0) throw std::invalid_argument("generator_map: negative depth");
    Elem g = generator(gen);
    long shells = kind_ == Kind::Cyclic ? param_ : depth + 1;
    std::vector<MapPiece> pieces;
    std::vector<std::pair<Rational, Rational>> used;
    for (long k = 0; k < shells; ++k) {
        MapPiece t = transport(g, elem_at(k));
        used.emplace_back(t.dst_lo, t.dst_hi);
        pieces.push_back(std::move(t));
    }
    if (kind_ != Kind::Cyclic) {
        // close off the tail [1-2^-shells, 1) onto the uncovered targets,
        // splitting the source proportionally to the gap lengths
        std::sort(used.begin(), used.end());
        std::vector<std::pair<Rational, Rational>> gaps;
        Rational cursor(0);
        Rational gap_total(0);
        for (const auto& [lo, hi] : used) {
            if (lo > cursor) {
                gaps.emplace_back(cursor, lo);
                gap_total += lo - cursor;
            }
            cursor = hi;
        }
        if (cursor < 1) {
            gaps.emplace_back(cursor, Rational(1));
            gap_total += 1 - cursor;
        }
        Rational src_lo(1 - pow2(-shells));
        Rational src_len(pow2(-shells));
        Rational src_cursor = src_lo;
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            const auto& [lo, hi] = gaps[i];
            Rational next = i + 1 == gaps.size()
                                ? Rational(1)
                                : Rational(src_cursor + src_len * (hi - lo) / gap_total);
            pieces.push_back(MapPiece{src_cursor, next, lo, hi, 1});
            src_cursor = next;
        }
    }
    return IntervalMap(std::move(pieces));
}

// ------------------------------------------------------------- TruncVec

Rational l1_entries(const TruncVec& v) {
    Rational total(0);
    for (const auto& e : v.entries) total += rat_abs(e.value);
    return total;
}

nlohmann::ordered_json to_json(const TruncVec& v) {
    nlohmann::ordered_json j;
    j["n"] = v.n;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : v.entries)
        j["entries"].push_back({{"g", e.g}, {"i", e.i}, {"value", to_string(e.value)}});
    j["tail_bound"] = to_string(v.tail_bound);
    return j;
}

TruncVec pn_apply(const FDAction& act, int n, const StepFn& f,
                  const std::vector<FDAction::Elem>& trunc) {
    if (n < 1) throw std::invalid_argument("pn_apply: n must be positive");
    bool has_id = false;
    for (const auto& g : trunc) has_id = has_id || act.is_identity(g);
    if (!has_id) throw std::invalid_argument("pn_apply: truncation must contain the identity");

    std::map<long, FDAction::Elem> by_index;
    for (const auto& g : trunc) by_index.emplace(act.index_of(g), g);

    TruncVec v;
    v.n = n;
    StepFn absf = f.abs();
    Rational covered(0);
    for (const auto& [gidx, g] : by_index) {
        FDAction::Elem e = act.identity();
        MapPiece t = act.transport(g, e);
        for (int i = 1; i <= n; ++i) {
            auto [clo, chi] = act.cell(n, i);
            Rational u1 = t.fwd(clo);
            Rational u2 = t.fwd(chi);
            v.entries.push_back({gidx, act.elem_str(g), i, f.integral(u1, u2)});
        }
        covered += absf.integral(t.dst_lo, t.dst_hi);
    }
    v.tail_bound = l1_norm(f) - covered;
    return v;
}

CertReal lp_norm(const TruncVec& v, const Rational& p, const Rational& precision) {
    if (p < 1) throw std::domain_error("lp_norm: need p >= 1");
    if (p == 1) return CertReal(l1_entries(v));
    if (p == 2) {
        Rational radicand(0);
        for (const auto& e : v.entries) radicand += e.value * e.value;
        return cert_sqrt(radicand, precision);
    }
    Rational inner_prec = precision;
    std::size_t count = std::max<std::size_t>(1, v.entries.size());
    inner_prec /= static_cast<long>(4 * count);
    Rational inv_p(p.get_den(), p.get_num());
    for (int attempt = 0; attempt < 8; ++attempt) {
        CertReal sum{Rational(0), Rational(0)};
        for (const auto& e : v.entries) {
            if (e.value == 0) continue;
            sum = sum + cert_pow(rat_abs(e.value), p, inner_prec);
        }
        CertReal result = cert_pow(sum, inv_p, inner_prec);
        if (result.rad <= precision) return result;
        inner_prec /= 16;
    }
    throw std::logic_error("lp_norm: failed to meet precision target");
}

std::optional<FindNpResult> find_np(const FDAction& act, const StepFn& f, const Rational& ratio,
                                    int max_n, long max_trunc) {
    if (!(ratio > 0 && ratio < 1)) throw std::domain_error("find_np: ratio must lie in (0,1)");
    Rational norm = l1_norm(f);
    if (norm == 0) throw std::domain_error("find_np: f must be nonzero");
    Rational target(ratio * norm);
    const Rational ps[] = {rat(2), rat(3, 2), rat(5, 4), rat(9, 8)};
    for (long m = 1; m <= max_trunc; m *= 2) {
        std::vector<FDAction::Elem> trunc;
        long limit = act.num_elements() >= 0 ? std::min(m, act.num_elements()) : m;
        for (long k = 0; k < limit; ++k) trunc.push_back(act.elem_at(k));
        for (int n = 1; n <= max_n; ++n) {
            TruncVec v = pn_apply(act, n, f, trunc);
            if (l1_entries(v) < target) continue;
            for (const Rational& p : ps) {
                CertReal val = lp_norm(v, p, pow2(-64));
                if (val.lo() >= target)
                    return FindNpResult{n, p, val, static_cast<long>(trunc.size())};
            }
        }
        if (act.num_elements() >= 0 && m >= act.num_elements()) break;
    }
    return std::nullopt;
}

}  // namespace renormlab
