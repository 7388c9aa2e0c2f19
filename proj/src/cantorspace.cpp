#include "renormlab/cantorspace.hpp"

#include <algorithm>

namespace renormlab {

std::string to_string(const XPoint& x) {
    if (x.tag == XPoint::Tag::Marker)
        return "marker(" + std::to_string(x.kind) + "," + std::to_string(x.offset) + ")";
    return "const(" + std::to_string(x.cval) + ")";
}

int x_eval(const XPoint& x, long k) {
    if (x.tag == XPoint::Tag::Const) return x.cval;
    if (k == x.offset) return 0;
    return k > x.offset ? x.kind : -x.kind;
}

XPoint shift(const XPoint& x, long power) {
    if (x.tag == XPoint::Tag::Const) return x;
    return XPoint::marker(x.kind, x.offset + power);
}

XPoint swap_map(const XPoint& x) {
    if (x.tag == XPoint::Tag::Marker && x.offset == 0) return XPoint::marker(3 - x.kind, 0);
    return x;
}

const char* to_string(XClass c) {
    switch (c) {
        case XClass::A: return "A";
        case XClass::B: return "B";
        case XClass::C: return "C";
        case XClass::D: return "D";
        default: return "E";
    }
}

Classifier marker_classifier() {
    return [](int s0, int s1) -> XClass {
        if ((s0 == 1 && s1 == 1) || (s0 == 2 && s1 == 2)) return XClass::A;
        if (s0 == 0 && s1 == 1) return XClass::B;
        if (s0 == 0 && s1 == 2) return XClass::C;
        if ((s0 == -1 && s1 == 0) || (s0 == -1 && s1 == -1)) return XClass::D;
        if ((s0 == -2 && s1 == 0) || (s0 == -2 && s1 == -2)) return XClass::E;
        throw std::logic_error("classify: symbol pattern not realized on X");
    };
}

Classifier mutated_classifier() {
    return [](int s0, int s1) -> XClass {
        if ((s0 == 1 && s1 == 1) || (s0 == 2 && s1 == 2)) return XClass::A;
        if (s0 == 0 && s1 == 1) return XClass::B;
        if (s0 == 0 && s1 == 2) return XClass::C;
        if ((s0 == -2 && s1 == 0) || (s0 == -2 && s1 == -2)) return XClass::D;
        if ((s0 == -1 && s1 == 0) || (s0 == -1 && s1 == -1)) return XClass::E;
        throw std::logic_error("classify: symbol pattern not realized on X");
    };
}

XClass classify_with(const Classifier& cl, const XPoint& x) {
    return cl(x_eval(x, 0), x_eval(x, 1));
}

XClass classify(const XPoint& x) {
    static const Classifier cl = marker_classifier();
    return classify_with(cl, x);
}

Rational eval_partition_fn(const PartFn& f, const XPoint& x) { return f.at_class(classify(x)); }

PartFn obstruction_f() {
    PartFn f;
    f.values[static_cast<std::size_t>(XClass::A)] = rat(1, 2);
    f.values[static_cast<std::size_t>(XClass::B)] = 1;
    f.values[static_cast<std::size_t>(XClass::D)] = 1;
    return f;
}

PartFn obstruction_f_prime() {
    PartFn f;
    f.values[static_cast<std::size_t>(XClass::A)] = rat(1, 2);
    f.values[static_cast<std::size_t>(XClass::C)] = 1;
    f.values[static_cast<std::size_t>(XClass::D)] = 1;
    return f;
}

// -------------------------------------------------------------------- XFn

namespace {
int const_slot(int v) {
    switch (v) {
        case -2: return 0;
        case -1: return 1;
        case 1: return 2;
        default: return 3;
    }
}
const int kConstVals[4] = {-2, -1, 1, 2};
}  // namespace

XFn::XFn(long band) : band_(band) {
    if (band_ < 1) throw std::invalid_argument("XFn: band must be >= 1");
    for (int k = 0; k < 2; ++k) window_[k].assign(static_cast<std::size_t>(2 * band_ + 1), Rational(0));
}

Rational XFn::marker_value(int kind, long offset) const {
    const auto& w = window_[kind - 1];
    if (offset < -band_) return left_tail_[kind - 1];
    if (offset > band_) return right_tail_[kind - 1];
    return w[static_cast<std::size_t>(offset + band_)];
}

Rational& XFn::marker_slot(int kind, long offset) {
    return window_[kind - 1][static_cast<std::size_t>(offset + band_)];
}

Rational XFn::eval(const XPoint& x) const {
    if (x.tag == XPoint::Tag::Const) return consts_[static_cast<std::size_t>(const_slot(x.cval))];
    return marker_value(x.kind, x.offset);
}

Rational XFn::sup() const {
    Rational m(0);
    for (int k = 0; k < 2; ++k) {
        for (const Rational& v : window_[k]) m = std::max(m, rat_abs(v));
        m = std::max(m, rat_abs(left_tail_[k]));
        m = std::max(m, rat_abs(right_tail_[k]));
    }
    for (const Rational& v : consts_) m = std::max(m, rat_abs(v));
    return m;
}

void XFn::reduce() {
    while (band_ > 1) {
        bool ok = true;
        for (int k = 0; k < 2; ++k)
            ok = ok && marker_value(k + 1, -band_) == left_tail_[k] &&
                 marker_value(k + 1, band_) == right_tail_[k];
        if (!ok) break;
        for (int k = 0; k < 2; ++k) {
            std::vector<Rational> w(window_[k].begin() + 1, window_[k].end() - 1);
            window_[k] = std::move(w);
        }
        --band_;
    }
}

XFn XFn::from_partition_with(const Classifier& cl, const PartFn& f) {
    XFn out(2);
    for (int k = 1; k <= 2; ++k) {
        for (long n = -2; n <= 2; ++n)
            out.marker_slot(k, n) = f.at_class(classify_with(cl, XPoint::marker(k, n)));
        out.left_tail_[k - 1] = f.at_class(classify_with(cl, XPoint::marker(k, -3)));
        out.right_tail_[k - 1] = f.at_class(classify_with(cl, XPoint::marker(k, 3)));
    }
    for (int v : kConstVals)
        out.consts_[static_cast<std::size_t>(const_slot(v))] =
            f.at_class(classify_with(cl, XPoint::constant(v)));
    out.reduce();
    return out;
}

XFn XFn::from_partition(const PartFn& f) { return from_partition_with(marker_classifier(), f); }

XFn XFn::shift_pullback(long power) const {
    // (result)(marker(k,n)) = eval(marker(k, n - power))
    long apow = power < 0 ? -power : power;
    XFn out(band_ + apow);
    for (int k = 1; k <= 2; ++k) {
        for (long n = -out.band_; n <= out.band_; ++n) out.marker_slot(k, n) = marker_value(k, n - power);
        out.left_tail_[k - 1] = left_tail_[k - 1];
        out.right_tail_[k - 1] = right_tail_[k - 1];
    }
    out.consts_ = consts_;
    out.reduce();
    return out;
}

XFn XFn::swap_pullback() const {
    XFn out = *this;
    std::swap(out.marker_slot(1, 0), out.marker_slot(2, 0));
    out.reduce();
    return out;
}

XFn XFn::binop(const XFn& a, const XFn& b,
               const std::function<Rational(const Rational&, const Rational&)>& op) {
    XFn out(std::max(a.band_, b.band_));
    for (int k = 1; k <= 2; ++k) {
        for (long n = -out.band_; n <= out.band_; ++n)
            out.marker_slot(k, n) = op(a.marker_value(k, n), b.marker_value(k, n));
        out.left_tail_[k - 1] = op(a.left_tail_[k - 1], b.left_tail_[k - 1]);
        out.right_tail_[k - 1] = op(a.right_tail_[k - 1], b.right_tail_[k - 1]);
    }
    for (std::size_t i = 0; i < 4; ++i) out.consts_[i] = op(a.consts_[i], b.consts_[i]);
    out.reduce();
    return out;
}

XFn XFn::operator+(const XFn& o) const {
    return binop(*this, o, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}
XFn XFn::operator-(const XFn& o) const {
    return binop(*this, o, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}
XFn operator*(const Rational& c, const XFn& f) {
    XFn out = f;
    for (int k = 0; k < 2; ++k) {
        for (auto& v : out.window_[k]) v *= c;
        out.left_tail_[k] *= c;
        out.right_tail_[k] *= c;
    }
    for (auto& v : out.consts_) v *= c;
    out.reduce();
    return out;
}

bool XFn::operator==(const XFn& o) const {
    long b = std::max(band_, o.band_);
    for (int k = 1; k <= 2; ++k) {
        if (left_tail_[k - 1] != o.left_tail_[k - 1]) return false;
        if (right_tail_[k - 1] != o.right_tail_[k - 1]) return false;
        for (long n = -b; n <= b; ++n)
            if (marker_value(k, n) != o.marker_value(k, n)) return false;
    }
    return consts_ == o.consts_;
}

nlohmann::ordered_json XFn::to_json() const {
    nlohmann::ordered_json j;
    j["band"] = band_;
    for (int k = 1; k <= 2; ++k) {
        nlohmann::ordered_json jk;
        jk["left_tail"] = to_string(left_tail_[k - 1]);
        jk["window"] = nlohmann::ordered_json::array();
        for (const Rational& v : window_[k - 1]) jk["window"].push_back(to_string(v));
        jk["right_tail"] = to_string(right_tail_[k - 1]);
        j["kind" + std::to_string(k)] = std::move(jk);
    }
    j["consts"] = nlohmann::ordered_json::array();
    for (const Rational& v : consts_) j["consts"].push_back(to_string(v));
    return j;
}

XFn act_subshift(const GenWord& w, const XFn& f) {
    XFn out = f;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        if (it->gen == 0) out = out.shift_pullback(it->inverse ? -1 : 1);
        else if (it->gen == 1) out = out.swap_pullback();
        else throw std::invalid_argument("act_subshift: word over {shift, swap} expected");
    }
    return out;
}

// ------------------------------------------------- symbolic offset ranges

namespace {

// subset of X given by per-kind offset ranges plus a constant set
struct ZRange {
    bool lo_inf = false, hi_inf = false;
    long lo = 0, hi = 0;  // inclusive where finite
};

struct SymSet {
    std::vector<ZRange> offsets[2];
    std::array<bool, 4> consts{};

    static SymSet everything() {
        SymSet s;
        ZRange all;
        all.lo_inf = all.hi_inf = true;
        s.offsets[0] = {all};
        s.offsets[1] = {all};
        s.consts = {true, true, true, true};
        return s;
    }
};

bool range_contains(const ZRange& r, long n) {
    return (r.lo_inf || n >= r.lo) && (r.hi_inf || n <= r.hi);
}

bool symset_contains_marker(const SymSet& s, int kind, long n) {
    for (const ZRange& r : s.offsets[kind - 1])
        if (range_contains(r, n)) return true;
    return false;
}

std::vector<ZRange> normalize(std::vector<ZRange> rs) {
    // drop empties, sort, fuse overlapping/adjacent
    std::vector<ZRange> clean;
    for (const ZRange& r : rs) {
        if (!r.lo_inf && !r.hi_inf && r.lo > r.hi) continue;
        clean.push_back(r);
    }
    std::sort(clean.begin(), clean.end(), [](const ZRange& a, const ZRange& b) {
        if (a.lo_inf != b.lo_inf) return a.lo_inf;
        if (a.lo_inf) return false;
        return a.lo < b.lo;
    });
    std::vector<ZRange> out;
    for (const ZRange& r : clean) {
        if (!out.empty()) {
            ZRange& p = out.back();
            bool joinable = p.hi_inf || r.lo_inf || r.lo <= p.hi + 1;
            if (joinable) {
                p.hi_inf = p.hi_inf || r.hi_inf;
                if (!p.hi_inf) p.hi = std::max(p.hi, r.hi);
                continue;
            }
        }
        out.push_back(r);
    }
    return out;
}

SymSet symset_union(const SymSet& a, const SymSet& b) {
    SymSet s;
    for (int k = 0; k < 2; ++k) {
        std::vector<ZRange> rs = a.offsets[k];
        rs.insert(rs.end(), b.offsets[k].begin(), b.offsets[k].end());
        s.offsets[k] = normalize(std::move(rs));
    }
    for (int i = 0; i < 4; ++i) s.consts[static_cast<std::size_t>(i)] =
        a.consts[static_cast<std::size_t>(i)] || b.consts[static_cast<std::size_t>(i)];
    return s;
}

bool symset_eq(const SymSet& a, const SymSet& b) {
    if (a.consts != b.consts) return false;
    for (int k = 0; k < 2; ++k) {
        std::vector<ZRange> ra = normalize(a.offsets[k]);
        std::vector<ZRange> rb = normalize(b.offsets[k]);
        if (ra.size() != rb.size()) return false;
        for (std::size_t i = 0; i < ra.size(); ++i) {
            const ZRange &x = ra[i], &y = rb[i];
            if (x.lo_inf != y.lo_inf || x.hi_inf != y.hi_inf) return false;
            if (!x.lo_inf && x.lo != y.lo) return false;
            if (!x.hi_inf && x.hi != y.hi) return false;
        }
    }
    return true;
}

SymSet symset_shift(const SymSet& a, long d) {
    SymSet s = a;
    for (int k = 0; k < 2; ++k)
        for (ZRange& r : s.offsets[k]) {
            if (!r.lo_inf) r.lo += d;
            if (!r.hi_inf) r.hi += d;
        }
    return s;
}

SymSet symset_swap(const SymSet& a) {
    // the swap exchanges the kind-1 and kind-2 markers at offset 0
    SymSet s = a;
    bool in1 = symset_contains_marker(a, 1, 0);
    bool in2 = symset_contains_marker(a, 2, 0);
    if (in1 == in2) return s;
    for (int k = 0; k < 2; ++k) {
        bool want = (k == 0) ? in2 : in1;
        std::vector<ZRange> rs;
        for (const ZRange& r : s.offsets[k]) {
            if (!range_contains(r, 0)) {
                rs.push_back(r);
                continue;
            }
            ZRange left = r, right = r;
            left.hi_inf = false;
            left.hi = -1;
            right.lo_inf = false;
            right.lo = 1;
            rs.push_back(left);
            rs.push_back(right);
        }
        if (want) {
            ZRange zero;
            zero.lo = zero.hi = 0;
            rs.push_back(zero);
        }
        s.offsets[k] = normalize(std::move(rs));
    }
    return s;
}

// a witness point in the symmetric difference of two symbolic sets
std::string symset_diff_witness(const SymSet& a, const SymSet& b) {
    for (int k = 1; k <= 2; ++k) {
        std::vector<long> probes{0, 1, -1, 2, -2, 3, -3};
        for (const SymSet* s : {&a, &b})
            for (const ZRange& r : s->offsets[k - 1]) {
                if (!r.lo_inf) probes.push_back(r.lo);
                if (!r.hi_inf) probes.push_back(r.hi);
            }
        for (long n : probes)
            if (symset_contains_marker(a, k, n) != symset_contains_marker(b, k, n))
                return to_string(XPoint::marker(k, n));
    }
    for (int i = 0; i < 4; ++i)
        if (a.consts[static_cast<std::size_t>(i)] != b.consts[static_cast<std::size_t>(i)])
            return to_string(XPoint::constant(kConstVals[i]));
    return "";
}

// the set of one class under a classifier, assembled from the four
// offset regimes (n <= -1, n = 0, n = 1, n >= 2) and the constants
SymSet class_symset(const Classifier& cl, XClass target) {
    SymSet s;
    for (int k = 1; k <= 2; ++k) {
        struct Regime {
            ZRange range;
            long rep;
        };
        ZRange le;
        le.lo_inf = true;
        le.hi = -1;
        ZRange eq0;
        eq0.lo = eq0.hi = 0;
        ZRange eq1;
        eq1.lo = eq1.hi = 1;
        ZRange ge2;
        ge2.lo = 2;
        ge2.hi_inf = true;
        for (const Regime& rg : {Regime{le, -1}, Regime{eq0, 0}, Regime{eq1, 1}, Regime{ge2, 2}})
            if (classify_with(cl, XPoint::marker(k, rg.rep)) == target)
                s.offsets[k - 1].push_back(rg.range);
        s.offsets[k - 1] = normalize(s.offsets[k - 1]);
    }
    for (int v : kConstVals)
        if (classify_with(cl, XPoint::constant(v)) == target)
            s.consts[static_cast<std::size_t>(const_slot(v))] = true;
    return s;
}

std::vector<XPoint> window_points(long window) {
    std::vector<XPoint> pts;
    for (int k = 1; k <= 2; ++k)
        for (long n = -window; n <= window; ++n) pts.push_back(XPoint::marker(k, n));
    for (int v : kConstVals) pts.push_back(XPoint::constant(v));
    return pts;
}

}  // namespace

nlohmann::ordered_json CoverReport::to_json() const {
    nlohmann::ordered_json j;
    j["window"] = window;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["exhaustive"] = c.exhaustive_pass ? "PASS" : "FAIL";
        jc["symbolic"] = c.symbolic_pass ? "PASS" : "FAIL";
        if (!c.witness.empty()) jc["witness"] = c.witness;
        j["checks"].push_back(std::move(jc));
    }
    j["verdict"] = all_pass() ? "PASS" : "FAIL";
    return j;
}

CoverReport verify_cover_identities_with(const Classifier& cl, long window) {
    if (window < 2) throw std::invalid_argument("verify_cover_identities: window must be >= 2");
    CoverReport report;
    report.window = window;
    std::vector<XPoint> pts = window_points(window);

    auto membership = [&](XClass c) {
        return [&, c](const XPoint& x) { return classify_with(cl, x) == c; };
    };

    {  // partition: all five classes nonempty, classifier total on the window
        CoverCheck chk;
        chk.name = "partition";
        chk.exhaustive_pass = true;
        std::array<bool, 5> seen{};
        try {
            for (const XPoint& x : pts) seen[static_cast<std::size_t>(classify_with(cl, x))] = true;
        } catch (const std::exception&) {
            chk.exhaustive_pass = false;
            chk.witness = "classifier not total";
        }
        for (bool b : seen) chk.exhaustive_pass = chk.exhaustive_pass && b;
        SymSet all = SymSet::everything();
        SymSet uni;
        bool disjoint = true;
        for (int ci = 0; ci < 5; ++ci) {
            SymSet s = class_symset(cl, static_cast<XClass>(ci));
            for (int cj = 0; cj < ci; ++cj) {
                SymSet t = class_symset(cl, static_cast<XClass>(cj));
                for (int k = 1; k <= 2; ++k)
                    for (long n = -3; n <= 3; ++n)
                        if (symset_contains_marker(s, k, n) && symset_contains_marker(t, k, n))
                            disjoint = false;
            }
            uni = symset_union(uni, s);
        }
        chk.symbolic_pass = disjoint && symset_eq(uni, all);
        if (!chk.symbolic_pass && chk.witness.empty()) chk.witness = symset_diff_witness(uni, all);
        report.checks.push_back(std::move(chk));
    }

    struct ImageCase {
        std::string name;
        std::vector<XClass> src;
        std::vector<XClass> dst;
    };
    const ImageCase image_cases[] = {
        {"shift[A] = A∪B∪C", {XClass::A}, {XClass::A, XClass::B, XClass::C}},
        {"shift[B∪D] = D", {XClass::B, XClass::D}, {XClass::D}},
        {"shift[C∪E] = E", {XClass::C, XClass::E}, {XClass::E}},
    };
    for (const ImageCase& ic : image_cases) {
        CoverCheck chk;
        chk.name = ic.name;
        chk.exhaustive_pass = true;
        for (const XPoint& x : pts) {
            bool in_src = false, in_dst = false;
            for (XClass c : ic.src) in_src = in_src || membership(c)(x);
            for (XClass c : ic.dst) in_dst = in_dst || membership(c)(x);
            if (in_src && ![&] {
                    XPoint y = shift(x, 1);
                    for (XClass c : ic.dst)
                        if (membership(c)(y)) return true;
                    return false;
                }()) {
                chk.exhaustive_pass = false;
                chk.witness = to_string(x);
                break;
            }
            if (in_dst && ![&] {
                    XPoint y = shift(x, -1);
                    for (XClass c : ic.src)
                        if (membership(c)(y)) return true;
                    return false;
                }()) {
                chk.exhaustive_pass = false;
                chk.witness = to_string(x) + " (preimage)";
                break;
            }
        }
        SymSet src, dst;
        for (XClass c : ic.src) src = symset_union(src, class_symset(cl, c));
        for (XClass c : ic.dst) dst = symset_union(dst, class_symset(cl, c));
        SymSet img = symset_shift(src, 1);
        chk.symbolic_pass = symset_eq(img, dst);
        if (!chk.symbolic_pass && chk.witness.empty()) chk.witness = symset_diff_witness(img, dst);
        report.checks.push_back(std::move(chk));
    }

    struct SwapCase {
        std::string name;
        XClass src, dst;
    };
    const SwapCase swap_cases[] = {
        {"swap[A] = A", XClass::A, XClass::A}, {"swap[B] = C", XClass::B, XClass::C},
        {"swap[C] = B", XClass::C, XClass::B}, {"swap[D] = D", XClass::D, XClass::D},
        {"swap[E] = E", XClass::E, XClass::E},
    };
    for (const SwapCase& sc : swap_cases) {
        CoverCheck chk;
        chk.name = sc.name;
        chk.exhaustive_pass = true;
        for (const XPoint& x : pts) {
            if (membership(sc.src)(x) && !membership(sc.dst)(swap_map(x))) {
                chk.exhaustive_pass = false;
                chk.witness = to_string(x);
                break;
            }
        }
        SymSet img = symset_swap(class_symset(cl, sc.src));
        SymSet dst = class_symset(cl, sc.dst);
        chk.symbolic_pass = symset_eq(img, dst);
        if (!chk.symbolic_pass && chk.witness.empty()) chk.witness = symset_diff_witness(img, dst);
        report.checks.push_back(std::move(chk));
    }

    {  // midpoint identity f(σ^{-1}x) = (f(x)+f'(x))/2 for every x
        CoverCheck chk;
        chk.name = "midpoint identity";
        chk.exhaustive_pass = true;
        PartFn pf = obstruction_f();
        PartFn pfp = obstruction_f_prime();
        auto eval_part = [&](const PartFn& p, const XPoint& x) {
            return p.at_class(classify_with(cl, x));
        };
        for (const XPoint& x : pts) {
            Rational lhs = eval_part(pf, shift(x, -1));
            Rational rhs((eval_part(pf, x) + eval_part(pfp, x)) / 2);
            if (lhs != rhs) {
                chk.exhaustive_pass = false;
                chk.witness = to_string(x);
                break;
            }
        }
        XFn f = XFn::from_partition_with(cl, pf);
        XFn fp = XFn::from_partition_with(cl, pfp);
        chk.symbolic_pass = f.shift_pullback(1) == rat(1, 2) * (f + fp);
        report.checks.push_back(std::move(chk));
    }

    return report;
}

CoverReport verify_cover_identities(long window) {
    return verify_cover_identities_with(marker_classifier(), window);
}

// ------------------------------------------------------------------ CylFn

CylFn::CylFn(int depth, std::vector<Rational> table) : depth_(depth), table_(std::move(table)) {
    if (depth_ < 0 || depth_ > 24) throw std::invalid_argument("CylFn: depth out of range");
    if (table_.size() != (std::size_t{1} << depth_))
        throw std::invalid_argument("CylFn: table size must be 2^depth");
    reduce();
}

void CylFn::reduce() {
    while (depth_ > 0) {
        std::size_t half = table_.size() / 2;
        bool same = true;
        for (std::size_t v = 0; v < half && same; ++v) same = table_[v] == table_[v + half];
        if (!same) break;
        table_.resize(half);
        --depth_;
    }
}

CylFn CylFn::cylinder(const std::vector<int>& bits) {
    int depth = static_cast<int>(bits.size());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("cylinder: bits must be 0/1");
        idx |= static_cast<std::size_t>(bits[i]) << i;
    }
    std::vector<Rational> table(std::size_t{1} << depth, Rational(0));
    table[idx] = 1;
    return CylFn(depth, std::move(table));
}

CylFn CylFn::at_depth(int m) const {
    if (m < depth_) throw std::invalid_argument("at_depth: cannot reduce depth");
    std::size_t mask = (std::size_t{1} << depth_) - 1;
    std::vector<Rational> table(std::size_t{1} << m);
    for (std::size_t v = 0; v < table.size(); ++v) table[v] = table_[v & mask];
    CylFn out;
    out.depth_ = m;
    out.table_ = std::move(table);  // no reduce: keep requested depth
    return out;
}

Rational CylFn::sup() const {
    Rational m(0);
    for (const Rational& v : table_) m = std::max(m, rat_abs(v));
    return m;
}

Rational CylFn::l2_sq() const {
    Rational s(0);
    for (const Rational& v : table_) s += v * v;
    return Rational(s / static_cast<long>(table_.size()));
}

CylFn CylFn::operator+(const CylFn& o) const {
    int m = std::max(depth_, o.depth_);
    CylFn a = at_depth(m), b = o.at_depth(m);
    for (std::size_t v = 0; v < a.table_.size(); ++v) a.table_[v] += b.table_[v];
    a.reduce();
    return a;
}

CylFn CylFn::operator-(const CylFn& o) const { return *this + Rational(-1) * o; }

CylFn operator*(const Rational& c, const CylFn& f) {
    CylFn out = f;
    for (auto& v : out.table_) v *= c;
    out.reduce();
    return out;
}

nlohmann::ordered_json to_json(const CylFn& f) {
    nlohmann::ordered_json j;
    j["depth"] = f.depth();
    j["table"] = nlohmann::ordered_json::array();
    for (const Rational& v : f.table()) j["table"].push_back(to_string(v));
    return j;
}

CylFn odometer_act_pow(const CylFn& f, long power) {
    long size = static_cast<long>(f.table().size());
    std::vector<Rational> table(f.table().size());
    for (long v = 0; v < size; ++v) {
        long src = ((v - power) % size + size) % size;
        table[static_cast<std::size_t>(v)] = f.table()[static_cast<std::size_t>(src)];
    }
    return CylFn(f.depth(), std::move(table));
}

CylFn odometer_act(const CylFn& f) { return odometer_act_pow(f, 1); }

CertReal odometer_sc_norm(const CylFn& f, const Rational& precision) {
    return CertReal(f.sup()) + cert_sqrt(f.l2_sq(), precision);
}

}  // namespace renormlab
