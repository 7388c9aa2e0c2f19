#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "renormlab/certreal.hpp"
#include "renormlab/rational.hpp"
#include "renormlab/word.hpp"

namespace renormlab {

// Rational step function on [0,1): value vals[i] on [breaks[i], breaks[i+1]).
// Canonical form merges adjacent equal values.
class StepFn {
public:
    StepFn() : breaks_{Rational(0), Rational(1)}, vals_{Rational(0)} {}
    StepFn(std::vector<Rational> breaks, std::vector<Rational> vals);

    static StepFn constant(const Rational& c);
    static StepFn indicator(const Rational& a, const Rational& b);  // chi_[a,b)

    const std::vector<Rational>& breakpoints() const { return breaks_; }
    const std::vector<Rational>& values() const { return vals_; }
    std::size_t pieces() const { return vals_.size(); }

    Rational at(const Rational& x) const;  // x in [0,1)
    Rational integral(const Rational& a, const Rational& b) const;  // over [a,b) ∩ [0,1)
    Rational integral() const { return integral(Rational(0), Rational(1)); }

    StepFn abs() const;
    bool is_zero() const { return vals_.size() == 1 && vals_[0] == 0; }
    bool nonnegative() const;

    // largest c with f == 0 on [c,1); returns 1 for functions with support
    // reaching the right endpoint and 0 for the zero function
    Rational support_end() const;

    StepFn operator+(const StepFn& o) const;
    StepFn operator-(const StepFn& o) const;
    StepFn operator*(const StepFn& o) const;  // pointwise
    friend StepFn operator*(const Rational& c, const StepFn& f);
    bool operator==(const StepFn& o) const { return breaks_ == o.breaks_ && vals_ == o.vals_; }
    bool operator!=(const StepFn& o) const { return !(*this == o); }

private:
    std::vector<Rational> breaks_;
    std::vector<Rational> vals_;
    void canonicalize();
    template <class Op>
    static StepFn merge(const StepFn& a, const StepFn& b, Op op);
};

Rational l1_norm(const StepFn& f);
Rational l2_sq(const StepFn& f);  // ∫ f², exact

nlohmann::ordered_json to_json(const StepFn& f);
StepFn stepfn_from_json(const nlohmann::json& j);

// Piecewise-affine bijection of [0,1) mod null sets: each piece maps a
// source interval affinely onto a target interval, orientation ±1. The
// sources and the targets each partition [0,1).
struct MapPiece {
    Rational src_lo, src_hi;
    Rational dst_lo, dst_hi;
    int orient = 1;

    Rational fwd(const Rational& x) const;
    Rational inv(const Rational& y) const;
    Rational src_len() const { return Rational(src_hi - src_lo); }
    Rational dst_len() const { return Rational(dst_hi - dst_lo); }
    bool operator==(const MapPiece& o) const {
        return src_lo == o.src_lo && src_hi == o.src_hi && dst_lo == o.dst_lo &&
               dst_hi == o.dst_hi && orient == o.orient;
    }
};

class IntervalMap {
public:
    explicit IntervalMap(std::vector<MapPiece> pieces);

    static IntervalMap identity();
    static IntervalMap rotation(const Rational& r);  // x + r mod 1

    const std::vector<MapPiece>& pieces() const { return pieces_; }
    Rational apply(const Rational& x) const;
    IntervalMap inverse() const;
    IntervalMap compose(const IntervalMap& inner) const;  // this ∘ inner

    // density of the pushforward of Lebesgue measure: src_len/dst_len on
    // each target interval
    StepFn rn_derivative() const;

    // f ∘ φ^{-1} without the density factor
    StepFn pushforward_values(const StepFn& f) const;

    bool operator==(const IntervalMap& o) const { return pieces_ == o.pieces_; }

private:
    std::vector<MapPiece> pieces_;  // sorted by src_lo, canonical (maximal pieces)
};

// Isometry of L1[0,1] in Banach–Lamperti form: T f = sign · (dφ_*λ/dλ) · (f ∘ φ^{-1}).
// sign ≡ 1 gives the lattice (positive) isometries.
struct L1Iso {
    IntervalMap map;
    StepFn sign;

    explicit L1Iso(IntervalMap m);  // sign ≡ 1
    L1Iso(IntervalMap m, StepFn s);

    static L1Iso identity_iso() { return L1Iso(IntervalMap::identity()); }

    StepFn apply(const StepFn& f) const;
    L1Iso compose(const L1Iso& other) const;  // this ∘ other
    L1Iso inverse() const;
    bool operator==(const L1Iso& o) const { return map == o.map && sign == o.sign; }
};

inline StepFn apply_iso(const L1Iso& t, const StepFn& f) { return t.apply(f); }
inline L1Iso compose_iso(const L1Iso& s, const L1Iso& t) { return s.compose(t); }
inline L1Iso invert_iso(const L1Iso& t) { return t.inverse(); }

// The two lattice isometries generating a free action with no invariant
// strictly convex renorming: first the density-2 stretch of [0,1/3] onto
// [0,2/3], second the rotation by 1/3.
std::pair<L1Iso, L1Iso> f2_counterexample();

// w evaluated in the group generated by a (letter 'a') and b (letter 'b')
L1Iso eval_word(const GenWord& w, const L1Iso& a, const L1Iso& b);

// Free measure-class-preserving action with the dyadic fundamental domain
// A = I_0 = [0,1/2): the k-th element of the enumeration owns the shell
// I_k = [1-2^-k, 1-2^-k-1) and every g maps I_h affinely onto I_{gh}.
class FDAction {
public:
    enum class Kind { Integers, Cyclic, Free };

    struct Elem {
        long n = 0;   // Integers / Cyclic
        GenWord w;    // Free
    };

    static FDAction integers();
    static FDAction cyclic(int order);
    static FDAction free_group(int rank);

    Kind kind() const { return kind_; }
    int num_generators() const;
    long num_elements() const;  // -1 for infinite groups

    Elem identity() const;
    Elem generator(int i) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    bool is_identity(const Elem& a) const;
    bool elem_eq(const Elem& a, const Elem& b) const;
    std::string elem_str(const Elem& a) const;

    long index_of(const Elem& g) const;
    Elem elem_at(long index) const;
    std::pair<Rational, Rational> shell(long index) const;  // I_{g_index}
    std::pair<Rational, Rational> shell_of(const Elem& g) const { return shell(index_of(g)); }

    Rational domain_measure() const;                       // λ(A)
    std::pair<Rational, Rational> cell(int n, int i) const;  // A_i^n, 1 <= i <= n

    // the affine piece carrying I_h onto I_{gh}
    MapPiece transport(const Elem& g, const Elem& h) const;

    // exact action on step functions supported away from 1 (always total
    // for cyclic groups)
    StepFn apply(const Elem& g, const StepFn& f) const;

    // Total interval map for a generator, exact on every shell with index
    // <= depth; the leftover tail region is closed off by order-preserving
    // affine pieces so the result is a genuine bijection of [0,1). Exact
    // and depth-independent for cyclic groups.
    IntervalMap generator_map(int gen, long depth) const;

private:
    FDAction(Kind k, int param) : kind_(k), param_(param) {}
    Kind kind_;
    int param_;  // rank for Free, order for Cyclic, unused for Integers
};

// Finitely supported part of the coefficient vector (∫_{gA_i^n} f)_{g,i}
// plus an exact bound on the mass outside the stored translates.
struct TruncVec {
    struct Entry {
        long gidx;
        std::string g;
        int i;
        Rational value;
    };
    int n = 1;
    std::vector<Entry> entries;  // sorted by (gidx, i)
    Rational tail_bound{0};
};

Rational l1_entries(const TruncVec& v);
nlohmann::ordered_json to_json(const TruncVec& v);

TruncVec pn_apply(const FDAction& act, int n, const StepFn& f,
                  const std::vector<FDAction::Elem>& trunc);

// (Σ |entry|^p)^{1/p} over the stored entries; exact for p = 1
CertReal lp_norm(const TruncVec& v, const Rational& p, const Rational& precision);

struct FindNpResult {
    int n = 0;
    Rational p;
    CertReal value;
    long trunc_size = 0;
};

// smallest (trunc, n, p) with a certified lp value >= ratio * ||f||_1,
// scanning n upward and p downward toward 1
std::optional<FindNpResult> find_np(const FDAction& act, const StepFn& f, const Rational& ratio,
                                    int max_n = 16, long max_trunc = 32);

}  // namespace renormlab
