#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "renormlab/certreal.hpp"
#include "renormlab/rational.hpp"
#include "renormlab/word.hpp"

namespace renormlab {

// Point of the countable subshift X over S = {-2,-1,0,1,2}: either the
// two-sided marker sequence with a single 0 at `offset` (k above, -k
// below) or one of the four constant sequences.
struct XPoint {
    enum class Tag { Marker, Const };
    Tag tag;
    int kind = 1;     // marker kind, 1 or 2
    long offset = 0;  // marker position
    int cval = 1;     // constant value, in {-2,-1,1,2}

    static XPoint marker(int kind, long offset) {
        if (kind != 1 && kind != 2) throw std::invalid_argument("marker kind must be 1 or 2");
        return XPoint{Tag::Marker, kind, offset, 0};
    }
    static XPoint constant(int v) {
        if (v != -2 && v != -1 && v != 1 && v != 2)
            throw std::invalid_argument("constant value must be in {-2,-1,1,2}");
        return XPoint{Tag::Const, 0, 0, v};
    }
    bool operator==(const XPoint& o) const {
        if (tag != o.tag) return false;
        if (tag == Tag::Marker) return kind == o.kind && offset == o.offset;
        return cval == o.cval;
    }
};

std::string to_string(const XPoint& x);

int x_eval(const XPoint& x, long k);
XPoint shift(const XPoint& x, long power);  // σ^power; σ(x)(n) = x(n-1)
XPoint swap_map(const XPoint& x);           // exchanges the two kind-0 markers

enum class XClass { A, B, C, D, E };
const char* to_string(XClass c);

// classifier type keyed on the symbol pair (x(0), x(1))
using Classifier = std::function<XClass(int s0, int s1)>;
Classifier marker_classifier();
// negative control: the classifier with the D and E patterns exchanged
Classifier mutated_classifier();

XClass classify(const XPoint& x);
XClass classify_with(const Classifier& cl, const XPoint& x);

// Function on X constant on partition classes.
struct PartFn {
    std::array<Rational, 5> values{};  // indexed by XClass
    Rational at_class(XClass c) const { return values[static_cast<std::size_t>(c)]; }
};

Rational eval_partition_fn(const PartFn& f, const XPoint& x);
PartFn obstruction_f();        // 1/2·χ_A + χ_B + χ_D
PartFn obstruction_f_prime();  // 1/2·χ_A + χ_C + χ_D

// Band-limited function on X: value at a marker depends on the offset
// only through the window [-band, band] plus two constant tails, so the
// space is closed under shift and swap pullbacks and under linear
// combinations, with decidable equality.
class XFn {
public:
    explicit XFn(long band = 1);

    static XFn from_partition(const PartFn& f);
    static XFn from_partition_with(const Classifier& cl, const PartFn& f);

    long band() const { return band_; }
    Rational eval(const XPoint& x) const;
    Rational sup() const;  // max |value| over all of X

    XFn shift_pullback(long power) const;  // x ↦ F(σ^{-power} x)
    XFn swap_pullback() const;             // x ↦ F(swap x)

    XFn operator+(const XFn& o) const;
    XFn operator-(const XFn& o) const;
    friend XFn operator*(const Rational& c, const XFn& f);
    bool operator==(const XFn& o) const;
    bool operator!=(const XFn& o) const { return !(*this == o); }

    nlohmann::ordered_json to_json() const;

private:
    long band_;
    // marker values per kind: window index 0 .. 2*band, offset = i - band
    std::array<std::vector<Rational>, 2> window_;
    std::array<Rational, 2> left_tail_;   // offsets < -band
    std::array<Rational, 2> right_tail_;  // offsets > band
    std::array<Rational, 4> consts_;      // values at CONST(-2,-1,1,2)
    void reduce();
    Rational marker_value(int kind, long offset) const;
    Rational& marker_slot(int kind, long offset);
    static XFn binop(const XFn& a, const XFn& b,
                     const std::function<Rational(const Rational&, const Rational&)>& op);
};

// word over generators {0: shift, 1: swap} acting by pullback of the
// inverse homeomorphism
XFn act_subshift(const GenWord& w, const XFn& f);

// -------------------------------------------------- cover identity report

struct CoverCheck {
    std::string name;
    bool exhaustive_pass = false;
    bool symbolic_pass = false;
    std::string witness;  // empty when both routes pass
    bool pass() const { return exhaustive_pass && symbolic_pass; }
};

struct CoverReport {
    long window = 0;
    std::vector<CoverCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
    nlohmann::ordered_json to_json() const;
};

// Verifies, both on the finite window {markers with |offset| <= N} ∪
// constants and by case analysis over offset ranges covering all of X:
// the five classes partition X; shift[A] = A∪B∪C, shift[B∪D] = D,
// shift[C∪E] = E; swap fixes A, D, E and exchanges B and C; and the
// pointwise midpoint identity f(σ^{-1}x) = (f(x)+f'(x))/2.
CoverReport verify_cover_identities(long window);
CoverReport verify_cover_identities_with(const Classifier& cl, long window);

// ------------------------------------------------------------ odometer

// Depth-m cylinder function on 2^N: one value per binary word of length
// m, indexed with the first coordinate as the least significant bit.
// Canonical form drops depth while the value ignores the last coordinate.
class CylFn {
public:
    CylFn() : depth_(0), table_{Rational(0)} {}
    CylFn(int depth, std::vector<Rational> table);

    static CylFn constant(const Rational& c) { return CylFn(0, {c}); }
    static CylFn cylinder(const std::vector<int>& bits);  // indicator of [bits]

    int depth() const { return depth_; }
    const std::vector<Rational>& table() const { return table_; }

    Rational sup() const;
    Rational l2_sq() const;  // 2^-m Σ table², exact

    CylFn operator+(const CylFn& o) const;
    CylFn operator-(const CylFn& o) const;
    friend CylFn operator*(const Rational& c, const CylFn& f);
    bool operator==(const CylFn& o) const { return depth_ == o.depth_ && table_ == o.table_; }
    bool operator!=(const CylFn& o) const { return !(*this == o); }

    CylFn at_depth(int m) const;  // refine to depth m >= depth_

private:
    int depth_;
    std::vector<Rational> table_;
    void reduce();
};

nlohmann::ordered_json to_json(const CylFn& f);

// pullback under the inverse of add-one-with-carry
CylFn odometer_act(const CylFn& f);
CylFn odometer_act_pow(const CylFn& f, long power);

// ||F||_∞ + ||F||_{L2(coin-flip measure)}
CertReal odometer_sc_norm(const CylFn& f, const Rational& precision);

}  // namespace renormlab
