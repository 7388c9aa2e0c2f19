#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "renormlab/certreal.hpp"
#include "renormlab/rational.hpp"

namespace renormlab {

// Eventually constant rational sequence: entries 1..k from the prefix,
// the tail value from position k+1 on. tail = 0 means membership in c0.
// Canonical form trims trailing prefix entries equal to the tail.
class CSeq {
public:
    CSeq() : tail_(0) {}
    CSeq(std::vector<Rational> prefix, Rational tail);

    static CSeq basis(int i);  // e_i, 1-indexed
    static CSeq constant(const Rational& c) { return CSeq({}, c); }

    Rational at(int i) const;  // 1-indexed
    int prefix_len() const { return static_cast<int>(prefix_.size()); }
    const std::vector<Rational>& prefix() const { return prefix_; }
    const Rational& tail() const { return tail_; }
    bool in_c0() const { return tail_ == 0; }
    bool is_zero() const { return prefix_.empty() && tail_ == 0; }

    CSeq operator+(const CSeq& o) const;
    CSeq operator-(const CSeq& o) const;
    friend CSeq operator*(const Rational& c, const CSeq& x);
    bool operator==(const CSeq& o) const { return prefix_ == o.prefix_ && tail_ == o.tail_; }
    bool operator!=(const CSeq& o) const { return !(*this == o); }

private:
    std::vector<Rational> prefix_;
    Rational tail_;
};

Rational sup_norm(const CSeq& x);
nlohmann::ordered_json to_json(const CSeq& x);

// Signed permutation with finite data: a finite-support permutation of
// {1,2,...}, a finite set of positions whose sign deviates from the tail
// sign, and the tail sign itself. tail_sign = f(0) in the continuous-sign
// picture; the deviation set being finite is exactly continuity at 0.
class IsoCElem {
public:
    IsoCElem() : tail_sign_(1) {}
    IsoCElem(std::map<int, int> perm, std::set<int> sign_dev, int tail_sign);

    static IsoCElem from_cycles(const std::vector<std::vector<int>>& cycles,
                                std::set<int> sign_dev = {}, int tail_sign = 1);
    static IsoCElem transposition(int i, int j) { return from_cycles({{i, j}}); }

    int perm(int n) const;
    int perm_inv(int n) const;
    int sign(int n) const { return sign_dev_.count(n) ? -tail_sign_ : tail_sign_; }
    int tail_sign() const { return tail_sign_; }
    const std::map<int, int>& perm_map() const { return perm_; }
    const std::set<int>& sign_dev() const { return sign_dev_; }

    IsoCElem compose(const IsoCElem& other) const;  // acts as this after other
    IsoCElem inverse() const;
    bool is_identity() const { return perm_.empty() && sign_dev_.empty() && tail_sign_ == 1; }
    bool operator==(const IsoCElem& o) const {
        return perm_ == o.perm_ && sign_dev_ == o.sign_dev_ && tail_sign_ == o.tail_sign_;
    }

private:
    std::map<int, int> perm_;      // non-fixed points only
    std::map<int, int> perm_inv_;
    std::set<int> sign_dev_;
    int tail_sign_;
    void canonicalize();
};

std::string to_string(const IsoCElem& g);

// (g·x)(n) = sign(n) · x(π^{-1}(n))
CSeq act_c(const IsoCElem& g, const CSeq& x);

// The invariant strictly convex norm on c0: ||x||_∞ + sqrt(Σ y_i² / 4^i)
// with y the absolute values of x rearranged decreasingly. The radicand
// is an exact rational.
Rational sorted_radicand(const CSeq& x);
CertReal sorted_sc_norm(const CSeq& x, const Rational& precision);

// c0 ⊕_{ℓ2} R, the codomain of the c embedding x ↦ (x − lim·1, lim)
struct CZeroPlusR {
    CSeq u;
    Rational t{0};
    bool operator==(const CZeroPlusR& o) const { return u == o.u && t == o.t; }
    CZeroPlusR operator+(const CZeroPlusR& o) const { return {u + o.u, Rational(t + o.t)}; }
};
inline CZeroPlusR operator*(const Rational& c, const CZeroPlusR& z) {
    return {c * z.u, Rational(c * z.t)};
}

CZeroPlusR c_embed(const CSeq& x);
CZeroPlusR act_pair(const IsoCElem& g, const CZeroPlusR& z);
CertReal pair_norm(const CZeroPlusR& z, const Rational& precision);
nlohmann::ordered_json to_json(const CZeroPlusR& z);

// ||x||_c + sqrt( |||x − lim·1|||² + lim² ), ||| | on c0 the sorted norm
CertReal c_renorm(const CSeq& x, const Rational& precision);
// exact data determining the value: (sup, deviation sup, radicand, tail)
std::vector<Rational> c_renorm_fingerprint(const CSeq& x);

// ------------------------------------------------------------ block sums

enum class Ambient { C0Sum, L1Sum };
const char* to_string(Ambient a);

// Finitely supported element of a c0- or ℓ1-sum of Euclidean blocks;
// blocks sharing a class id are isometric copies and must share dimension.
class BlockVec {
public:
    struct Block {
        int class_id;
        std::vector<Rational> coords;
    };

    BlockVec(std::vector<Block> blocks, Ambient ambient);

    const std::vector<Block>& blocks() const { return blocks_; }
    Ambient ambient() const { return ambient_; }
    Rational block_sq(std::size_t i) const;  // squared Euclidean norm, exact

    BlockVec operator+(const BlockVec& o) const;
    friend BlockVec operator*(const Rational& c, const BlockVec& v);
    bool operator==(const BlockVec& o) const;

private:
    std::vector<Block> blocks_;
    Ambient ambient_;
};

nlohmann::ordered_json to_json(const BlockVec& v);

// Sum isometry: a class-preserving permutation of the block positions
// followed by an exactly orthogonal rational matrix on each block.
class BlockIso {
public:
    BlockIso(std::vector<int> class_perm, std::vector<std::vector<std::vector<Rational>>> block_maps);

    static BlockIso identity(int n_blocks, const std::vector<int>& dims);

    BlockIso inverse() const;

    const std::vector<int>& class_perm() const { return class_perm_; }
    const std::vector<std::vector<std::vector<Rational>>>& block_maps() const { return block_maps_; }

private:
    std::vector<int> class_perm_;  // position j receives block class_perm_[j]
    std::vector<std::vector<std::vector<Rational>>> block_maps_;  // matrix applied at position j
};

BlockVec act_blocks(const BlockIso& g, const BlockVec& v);

// c0-sum norm with the within-class decreasing rearrangement:
// max_i ||x_i||_2 + sqrt( Σ ||x_{sorted(i)}||² / 4^i )
Rational c0sum_radicand(const BlockVec& v);
Rational c0sum_max_sq(const BlockVec& v);
CertReal c0sum_sorted_norm(const BlockVec& v, const Rational& precision);

// ℓ1-sum norm: Σ ||x_i||_2 + sqrt( Σ ||x_i||² )
CertReal l1sum_sc_norm(const BlockVec& v, const Rational& precision);
std::vector<Rational> l1sum_fingerprint(const BlockVec& v);  // sorted block squares

}  // namespace renormlab
