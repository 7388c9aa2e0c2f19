#pragma once

#include "renormlab/cantorspace.hpp"
#include "renormlab/l1space.hpp"
#include "renormlab/renormkit.hpp"
#include "renormlab/seqspace.hpp"

namespace renormlab {

// R^d with exact coordinates, for the finite-dimensional instances
struct VecR {
    std::vector<Rational> coords;
    bool operator==(const VecR& o) const { return coords == o.coords; }
    VecR operator+(const VecR& o) const;
};
VecR operator*(const Rational& c, const VecR& v);
Rational linf_norm(const VecR& v);
Rational l2_sq(const VecR& v);
nlohmann::ordered_json to_json(const VecR& v);

inline nlohmann::ordered_json to_json(const XFn& f) { return f.to_json(); }

template <class V>
Show<V> shower() {
    return [](const V& v) { return to_json(v); };
}

// ------------------------------------------------------------- oracles

NormOracle<CSeq> sup_oracle();
NormOracle<CSeq> sorted_sc_oracle();
NormOracle<CSeq> c_renorm_oracle();
NormOracle<CZeroPlusR> pair_oracle();

NormOracle<BlockVec> c0sum_oracle();
NormOracle<BlockVec> c0sum_base_oracle();  // max block norm
NormOracle<BlockVec> l1sum_oracle();
NormOracle<BlockVec> l1sum_base_oracle();  // Σ block norms
NormOracle<BlockVec> l2sum_oracle();       // sqrt(Σ block squares)

NormOracle<StepFn> l1_oracle();
NormOracle<StepFn> step_l2_oracle();

NormOracle<CylFn> cyl_sup_oracle();
NormOracle<CylFn> cyl_l2_oracle();
NormOracle<CylFn> odometer_sc_oracle();

NormOracle<VecR> linf_oracle();
NormOracle<VecR> l2_vec_oracle();

// ------------------------------------------------------------- actions

GroupAction<StepFn> f2_action();
GroupAction<StepFn> l1iso_action(std::vector<L1Iso> gens, const std::string& name);
GroupAction<XFn> subshift_group_action();
GroupAction<CylFn> odometer_group_action();
GroupAction<CSeq> cseq_action(std::vector<IsoCElem> gens, const std::string& name);
GroupAction<CZeroPlusR> pair_group_action(std::vector<IsoCElem> gens, const std::string& name);
GroupAction<BlockVec> block_group_action(std::vector<BlockIso> gens, const std::string& name);
GroupAction<VecR> trivial_vec_action(const std::string& name);

// x ↦ (x − lim·1, lim), equivariant for signed permutations with the
// induced action on c0 ⊕ R
EquivariantMap<CSeq, CZeroPlusR> c_embedding();
// integrals over the 2^level dyadic intervals; a norm-one map from
// (step functions, ℓ1) into (R^{2^level}, ℓ2)
EquivariantMap<StepFn, VecR> dyadic_integral_map(int level);

// -------------------------------------------------------------- sampling

CSeq sample_c0(Sampler& s, int max_len);
CSeq sample_c(Sampler& s, int max_len);
IsoCElem sample_signed_perm(Sampler& s, int window);
IsoCElem sample_perm_only(Sampler& s, int window);
// the rearranging element: g·x has |x| sorted decreasingly
IsoCElem sorting_permutation(const CSeq& x);
// Σ x_i²/4^i in position order (the un-rearranged radicand)
Rational positional_radicand(const CSeq& x);

StepFn sample_step(Sampler& s, int max_pieces, long max_den = 64);
// random piecewise-affine measure-class-preserving bijection: random
// source and target partitions matched by a random permutation with
// random orientations
IntervalMap sample_interval_map(Sampler& s, int max_pieces, long max_den = 64);
GenWord sample_word(Sampler& s, int n_gens, int len);

using BlockShape = std::vector<std::pair<int, int>>;  // (class_id, dim)
BlockVec sample_blockvec(Sampler& s, const BlockShape& shape, Ambient ambient);
BlockIso sample_blockiso(Sampler& s, const BlockShape& shape);

CylFn sample_cylfn(Sampler& s, int max_depth);
VecR sample_vecr(Sampler& s, int dim);

bool is_parallel(const CSeq& a, const CSeq& b);
bool is_parallel(const StepFn& a, const StepFn& b);
bool is_parallel(const BlockVec& a, const BlockVec& b);
bool is_parallel(const CylFn& a, const CylFn& b);
bool is_parallel(const VecR& a, const VecR& b);

// wraps a generator into a sampler of certified non-parallel pairs
template <class V>
std::function<std::pair<V, V>(Sampler&)> nonparallel_pairs(std::function<V(Sampler&)> gen) {
    return [gen](Sampler& s) {
        for (;;) {
            V x = gen(s);
            V y = gen(s);
            if (!is_parallel(x, y)) return std::make_pair(std::move(x), std::move(y));
        }
    };
}

// the concrete certificates
ObstructionCertificate<StepFn> f2_l1_certificate();
ObstructionCertificate<XFn> subshift_certificate();

}  // namespace renormlab
