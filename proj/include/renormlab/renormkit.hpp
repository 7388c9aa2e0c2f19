#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "renormlab/certreal.hpp"
#include "renormlab/rational.hpp"
#include "renormlab/word.hpp"

namespace renormlab {

enum class Verdict { Pass, Fail, Inconclusive };
const char* to_string(Verdict v);

struct CheckOptions {
    int start_bits = 64;
    int max_bits = 512;
};

struct CheckReport {
    std::string check;
    std::string instance;
    std::uint64_t seed = 0;
    long trials = 0;
    Verdict verdict = Verdict::Pass;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    Rational max_radius{0};
    long refinements = 0;

    void witness(nlohmann::ordered_json w, std::size_t cap = 5) {
        if (witnesses.size() < cap) witnesses.push_back(std::move(w));
    }
    nlohmann::ordered_json to_json() const;
};

// Evaluation contract for an equivalent norm: certified value at a
// requested absolute precision, an optional exact rational fingerprint
// whose equality implies equality of values, and optional claimed
// equivalence constants against the space's base norm.
template <class V>
struct NormOracle {
    std::string space;
    std::function<CertReal(const V&, const Rational& precision)> eval;
    std::function<std::vector<Rational>(const V&)> fingerprint;
    // for quadratic norms: the exact rational N(x)², so that quotients
    // like N(x)/||T|| stay exact when they are rational
    std::function<Rational(const V&)> sq_value;
    bool exact = false;
    std::optional<std::pair<Rational, Rational>> claimed_bounds;
};

// Bounded linear map between two spaces carrying group actions.
// operator_bound is a rational upper bound for the operator norm;
// operator_norm_sq optionally records the exact squared norm when that
// is rational (e.g. the identity (R², sup) → (R², ℓ2) has norm sqrt 2).
template <class V, class W>
struct EquivariantMap {
    std::string domain;
    std::string codomain;
    std::function<W(const V&)> map;
    Rational operator_bound{1};
    std::optional<Rational> operator_norm_sq;
    std::optional<Rational> injectivity_constant;
};

template <class V>
struct GroupAction {
    std::string name;
    std::vector<std::string> generator_names;
    std::function<V(int gen, bool inverse, const V&)> apply_gen;

    V apply(const GenWord& w, const V& x) const {
        V out = x;
        for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
            out = apply_gen(it->gen, it->inverse, out);
        return out;
    }
};

template <class V>
using Show = std::function<nlohmann::ordered_json(const V&)>;

// ------------------------------------------------------------- samplers

// Deterministic seeded sampling; all integer draws go through an
// explicit rejection loop so reports are reproducible bit for bit.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("bounded(0)");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do {
            r = rng_();
        } while (r >= limit);
        return r % n;
    }

    long int_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return bounded(2) == 1; }

    // magnitude <= max_mag, denominator <= max_den
    Rational rational(long max_mag = 8, long max_den = 64) {
        long den = int_in(1, max_den);
        long num = int_in(-max_mag * den, max_mag * den);
        return rat(num, den);
    }

    Rational nonzero_rational(long max_mag = 8, long max_den = 64) {
        for (;;) {
            Rational q = rational(max_mag, max_den);
            if (q != 0) return q;
        }
    }

private:
    std::mt19937_64 rng_;
};

// exact proportionality test over the rationals (zero vectors count as
// proportional to everything)
inline bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("proportional: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

// ------------------------------------------------------------ the checks

template <class V>
CheckReport check_invariance(const NormOracle<V>& N, const GroupAction<V>& act,
                             const std::vector<V>& vectors, const std::vector<GenWord>& words,
                             const Show<V>& show, const CheckOptions& opt = {}) {
    CheckReport rep;
    rep.check = "invariance";
    rep.instance = N.space + " / " + act.name;
    std::size_t trials = std::max(vectors.size(), words.size());
    rep.trials = static_cast<long>(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const V& x = vectors[t % vectors.size()];
        const GenWord& w = words[t % words.size()];
        V gx = act.apply(w, x);
        if (N.fingerprint && N.fingerprint(x) == N.fingerprint(gx)) continue;  // radius-0 equality
        bool settled = false;
        for (int bits = opt.start_bits; bits <= opt.max_bits; bits *= 2) {
            Rational prec = pow2(-bits);
            CertReal a = N.eval(x, prec);
            CertReal b = N.eval(gx, prec);
            Cmp c = cert_cmp(a, b);
            if (c == Cmp::EQ) {
                settled = true;
                break;
            }
            if (c == Cmp::LT || c == Cmp::GT) {
                rep.verdict = Verdict::Fail;
                rep.witness({{"word", w.str()},
                             {"vector", show(x)},
                             {"value", to_string(a)},
                             {"value_after", to_string(b)},
                             {"bits", bits}});
                settled = true;
                break;
            }
            rep.max_radius = std::max(rep.max_radius, Rational(a.rad + b.rad));
            if (bits * 2 <= opt.max_bits) {
                ++rep.refinements;
                continue;
            }
            // enclosures still overlap at the cap: equal within combined radii
            settled = true;
        }
        if (!settled) rep.verdict = Verdict::Inconclusive;
    }
    return rep;
}

template <class V, class W>
CheckReport check_equivariance(const EquivariantMap<V, W>& d, const GroupAction<V>& dom,
                               const GroupAction<W>& cod, const std::vector<V>& samples,
                               const std::vector<GenWord>& words, const Show<V>& show_dom,
                               const Show<W>& show_cod) {
    CheckReport rep;
    rep.check = "equivariance";
    rep.instance = d.domain + " -> " + d.codomain;
    std::size_t trials = std::max(samples.size(), words.size());
    rep.trials = static_cast<long>(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const V& x = samples[t % samples.size()];
        const GenWord& w = words[t % words.size()];
        W lhs = d.map(dom.apply(w, x));
        W rhs = cod.apply(w, d.map(x));
        if (!(lhs == rhs)) {
            rep.verdict = Verdict::Fail;
            rep.witness({{"word", w.str()},
                         {"vector", show_dom(x)},
                         {"map_of_gx", show_cod(lhs)},
                         {"g_of_map_x", show_cod(rhs)}});
        }
    }
    return rep;
}

template <class V>
CheckReport check_strict_convexity(const NormOracle<V>& N,
                                   const std::function<std::pair<V, V>(Sampler&)>& sampler,
                                   long trials, std::uint64_t seed, const Show<V>& show,
                                   const CheckOptions& opt = {}) {
    CheckReport rep;
    rep.check = "strict_convexity";
    rep.instance = N.space;
    rep.seed = seed;
    rep.trials = trials;
    Sampler s(seed);
    bool any_inconclusive = false;
    for (long t = 0; t < trials; ++t) {
        auto [x, y] = sampler(s);
        V z = x + y;
        bool settled = false;
        for (int bits = opt.start_bits; bits <= opt.max_bits; bits *= 2) {
            Rational prec = pow2(-bits);
            CertReal nz = N.eval(z, prec);
            CertReal nsum = N.eval(x, prec) + N.eval(y, prec);
            Cmp c = cert_cmp(nz, nsum);
            if (c == Cmp::LT) {  // certified positive gap
                rep.max_radius = std::max(rep.max_radius, Rational(nz.rad + nsum.rad));
                settled = true;
                break;
            }
            if (c == Cmp::GT || c == Cmp::EQ) {
                rep.verdict = Verdict::Fail;
                rep.witness({{"x", show(x)},
                             {"y", show(y)},
                             {"norm_sum_vec", to_string(nz)},
                             {"norm_x_plus_norm_y", to_string(nsum)},
                             {"relation", c == Cmp::EQ ? "equal" : "reversed"},
                             {"bits", bits}});
                settled = true;
                break;
            }
            ++rep.refinements;
        }
        if (!settled) {
            any_inconclusive = true;
            rep.witness({{"x", show(x)}, {"y", show(y)}, {"status", "inconclusive at precision cap"}});
        }
    }
    if (any_inconclusive && rep.verdict == Verdict::Pass) rep.verdict = Verdict::Inconclusive;
    return rep;
}

// certified c·base(x) <= N(x) <= C·base(x) on every sample
template <class V>
CheckReport check_equivalence(const NormOracle<V>& N, const NormOracle<V>& base, const Rational& c,
                              const Rational& C, const std::vector<V>& samples, const Show<V>& show,
                              const CheckOptions& opt = {}) {
    if (!(c > 0 && c <= C)) throw std::domain_error("check_equivalence: need 0 < c <= C");
    CheckReport rep;
    rep.check = "equivalence";
    rep.instance = N.space + " vs " + base.space;
    rep.trials = static_cast<long>(samples.size());
    bool any_inconclusive = false;
    for (const V& x : samples) {
        bool lower_ok = false, upper_ok = false, failed = false;
        for (int bits = opt.start_bits; bits <= opt.max_bits && !failed; bits *= 2) {
            Rational prec = pow2(-bits);
            CertReal n = N.eval(x, prec);
            CertReal b = base.eval(x, prec);
            CertReal lowb = c * b;
            CertReal upb = C * b;
            if (!lower_ok && lowb.hi() <= n.lo()) lower_ok = true;
            if (!upper_ok && n.hi() <= upb.lo()) upper_ok = true;
            if (!lower_ok && n.hi() < lowb.lo()) {
                failed = true;
                rep.witness({{"vector", show(x)},
                             {"violated", "lower"},
                             {"value", to_string(n)},
                             {"bound", to_string(lowb)}});
            }
            if (!upper_ok && upb.hi() < n.lo()) {
                failed = true;
                rep.witness({{"vector", show(x)},
                             {"violated", "upper"},
                             {"value", to_string(n)},
                             {"bound", to_string(upb)}});
            }
            rep.max_radius = std::max(rep.max_radius, Rational(n.rad + b.rad));
            if (lower_ok && upper_ok) break;
            ++rep.refinements;
        }
        if (failed) {
            rep.verdict = Verdict::Fail;
        } else if (!(lower_ok && upper_ok)) {
            any_inconclusive = true;
            rep.witness({{"vector", show(x)}, {"status", "inconclusive at precision cap"}});
        }
    }
    if (any_inconclusive && rep.verdict == Verdict::Pass) rep.verdict = Verdict::Inconclusive;
    return rep;
}

// ------------------------------------------------- obstruction certificates

// Data refuting invariant strict convexity for the generated action:
// g·x = y and h·x = (x+y)/2 with x ≠ y force every invariant norm to
// assign x, y, and their midpoint the same value.
template <class V>
struct ObstructionCertificate {
    std::string space;
    V x;
    V y;
    GenWord g_word;
    GenWord h_word;
    GroupAction<V> action;
};

struct ObstructionVerdict {
    bool valid = false;
    std::string reason;
    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["verdict"] = valid ? "VALID" : "INVALID";
        if (!reason.empty()) j["reason"] = reason;
        return j;
    }
};

template <class V>
ObstructionVerdict check_obstruction(const ObstructionCertificate<V>& cert) {
    if (cert.x == cert.y) return {false, "x = y"};
    if (!(cert.action.apply(cert.g_word, cert.x) == cert.y)) return {false, "g·x != y"};
    V mid = rat(1, 2) * (cert.x + cert.y);
    if (!(cert.action.apply(cert.h_word, cert.x) == mid)) return {false, "h·x != (x+y)/2"};
    return {true, ""};
}

// --------------------------------------------------------- constructions

// ||x||' = base(x) + target(T x); invariant whenever T is equivariant
// and target is invariant for the transported action
template <class V, class W>
NormOracle<V> pushforward_norm(const EquivariantMap<V, W>& d, const NormOracle<V>& base,
                               const NormOracle<W>& target) {
    NormOracle<V> out;
    out.space = base.space + " + " + target.space + "∘T";
    out.exact = base.exact && target.exact;
    auto map = d.map;
    auto base_eval = base.eval;
    auto target_eval = target.eval;
    out.eval = [map, base_eval, target_eval](const V& x, const Rational& prec) {
        Rational half(prec / 2);
        return base_eval(x, half) + target_eval(map(x), half);
    };
    if (base.fingerprint && target.fingerprint) {
        auto bf = base.fingerprint;
        auto tf = target.fingerprint;
        out.fingerprint = [map, bf, tf](const V& x) {
            std::vector<Rational> f = bf(x);
            std::vector<Rational> g = tf(map(x));
            f.insert(f.end(), g.begin(), g.end());
            return f;
        };
    }
    return out;
}

// base(x) + ε·target(T x)/||T||, which stays within (1±ε)·base
template <class V, class W>
NormOracle<V> epsilon_close_norm(const EquivariantMap<V, W>& d, const NormOracle<V>& base,
                                 const NormOracle<W>& target, const Rational& eps) {
    if (!(eps > 0 && eps < 1)) throw std::domain_error("epsilon_close_norm: need 0 < eps < 1");
    if (!(d.operator_bound > 0)) throw std::domain_error("epsilon_close_norm: operator bound must be positive");
    NormOracle<V> out;
    out.space = base.space + " ε-perturbed (ε=" + to_string(eps) + ")";
    out.claimed_bounds = std::make_pair(Rational(1 - eps), Rational(1 + eps));
    auto map = d.map;
    auto base_eval = base.eval;
    auto target_eval = target.eval;
    auto target_sq = target.sq_value;
    std::optional<Rational> norm_sq = d.operator_norm_sq;
    Rational bound = d.operator_bound;
    out.eval = [map, base_eval, target_eval, target_sq, norm_sq, bound, eps](const V& x,
                                                                             const Rational& prec) {
        Rational half(prec / 2);
        CertReal b = base_eval(x, half);
        W y = map(x);
        if (norm_sq && target_sq) {
            // ||T x||/||T|| = sqrt(||T x||²/||T||²), one exact radicand
            return b + eps * cert_sqrt(Rational(target_sq(y) / *norm_sq), half);
        }
        CertReal t = target_eval(y, Rational(half / 4));
        CertReal scaled = norm_sq ? eps * (t / cert_sqrt(*norm_sq, Rational(half / 4)))
                                  : (eps / bound) * t;
        for (int i = 0; i < 8 && scaled.rad > half; ++i) {
            Rational tighter = half / pow2(4 * (i + 1));
            t = target_eval(y, tighter);
            scaled = norm_sq ? eps * (t / cert_sqrt(*norm_sq, tighter)) : (eps / bound) * t;
        }
        return b + scaled;
    };
    return out;
}

// x ↦ (T_n(x)/2^n) into the weighted ℓ2-sum of the codomains
template <class V, class W>
struct AssembledMap {
    EquivariantMap<V, std::vector<W>> combined;
    NormOracle<std::vector<W>> codomain_norm;
};

template <class V, class W>
AssembledMap<V, W> l2_assembly(const std::vector<EquivariantMap<V, W>>& maps,
                               const std::vector<NormOracle<W>>& codomain_norms) {
    if (maps.empty()) throw std::invalid_argument("l2_assembly: empty map list");
    if (maps.size() != codomain_norms.size())
        throw std::invalid_argument("l2_assembly: map/norm count mismatch");
    for (const auto& m : maps)
        if (m.operator_bound > 1)
            throw std::invalid_argument("l2_assembly: operator bounds must be <= 1");

    AssembledMap<V, W> out;
    out.combined.domain = maps.front().domain;
    out.combined.codomain = "ℓ2-sum of " + std::to_string(maps.size()) + " summands";
    std::vector<std::function<W(const V&)>> fns;
    for (const auto& m : maps) fns.push_back(m.map);
    out.combined.map = [fns](const V& x) {
        std::vector<W> ws;
        ws.reserve(fns.size());
        for (const auto& f : fns) ws.push_back(f(x));
        return ws;
    };
    // rational upper bound for sqrt(Σ 4^-n bound_n²) <= sqrt(1/3) < 1
    Rational bound_sq(0);
    {
        Rational w(1);
        for (const auto& m : maps) {
            w /= 4;
            bound_sq += w * m.operator_bound * m.operator_bound;
        }
    }
    out.combined.operator_bound = cert_sqrt(bound_sq, pow2(-32)).hi();
    out.combined.operator_norm_sq = std::nullopt;

    std::vector<std::function<CertReal(const W&, const Rational&)>> evals;
    for (const auto& n : codomain_norms) evals.push_back(n.eval);
    out.codomain_norm.space = out.combined.codomain;
    out.codomain_norm.eval = [evals](const std::vector<W>& ws, const Rational& prec) {
        if (ws.size() != evals.size()) throw std::invalid_argument("assembled norm: arity mismatch");
        Rational inner(prec / static_cast<long>(4 * evals.size()));
        for (int attempt = 0; attempt < 8; ++attempt) {
            CertReal sum{Rational(0), Rational(0)};
            Rational w(1);
            for (std::size_t i = 0; i < evals.size(); ++i) {
                w /= 4;
                sum = sum + w * square(evals[i](ws[i], inner));
            }
            CertReal result = cert_sqrt(sum, Rational(prec / 2));
            if (result.rad <= prec) return result;
            inner /= 16;
        }
        throw std::logic_error("assembled norm: failed to meet precision target");
    };
    return out;
}

// Injectivity certificate for an assembled map via a witness family: a sample
// x is certified nonzero under T when some witness x_n satisfies
// ||x - x_n|| < C||x_n|| and ||T_n(x_n)|| - ||T_n(x - x_n)|| > 0.
template <class V, class W>
CheckReport certify_assembly_injectivity(const std::vector<EquivariantMap<V, W>>& maps,
                                         const std::vector<NormOracle<W>>& codomain_norms,
                                         const NormOracle<V>& domain_norm,
                                         const std::vector<V>& witnesses, const Rational& C,
                                         const std::vector<V>& samples, const Show<V>& show,
                                         const CheckOptions& opt = {}) {
    if (witnesses.size() != maps.size())
        throw std::invalid_argument("injectivity: one witness per map expected");
    CheckReport rep;
    rep.check = "assembly_injectivity";
    rep.instance = domain_norm.space;
    rep.trials = static_cast<long>(samples.size());
    for (const V& x : samples) {
        bool certified = false;
        for (std::size_t n = 0; n < maps.size() && !certified; ++n) {
            const V& xn = witnesses[n];
            for (int bits = opt.start_bits; bits <= opt.max_bits; bits *= 2) {
                Rational prec = pow2(-bits);
                CertReal dist = domain_norm.eval(x + Rational(-1) * xn, prec);
                CertReal radius = C * domain_norm.eval(xn, prec);
                Cmp near = cert_cmp(dist, radius);
                if (near == Cmp::GT) break;  // this witness is not close enough
                if (near != Cmp::LT) {
                    ++rep.refinements;
                    continue;
                }
                CertReal at_witness = codomain_norms[n].eval(maps[n].map(xn), prec);
                CertReal at_diff = codomain_norms[n].eval(maps[n].map(x + Rational(-1) * xn), prec);
                if (cert_cmp(at_diff, at_witness) == Cmp::LT) {
                    certified = true;
                    break;
                }
                ++rep.refinements;
            }
        }
        if (!certified) {
            rep.verdict = Verdict::Fail;
            rep.witness({{"vector", show(x)}, {"status", "no witness certified T x != 0"}});
        }
    }
    return rep;
}

}  // namespace renormlab
