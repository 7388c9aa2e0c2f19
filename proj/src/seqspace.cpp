#include "renormlab/seqspace.hpp"

#include <algorithm>

namespace renormlab {

// ------------------------------------------------------------------ CSeq

CSeq::CSeq(std::vector<Rational> prefix, Rational tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

CSeq CSeq::basis(int i) {
    if (i < 1) throw std::invalid_argument("basis: index must be >= 1");
    std::vector<Rational> p(static_cast<std::size_t>(i), Rational(0));
    p.back() = 1;
    return CSeq(std::move(p), Rational(0));
}

Rational CSeq::at(int i) const {
    if (i < 1) throw std::invalid_argument("CSeq::at: index must be >= 1");
    if (i <= prefix_len()) return prefix_[static_cast<std::size_t>(i - 1)];
    return tail_;
}

CSeq CSeq::operator+(const CSeq& o) const {
    int len = std::max(prefix_len(), o.prefix_len());
    std::vector<Rational> p;
    p.reserve(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i) p.push_back(Rational(at(i) + o.at(i)));
    return CSeq(std::move(p), Rational(tail_ + o.tail_));
}

CSeq CSeq::operator-(const CSeq& o) const { return *this + Rational(-1) * o; }

CSeq operator*(const Rational& c, const CSeq& x) {
    std::vector<Rational> p;
    p.reserve(x.prefix_.size());
    for (const Rational& v : x.prefix_) p.push_back(Rational(c * v));
    return CSeq(std::move(p), Rational(c * x.tail_));
}

Rational sup_norm(const CSeq& x) {
    Rational m = rat_abs(x.tail());
    for (const Rational& v : x.prefix()) m = std::max(m, rat_abs(v));
    return m;
}

nlohmann::ordered_json to_json(const CSeq& x) {
    nlohmann::ordered_json j;
    j["prefix"] = nlohmann::ordered_json::array();
    for (const Rational& v : x.prefix()) j["prefix"].push_back(to_string(v));
    j["tail"] = to_string(x.tail());
    return j;
}

// -------------------------------------------------------------- IsoCElem

IsoCElem::IsoCElem(std::map<int, int> perm, std::set<int> sign_dev, int tail_sign)
    : perm_(std::move(perm)), sign_dev_(std::move(sign_dev)), tail_sign_(tail_sign) {
    if (tail_sign_ != 1 && tail_sign_ != -1)
        throw std::invalid_argument("IsoCElem: tail sign must be ±1");
    canonicalize();
}

void IsoCElem::canonicalize() {
    for (auto it = perm_.begin(); it != perm_.end();) {
        if (it->first < 1 || it->second < 1)
            throw std::invalid_argument("IsoCElem: positions must be >= 1");
        if (it->first == it->second) it = perm_.erase(it);
        else ++it;
    }
    perm_inv_.clear();
    std::set<int> images;
    for (const auto& [from, to] : perm_) {
        if (!images.insert(to).second) throw std::invalid_argument("IsoCElem: not a permutation");
        perm_inv_[to] = from;
    }
    for (const auto& [from, to] : perm_)
        if (!perm_.count(to) && from != to)
            throw std::invalid_argument("IsoCElem: permutation support not closed");
    for (int p : sign_dev_)
        if (p < 1) throw std::invalid_argument("IsoCElem: positions must be >= 1");
}

IsoCElem IsoCElem::from_cycles(const std::vector<std::vector<int>>& cycles, std::set<int> sign_dev,
                               int tail_sign) {
    std::map<int, int> perm;
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (perm.count(from)) throw std::invalid_argument("from_cycles: cycles not disjoint");
            perm[from] = to;
        }
    }
    return IsoCElem(std::move(perm), std::move(sign_dev), tail_sign);
}

int IsoCElem::perm(int n) const {
    auto it = perm_.find(n);
    return it == perm_.end() ? n : it->second;
}

int IsoCElem::perm_inv(int n) const {
    auto it = perm_inv_.find(n);
    return it == perm_inv_.end() ? n : it->second;
}

IsoCElem IsoCElem::compose(const IsoCElem& other) const {
    // (this ∘ other) acting on sequences: π = π_this ∘ π_other,
    // sign(n) = sign_this(n) · sign_other(π_this^{-1}(n))
    std::set<int> support;
    for (const auto& [a, b] : perm_) {
        support.insert(a);
        support.insert(b);
    }
    for (const auto& [a, b] : other.perm_) {
        support.insert(a);
        support.insert(b);
    }
    std::map<int, int> perm;
    for (int n : support) {
        int img = this->perm(other.perm(n));
        if (img != n) perm[n] = img;
    }
    int tail = tail_sign_ * other.tail_sign_;
    std::set<int> positions = support;
    for (int p : sign_dev_) positions.insert(p);
    for (int p : other.sign_dev_) positions.insert(this->perm(p));
    std::set<int> dev;
    for (int n : positions) {
        int s = this->sign(n) * other.sign(this->perm_inv(n));
        if (s != tail) dev.insert(n);
    }
    return IsoCElem(std::move(perm), std::move(dev), tail);
}

IsoCElem IsoCElem::inverse() const {
    // sign_inv(n) = sign(π(n))
    std::map<int, int> perm = perm_inv_;
    std::set<int> dev;
    std::set<int> positions = sign_dev_;
    for (const auto& [a, b] : perm_) {
        positions.insert(a);
        positions.insert(b);
    }
    for (int n : positions)
        if (sign(this->perm(n)) != tail_sign_) dev.insert(n);
    return IsoCElem(std::move(perm), std::move(dev), tail_sign_);
}

std::string to_string(const IsoCElem& g) {
    std::string s = "perm{";
    bool first = true;
    for (const auto& [a, b] : g.perm_map()) {
        if (!first) s += ",";
        s += std::to_string(a) + "->" + std::to_string(b);
        first = false;
    }
    s += "} dev{";
    first = true;
    for (int p : g.sign_dev()) {
        if (!first) s += ",";
        s += std::to_string(p);
        first = false;
    }
    s += "} tail";
    s += g.tail_sign() > 0 ? "+" : "-";
    return s;
}

CSeq act_c(const IsoCElem& g, const CSeq& x) {
    int len = 0;
    for (int i = 1; i <= x.prefix_len(); ++i) len = std::max(len, g.perm(i));
    for (int p : g.sign_dev()) len = std::max(len, p);
    std::vector<Rational> p;
    p.reserve(static_cast<std::size_t>(len));
    for (int n = 1; n <= len; ++n) p.push_back(Rational(g.sign(n) * x.at(g.perm_inv(n))));
    return CSeq(std::move(p), Rational(g.tail_sign() * x.tail()));
}

// ---------------------------------------------------------- sorted norms

Rational sorted_radicand(const CSeq& x) {
    if (!x.in_c0()) throw std::domain_error("sorted norm: sequence must lie in c0");
    std::vector<Rational> y;
    y.reserve(x.prefix().size());
    for (const Rational& v : x.prefix()) y.push_back(rat_abs(v));
    std::sort(y.begin(), y.end(), std::greater<Rational>());
    Rational r(0);
    Rational w(1);
    for (const Rational& v : y) {
        w /= 4;
        r += v * v * w;
    }
    return r;
}

CertReal sorted_sc_norm(const CSeq& x, const Rational& precision) {
    return CertReal(sup_norm(x)) + cert_sqrt(sorted_radicand(x), precision);
}

CZeroPlusR c_embed(const CSeq& x) {
    return {x - CSeq::constant(x.tail()), x.tail()};
}

CZeroPlusR act_pair(const IsoCElem& g, const CZeroPlusR& z) {
    return {act_c(g, z.u), Rational(g.tail_sign() * z.t)};
}

CertReal pair_norm(const CZeroPlusR& z, const Rational& precision) {
    // sqrt( (s + sqrt(R))² + t² ) with s the sup part and R the radicand
    Rational s = sup_norm(z.u);
    Rational radicand = sorted_radicand(z.u);
    Rational prec = precision;
    for (int attempt = 0; attempt < 8; ++attempt) {
        CertReal root = cert_sqrt(radicand, prec);
        CertReal inner = CertReal(Rational(s * s + radicand + z.t * z.t)) + (2 * s) * root;
        CertReal result = cert_sqrt(inner, prec);
        if (result.rad <= precision) return result;
        prec /= 16;
    }
    throw std::logic_error("pair_norm: failed to meet precision target");
}

nlohmann::ordered_json to_json(const CZeroPlusR& z) {
    nlohmann::ordered_json j;
    j["c0_part"] = to_json(z.u);
    j["scalar"] = to_string(z.t);
    return j;
}

CertReal c_renorm(const CSeq& x, const Rational& precision) {
    return CertReal(sup_norm(x)) + pair_norm(c_embed(x), precision);
}

std::vector<Rational> c_renorm_fingerprint(const CSeq& x) {
    CZeroPlusR z = c_embed(x);
    return {sup_norm(x), sup_norm(z.u), sorted_radicand(z.u), rat_abs(z.t)};
}

// -------------------------------------------------------------- BlockVec

const char* to_string(Ambient a) { return a == Ambient::C0Sum ? "c0sum" : "l1sum"; }

BlockVec::BlockVec(std::vector<Block> blocks, Ambient ambient)
    : blocks_(std::move(blocks)), ambient_(ambient) {
    std::map<int, std::size_t> class_dim;
    for (const Block& b : blocks_) {
        if (b.coords.empty()) throw std::invalid_argument("BlockVec: empty block");
        auto [it, fresh] = class_dim.emplace(b.class_id, b.coords.size());
        if (!fresh && it->second != b.coords.size())
            throw std::invalid_argument("BlockVec: blocks of one class must share dimension");
    }
}

Rational BlockVec::block_sq(std::size_t i) const {
    Rational s(0);
    for (const Rational& c : blocks_[i].coords) s += c * c;
    return s;
}

BlockVec BlockVec::operator+(const BlockVec& o) const {
    if (ambient_ != o.ambient_ || blocks_.size() != o.blocks_.size())
        throw std::invalid_argument("BlockVec: shape mismatch");
    std::vector<Block> out = blocks_;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].class_id != o.blocks_[i].class_id ||
            out[i].coords.size() != o.blocks_[i].coords.size())
            throw std::invalid_argument("BlockVec: shape mismatch");
        for (std::size_t k = 0; k < out[i].coords.size(); ++k)
            out[i].coords[k] += o.blocks_[i].coords[k];
    }
    return BlockVec(std::move(out), ambient_);
}

BlockVec operator*(const Rational& c, const BlockVec& v) {
    std::vector<BlockVec::Block> out = v.blocks_;
    for (auto& b : out)
        for (auto& x : b.coords) x *= c;
    return BlockVec(std::move(out), v.ambient_);
}

bool BlockVec::operator==(const BlockVec& o) const {
    if (ambient_ != o.ambient_ || blocks_.size() != o.blocks_.size()) return false;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].class_id != o.blocks_[i].class_id || blocks_[i].coords != o.blocks_[i].coords)
            return false;
    return true;
}

nlohmann::ordered_json to_json(const BlockVec& v) {
    nlohmann::ordered_json j;
    j["ambient"] = to_string(v.ambient());
    j["blocks"] = nlohmann::ordered_json::array();
    for (const auto& b : v.blocks()) {
        nlohmann::ordered_json jb;
        jb["class"] = b.class_id;
        jb["coords"] = nlohmann::ordered_json::array();
        for (const Rational& c : b.coords) jb["coords"].push_back(to_string(c));
        j["blocks"].push_back(std::move(jb));
    }
    return j;
}

// -------------------------------------------------------------- BlockIso

namespace {

void check_orthogonal(const std::vector<std::vector<Rational>>& q) {
    std::size_t d = q.size();
    for (const auto& row : q)
        if (row.size() != d) throw std::invalid_argument("BlockIso: matrix must be square");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rational dot(0);
            for (std::size_t k = 0; k < d; ++k) dot += q[k][i] * q[k][j];
            if (dot != (i == j ? 1 : 0))
                throw std::invalid_argument("BlockIso: matrix is not orthogonal");
        }
}

}  // namespace

BlockIso::BlockIso(std::vector<int> class_perm,
                   std::vector<std::vector<std::vector<Rational>>> block_maps)
    : class_perm_(std::move(class_perm)), block_maps_(std::move(block_maps)) {
    if (class_perm_.size() != block_maps_.size())
        throw std::invalid_argument("BlockIso: permutation/matrix count mismatch");
    std::vector<bool> seen(class_perm_.size(), false);
    for (int p : class_perm_) {
        if (p < 0 || p >= static_cast<int>(class_perm_.size()) || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("BlockIso: not a permutation of positions");
        seen[static_cast<std::size_t>(p)] = true;
    }
    for (const auto& q : block_maps_) check_orthogonal(q);
}

BlockIso BlockIso::identity(int n_blocks, const std::vector<int>& dims) {
    std::vector<int> perm(static_cast<std::size_t>(n_blocks));
    std::vector<std::vector<std::vector<Rational>>> maps;
    for (int j = 0; j < n_blocks; ++j) {
        perm[static_cast<std::size_t>(j)] = j;
        std::size_t d = static_cast<std::size_t>(dims[static_cast<std::size_t>(j)]);
        std::vector<std::vector<Rational>> q(d, std::vector<Rational>(d, Rational(0)));
        for (std::size_t i = 0; i < d; ++i) q[i][i] = 1;
        maps.push_back(std::move(q));
    }
    return BlockIso(std::move(perm), std::move(maps));
}

BlockIso BlockIso::inverse() const {
    // act: out[j] = Q_j · in[perm[j]], so the inverse sends out back via
    // in[perm[j]] = Q_jᵀ · out[j]
    std::size_t n = class_perm_.size();
    std::vector<int> inv_perm(n);
    std::vector<std::vector<std::vector<Rational>>> inv_maps(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t k = static_cast<std::size_t>(class_perm_[j]);
        inv_perm[k] = static_cast<int>(j);
        const auto& q = block_maps_[j];
        std::vector<std::vector<Rational>> qt(q.size(), std::vector<Rational>(q.size()));
        for (std::size_t r = 0; r < q.size(); ++r)
            for (std::size_t c = 0; c < q.size(); ++c) qt[c][r] = q[r][c];
        inv_maps[k] = std::move(qt);
    }
    return BlockIso(std::move(inv_perm), std::move(inv_maps));
}

BlockVec act_blocks(const BlockIso& g, const BlockVec& v) {
    const auto& blocks = v.blocks();
    if (g.class_perm().size() != blocks.size())
        throw std::invalid_argument("act_blocks: shape mismatch");
    std::vector<BlockVec::Block> out;
    out.reserve(blocks.size());
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        const BlockVec::Block& src = blocks[static_cast<std::size_t>(g.class_perm()[j])];
        if (src.class_id != blocks[j].class_id)
            throw std::invalid_argument("act_blocks: permutation must preserve classes");
        const auto& q = g.block_maps()[j];
        if (q.size() != src.coords.size())
            throw std::invalid_argument("act_blocks: matrix dimension mismatch");
        BlockVec::Block b;
        b.class_id = src.class_id;
        b.coords.assign(src.coords.size(), Rational(0));
        for (std::size_t r = 0; r < q.size(); ++r)
            for (std::size_t c = 0; c < q.size(); ++c) b.coords[r] += q[r][c] * src.coords[c];
        out.push_back(std::move(b));
    }
    return BlockVec(std::move(out), v.ambient());
}

// ----------------------------------------------------------- sum norms

Rational c0sum_max_sq(const BlockVec& v) {
    Rational m(0);
    for (std::size_t i = 0; i < v.blocks().size(); ++i) m = std::max(m, v.block_sq(i));
    return m;
}

Rational c0sum_radicand(const BlockVec& v) {
    if (v.ambient() != Ambient::C0Sum) throw std::domain_error("c0sum norm: wrong ambient");
    // within each class, the largest squares take the smallest positions
    std::map<int, std::vector<std::size_t>> positions;
    for (std::size_t i = 0; i < v.blocks().size(); ++i)
        positions[v.blocks()[i].class_id].push_back(i);
    std::vector<Rational> sq_at(v.blocks().size());
    for (auto& [cls, pos] : positions) {
        std::vector<Rational> squares;
        squares.reserve(pos.size());
        for (std::size_t i : pos) squares.push_back(v.block_sq(i));
        std::sort(squares.begin(), squares.end(), std::greater<Rational>());
        for (std::size_t k = 0; k < pos.size(); ++k) sq_at[pos[k]] = squares[k];
    }
    Rational r(0);
    Rational w(1);
    for (std::size_t i = 0; i < sq_at.size(); ++i) {
        w /= 4;
        r += sq_at[i] * w;
    }
    return r;
}

CertReal c0sum_sorted_norm(const BlockVec& v, const Rational& precision) {
    Rational radicand = c0sum_radicand(v);
    Rational prec(precision / 2);
    return cert_sqrt(c0sum_max_sq(v), prec) + cert_sqrt(radicand, prec);
}

CertReal l1sum_sc_norm(const BlockVec& v, const Rational& precision) {
    if (v.ambient() != Ambient::L1Sum) throw std::domain_error("l1sum norm: wrong ambient");
    std::size_t parts = v.blocks().size() + 1;
    Rational prec(precision / static_cast<long>(parts));
    CertReal sum{Rational(0), Rational(0)};
    Rational total_sq(0);
    for (std::size_t i = 0; i < v.blocks().size(); ++i) {
        Rational sq = v.block_sq(i);
        total_sq += sq;
        sum = sum + cert_sqrt(sq, prec);
    }
    return sum + cert_sqrt(total_sq, prec);
}

std::vector<Rational> l1sum_fingerprint(const BlockVec& v) {
    std::vector<Rational> squares;
    squares.reserve(v.blocks().size());
    for (std::size_t i = 0; i < v.blocks().size(); ++i) squares.push_back(v.block_sq(i));
    std::sort(squares.begin(), squares.end());
    return squares;
}

}  // namespace renormlab
