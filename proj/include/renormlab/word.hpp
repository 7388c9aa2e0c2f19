#pragma once

#include <string>
#include <vector>

#include <stdexcept>

namespace renormlab {

// Reduced words over abstract generators g0, g1, ... printed as
// 'a', 'b', ... with uppercase for inverses ("aBa" = g0 g1^-1 g0).
struct Letter {
    int gen = 0;
    bool inverse = false;
    bool operator==(const Letter& o) const { return gen == o.gen && inverse == o.inverse; }
};

class GenWord {
public:
    GenWord() = default;

    static GenWord one() { return GenWord(); }
    static GenWord generator(int gen, bool inverse = false) {
        GenWord w;
        w.push(Letter{gen, inverse});
        return w;
    }

    static GenWord parse(const std::string& s) {
        GenWord w;
        for (char c : s) {
            if (c == ' ' || c == '\t') continue;
            if (c >= 'a' && c <= 'z') w.push(Letter{c - 'a', false});
            else if (c >= 'A' && c <= 'Z') w.push(Letter{c - 'A', true});
            else throw std::invalid_argument(std::string("bad word character: ") + c);
        }
        return w;
    }

    // appends with free cancellation, so the word stays reduced
    void push(const Letter& l) {
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().inverse != l.inverse)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    GenWord operator*(const GenWord& rhs) const {
        GenWord w = *this;
        for (const Letter& l : rhs.letters_) w.push(l);
        return w;
    }

    GenWord inverse() const {
        GenWord w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.push(Letter{it->gen, !it->inverse});
        return w;
    }

    GenWord power(long k) const {
        GenWord base = k < 0 ? inverse() : *this;
        long n = k < 0 ? -k : k;
        GenWord w;
        for (long i = 0; i < n; ++i) w = w * base;
        return w;
    }

    bool operator==(const GenWord& o) const { return letters_ == o.letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }

    std::string str() const {
        if (letters_.empty()) return "e";
        std::string s;
        for (const Letter& l : letters_) {
            if (l.gen > 25) throw std::invalid_argument("word printing supports 26 generators");
            s += static_cast<char>((l.inverse ? 'A' : 'a') + l.gen);
        }
        return s;
    }

private:
    std::vector<Letter> letters_;
};

inline bool operator<(const GenWord& a, const GenWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto& la = a.letters();
    const auto& lb = b.letters();
    for (std::size_t i = 0; i < la.size(); ++i) {
        int ra = la[i].gen * 2 + (la[i].inverse ? 1 : 0);
        int rb = lb[i].gen * 2 + (lb[i].inverse ? 1 : 0);
        if (ra != rb) return ra < rb;
    }
    return false;
}

}  // namespace renormlab
