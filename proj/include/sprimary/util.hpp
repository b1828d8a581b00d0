#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sprimary {

/// Malformed input documents (bad JSON, unknown kinds, wrong payload shape).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Semantically invalid requests: precondition violations, size caps,
/// cross-ring mixing, degenerate multiplicative sets, overflow.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Fixed-universe bit set over element indices 0..n-1.
class ElemSet {
public:
    ElemSet() : n_(0) {}
    explicit ElemSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }

    void set(int i) { w_[i >> 6] |= (uint64_t(1) << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool none() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    bool subset_of(const ElemSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const ElemSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    friend ElemSet operator&(const ElemSet& a, const ElemSet& b) {
        ElemSet r(a.n_);
        for (size_t i = 0; i < a.w_.size(); ++i) r.w_[i] = a.w_[i] & b.w_[i];
        return r;
    }
    friend ElemSet operator|(const ElemSet& a, const ElemSet& b) {
        ElemSet r(a.n_);
        for (size_t i = 0; i < a.w_.size(); ++i) r.w_[i] = a.w_[i] | b.w_[i];
        return r;
    }
    bool operator==(const ElemSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const ElemSet& o) const { return !(*this == o); }

    /// Canonical order: cardinality, then membership sequence b_0 b_1 ...
    /// (at the first differing index, the set missing that element sorts first).
    bool canonical_less(const ElemSet& o) const {
        int ca = count(), cb = o.count();
        if (ca != cb) return ca < cb;
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t d = w_[i] ^ o.w_[i];
            if (d) {
                int bit = __builtin_ctzll(d);
                return !((w_[i] >> bit) & 1);
            }
        }
        return false;
    }

    std::vector<int> to_list() const {
        std::vector<int> out;
        out.reserve(count());
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                int bit = __builtin_ctzll(w);
                f(int(wi * 64 + bit));
                w &= w - 1;
            }
        }
    }

    size_t hash() const {
        size_t h = size_t(n_) * 0x9e3779b97f4a7c15ull;
        for (uint64_t w : w_) h = h * 0x100000001b3ull ^ w;
        return h;
    }

private:
    int n_;
    std::vector<uint64_t> w_;
};

}  // namespace sprimary
