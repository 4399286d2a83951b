// Fixed-capacity dynamic bitset used for adjacency rows and vertex sets.
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rgl {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    void assign(int i, bool v) { v ? set(i) : reset(i); }
    void clear() { for (auto& w : words_) w = 0; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Smallest set bit, or -1.
    int first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
        return -1;
    }
    // Smallest set bit > i, or -1.
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        std::size_t k = i >> 6;
        std::uint64_t w = words_[k] & (~0ULL << (i & 63));
        while (true) {
            if (w) return static_cast<int>(k * 64 + std::countr_zero(w));
            if (++k >= words_.size()) return -1;
            w = words_[k];
        }
    }

    int intersect_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += std::popcount(words_[k] & o.words_[k]);
        return c;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    // Complement within the capacity.
    Bitset complement() const {
        Bitset r(n_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        if (n_ & 63) r.words_.back() &= (1ULL << (n_ & 63)) - 1;
        return r;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int i = first(); i != -1; i = next(i)) v.push_back(i);
        return v;
    }
    static Bitset from_vector(int n, const std::vector<int>& idx) {
        Bitset b(n);
        for (int i : idx) b.set(i);
        return b;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }
    friend bool operator<(const Bitset& a, const Bitset& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.words_ < b.words_;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

using VertexSet = Bitset;

} // namespace rgl
