#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace chordcycle {

// Subset of the vertex universe 0..capacity-1, stored as packed 64-bit words.
// Neighborhood intersections and unions are the hot path of every cycle
// search, so all set algebra is word-parallel.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity)
        : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ULL;
        s.trim();
        return s;
    }

    int capacity() const { return capacity_; }

    void add(int v) { words_[v >> 6] |= 1ULL << (v & 63); }
    void remove(int v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }
    bool contains(int v) const {
        if (v < 0 || v >= capacity_) return false;
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    // First member, or -1 when empty.
    int first() const { return next(-1); }

    // Smallest member strictly greater than v, or -1.
    int next(int v) const {
        int start = v + 1;
        if (start >= capacity_) return -1;
        int wi = start >> 6;
        uint64_t w = words_[wi] >> (start & 63);
        if (w) return start + std::countr_zero(w);
        for (++wi; wi < static_cast<int>(words_.size()); ++wi)
            if (words_[wi]) return (wi << 6) + std::countr_zero(words_[wi]);
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

private:
    void trim() {
        if (capacity_ & 63) words_.back() &= (1ULL << (capacity_ & 63)) - 1;
    }

    int capacity_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace chordcycle
