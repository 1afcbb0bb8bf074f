#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace hclab {

// Membership mask over the elements 0..n-1 of a fixed finite group.
class ElementBitset {
public:
    ElementBitset() = default;
    explicit ElementBitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int universe_size() const { return n_; }

    void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const ElementBitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const ElementBitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    ElementBitset& operator|=(const ElementBitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    ElementBitset& operator&=(const ElementBitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend ElementBitset operator|(ElementBitset a, const ElementBitset& b) { return a |= b; }
    friend ElementBitset operator&(ElementBitset a, const ElementBitset& b) { return a &= b; }

    bool operator==(const ElementBitset& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const ElementBitset& o) const { return !(*this == o); }

    // Member-list order: the set whose smallest differing element is present
    // compares smaller. Deterministic tie-break used throughout (lattice
    // ordering, canonical Sylow representatives, witness selection).
    int compare(const ElementBitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t d = words_[i] ^ o.words_[i];
            if (d) {
                int bit = std::countr_zero(d);
                return ((words_[i] >> bit) & 1) ? -1 : 1;
            }
        }
        return 0;
    }
    bool operator<(const ElementBitset& o) const { return compare(o) < 0; }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int bit = std::countr_zero(w);
                out.push_back(int(i << 6) + bit);
                w &= w - 1;
            }
        }
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace hclab
