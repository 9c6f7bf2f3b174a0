#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace vcw {

// Fixed-width bit vector over 64-bit words. Bit i lives in word i/64 at
// position i%64. Unused tail bits of the last word are kept zero, so
// whole-word operations (==, popcount, subset tests) need no masking.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t width, bool fill = false)
        : width_(width), words_(word_count(width), fill ? ~std::uint64_t{0} : 0) {
        if (fill) trim();
    }

    std::size_t size() const { return width_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool any() const {
        for (std::uint64_t w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

    Bitset flipped() const {
        Bitset r(*this);
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    // a - b, set difference
    Bitset minus(const Bitset& o) const {
        Bitset r(*this);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~o.words_[k];
        return r;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    bool operator==(const Bitset& o) const = default;
    // word-wise order; any total order works for canonical sorting
    bool operator<(const Bitset& o) const {
        return words_ < o.words_;
    }

    // index of lowest set bit, or size() when empty
    std::size_t find_first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return (k << 6) + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return width_;
    }

    // element 0 is the leftmost character, e.g. {a} in [a,b] prints "10"
    std::string to_string() const {
        std::string s(width_, '0');
        for (std::size_t i = 0; i < width_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

    std::size_t hash() const {
        std::size_t h = width_;
        for (std::uint64_t w : words_)
            h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

private:
    static std::size_t word_count(std::size_t width) { return (width + 63) >> 6; }
    void trim() {
        if (!words_.empty() && (width_ & 63))
            words_.back() &= (~std::uint64_t{0}) >> (64 - (width_ & 63));
    }

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace vcw
