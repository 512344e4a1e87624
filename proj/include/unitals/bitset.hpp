#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "unitals/simd.hpp"

namespace unitals {

// Fixed-size dynamic bitset. Bits beyond size() are always zero, so the word
// kernels can run over whole words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }
    void set_all();

    std::size_t count() const { return simd::active().popcount(words_); }
    bool any() const { return simd::active().any(words_); }
    bool none() const { return !any(); }

    std::size_t count_and(const Bitset& other) const { return simd::active().and_popcount(words_, other.words_); }
    bool intersects(const Bitset& other) const { return simd::active().intersects(words_, other.words_); }
    bool is_subset_of(const Bitset& other) const { return simd::active().is_subset(words_, other.words_); }

    Bitset& operator&=(const Bitset& other) {
        simd::active().and_into(words_, words_, other.words_);
        return *this;
    }
    Bitset& operator|=(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    // this = this & ~other
    Bitset& subtract(const Bitset& other) {
        simd::active().andnot_into(words_, words_, other.words_);
        return *this;
    }

    static void intersect(Bitset& dst, const Bitset& a, const Bitset& b) {
        simd::active().and_into(dst.words_, a.words_, b.words_);
    }

    bool operator==(const Bitset&) const = default;

    // Lowest set bit, or size() if empty.
    std::size_t first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return nbits_;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_indices() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> mutable_words() { return words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace unitals
