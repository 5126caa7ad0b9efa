#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace lfmove {

/*
 * Plain bitvector with rank/select support.
 *
 * rank: cumulative counts every 512 bits plus popcounts inside the
 * superblock. select: binary search over the cumulative counts, then a
 * word scan.
 */
class BitVector {
public:
    class Builder {
    public:
        Builder() = default;
        explicit Builder(std::uint64_t bits) : size_(bits), words_((bits + 63) / 64) {}

        void push_back(bool bit)
        {
            if (size_ % 64 == 0)
                words_.push_back(0);
            if (bit)
                words_.back() |= std::uint64_t{1} << (size_ % 64);
            ++size_;
        }
        void set(std::uint64_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
        std::uint64_t size() const { return size_; }

        BitVector build() && { return BitVector(size_, std::move(words_)); }

    private:
        std::uint64_t size_ = 0;
        std::vector<std::uint64_t> words_;
    };

    BitVector() = default;
    BitVector(std::uint64_t bits, std::vector<std::uint64_t> words);

    std::uint64_t size() const { return size_; }
    std::uint64_t ones() const { return super_.empty() ? 0 : super_.back(); }

    bool operator[](std::uint64_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

    // ones in [0, i), i <= size()
    std::uint64_t rank1(std::uint64_t i) const
    {
        std::uint64_t sb = i / kSuperBits;
        std::uint64_t r = super_[sb];
        std::uint64_t w = sb * kWordsPerSuper;
        for (; w < i / 64; ++w)
            r += std::popcount(words_[w]);
        if (i % 64)
            r += std::popcount(words_[w] & ((std::uint64_t{1} << (i % 64)) - 1));
        return r;
    }

    // position of the j-th one, 1 <= j <= ones()
    std::uint64_t select1(std::uint64_t j) const;

    std::span<const std::uint64_t> words() const { return words_; }

    std::uint64_t size_in_bytes() const { return (words_.size() + super_.size()) * 8 + 8; }

    bool operator==(const BitVector& o) const { return size_ == o.size_ && words_ == o.words_; }

private:
    static constexpr std::uint64_t kSuperBits = 512;
    static constexpr std::uint64_t kWordsPerSuper = kSuperBits / 64;

    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> super_; // ones before each superblock, plus total
};

} // namespace lfmove
