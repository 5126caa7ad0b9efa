#include "lfmove/bit_vector.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace lfmove {

BitVector::BitVector(std::uint64_t bits, std::vector<std::uint64_t> words) : size_(bits), words_(std::move(words))
{
    if (words_.size() != (bits + 63) / 64)
        throw std::invalid_argument("bitvector word count " + std::to_string(words_.size()) +
                                    " does not match bit length " + std::to_string(bits));
    if (bits % 64 && (words_.back() >> (bits % 64)) != 0)
        throw std::invalid_argument("bitvector has bits set past its length");

    std::uint64_t supers = words_.size() / kWordsPerSuper + 1;
    super_.assign(supers + 1, 0);
    std::uint64_t acc = 0;
    for (std::uint64_t w = 0; w < words_.size(); ++w) {
        if (w % kWordsPerSuper == 0)
            super_[w / kWordsPerSuper] = acc;
        acc += std::popcount(words_[w]);
    }
    for (std::uint64_t s = (words_.size() + kWordsPerSuper - 1) / kWordsPerSuper; s <= supers; ++s)
        super_[s] = acc;
}

std::uint64_t BitVector::select1(std::uint64_t j) const
{
    assert(j >= 1 && j <= ones());
    // last superblock with fewer than j ones before it
    auto it = std::lower_bound(super_.begin(), super_.end(), j);
    std::uint64_t sb = static_cast<std::uint64_t>(it - super_.begin()) - 1;
    std::uint64_t remaining = j - super_[sb];
    std::uint64_t w = sb * kWordsPerSuper;
    for (;; ++w) {
        auto c = static_cast<std::uint64_t>(std::popcount(words_[w]));
        if (c >= remaining)
            break;
        remaining -= c;
    }
    std::uint64_t word = words_[w];
    for (std::uint64_t k = 1; k < remaining; ++k)
        word &= word - 1;
    return w * 64 + static_cast<std::uint64_t>(std::countr_zero(word));
}

} // namespace lfmove
