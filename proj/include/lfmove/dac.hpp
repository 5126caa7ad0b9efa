#pragma once

#include "lfmove/bit_vector.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lfmove {

/*
 * Directly addressable codes with 8-bit chunks. Level l holds the l-th
 * byte of every value that needs more than l bytes; a set bit in the
 * level's continuation vector means the value goes on, and rank over that
 * vector gives its slot in the next level.
 */
class DacList {
public:
    struct Level {
        std::vector<std::uint8_t> chunks;
        BitVector more;

        bool operator==(const Level&) const = default;
    };

    DacList() = default;
    explicit DacList(std::span<const std::uint64_t> values);

    static DacList from_levels(std::vector<Level> levels);

    std::uint64_t size() const { return levels_.empty() ? 0 : levels_[0].chunks.size(); }

    std::uint64_t operator[](std::uint64_t i) const
    {
        std::uint64_t v = 0;
        unsigned shift = 0;
        for (const Level& level : levels_) {
            v |= std::uint64_t{level.chunks[i]} << shift;
            if (!level.more[i])
                break;
            i = level.more.rank1(i);
            shift += 8;
        }
        return v;
    }

    const std::vector<Level>& levels() const { return levels_; }

    std::uint64_t size_in_bytes() const;

    bool operator==(const DacList&) const = default;

private:
    std::vector<Level> levels_;
};

} // namespace lfmove
