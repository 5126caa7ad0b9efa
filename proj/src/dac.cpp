#include "lfmove/dac.hpp"

#include <stdexcept>

namespace lfmove {

DacList::DacList(std::span<const std::uint64_t> values)
{
    std::vector<std::uint64_t> current(values.begin(), values.end());
    while (!current.empty()) {
        Level level;
        level.chunks.reserve(current.size());
        BitVector::Builder more(current.size());
        std::vector<std::uint64_t> next;
        for (std::uint64_t i = 0; i < current.size(); ++i) {
            level.chunks.push_back(static_cast<std::uint8_t>(current[i] & 0xff));
            if (current[i] >> 8) {
                more.set(i);
                next.push_back(current[i] >> 8);
            }
        }
        level.more = std::move(more).build();
        levels_.push_back(std::move(level));
        current.swap(next);
    }
}

DacList DacList::from_levels(std::vector<Level> levels)
{
    for (std::size_t l = 0; l < levels.size(); ++l) {
        const Level& lv = levels[l];
        if (lv.more.size() != lv.chunks.size())
            throw std::invalid_argument("DAC level " + std::to_string(l) + " has mismatched continuation bits");
        std::uint64_t continuing = lv.more.ones();
        std::uint64_t next = l + 1 < levels.size() ? levels[l + 1].chunks.size() : 0;
        if (continuing != next)
            throw std::invalid_argument("DAC level " + std::to_string(l) + " continuation count mismatch");
        if (lv.chunks.empty())
            throw std::invalid_argument("empty DAC level");
    }
    DacList d;
    d.levels_ = std::move(levels);
    return d;
}

std::uint64_t DacList::size_in_bytes() const
{
    std::uint64_t b = 8;
    for (const Level& l : levels_)
        b += l.chunks.size() + l.more.size_in_bytes();
    return b;
}

} // namespace lfmove
