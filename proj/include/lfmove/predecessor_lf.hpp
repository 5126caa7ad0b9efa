#pragma once

#include "lfmove/rlbwt.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace lfmove {

/*
 * Baseline LF over run heads: pi(i) = pi(pred(i)) + i - pred(i), with the
 * predecessor found by binary search over the sorted heads.
 */
class PredecessorLf {
public:
    explicit PredecessorLf(const RunLengthBWT& rl) : heads_(rl.run_heads), dest_(rl.runs())
    {
        RunLf lf(rl);
        for (std::uint64_t k = 0; k < rl.runs(); ++k)
            dest_[k] = lf.at_run(k, heads_[k]);
    }

    std::uint64_t operator()(std::uint64_t i) const
    {
        auto k = static_cast<std::uint64_t>(std::upper_bound(heads_.begin(), heads_.end(), i) - heads_.begin()) - 1;
        return dest_[k] + (i - heads_[k]);
    }

    std::uint64_t size_in_bytes() const { return (heads_.size() + dest_.size()) * 8; }

private:
    std::vector<std::uint64_t> heads_;
    std::vector<std::uint64_t> dest_;
};

} // namespace lfmove
