#include "lfmove/rlbwt.hpp"

#include "lfmove/error.hpp"

#include <algorithm>
#include <cassert>

namespace lfmove {

std::uint64_t RunLengthBWT::run_of(std::uint64_t i) const
{
    auto it = std::upper_bound(run_heads.begin(), run_heads.end(), i);
    return static_cast<std::uint64_t>(it - run_heads.begin()) - 1;
}

std::vector<symbol_t> RunLengthBWT::expand() const
{
    std::vector<symbol_t> out;
    out.reserve(n);
    for (std::uint64_t k = 0; k < runs(); ++k)
        out.insert(out.end(), run_length(k), run_chars[k]);
    return out;
}

RunLengthBWT runs_from_bwt(std::span<const symbol_t> bwt)
{
    if (bwt.empty())
        throw Error("cannot run-length encode an empty BWT");
    RunLengthBWT rl;
    rl.n = bwt.size();
    for (std::size_t i = 0; i < bwt.size(); ++i) {
        if (i == 0 || bwt[i] != bwt[i - 1]) {
            rl.run_chars.push_back(bwt[i]);
            rl.run_heads.push_back(i);
        }
    }
    return rl;
}

RunLf::RunLf(const RunLengthBWT& rl)
    : n_(rl.n), chars_(rl.run_chars), heads_(rl.run_heads), before_(rl.runs())
{
    std::array<std::uint64_t, 256> seen{};
    for (std::uint64_t k = 0; k < rl.runs(); ++k) {
        symbol_t c = chars_[k];
        before_[k] = seen[c];
        seen[c] += rl.run_length(k);
        runs_of_sym_[c].push_back(k);
    }
    for (int c = 0; c < 256; ++c)
        c_[c + 1] = c_[c] + seen[c];
}

std::uint64_t RunLf::run_of(std::uint64_t i) const
{
    auto it = std::upper_bound(heads_.begin(), heads_.end(), i);
    return static_cast<std::uint64_t>(it - heads_.begin()) - 1;
}

std::uint64_t RunLf::operator()(std::uint64_t i) const
{
    assert(i < n_);
    return at_run(run_of(i), i);
}

std::uint64_t RunLf::inverse(std::uint64_t p) const
{
    assert(p < n_);
    // symbol whose F-column range holds p
    auto c = static_cast<symbol_t>(std::upper_bound(c_.begin(), c_.end(), p) - c_.begin() - 1);
    std::uint64_t j = p - c_[c];
    const auto& runs = runs_of_sym_[c];
    auto it = std::upper_bound(runs.begin(), runs.end(), j,
                               [&](std::uint64_t v, std::uint64_t k) { return v < before_[k]; });
    std::uint64_t k = *(it - 1);
    return heads_[k] + (j - before_[k]);
}

} // namespace lfmove
