#pragma once

#include "lfmove/move_table.hpp"
#include "lfmove/rlbwt.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lfmove {

struct Rational {
    std::uint64_t num = 1;
    std::uint64_t den = 1;

    // "2", "2.5" or "5/2"
    static Rational parse(std::string_view s);
    std::string to_string() const;

    bool operator==(const Rational&) const = default;
};

struct SplitConfig {
    enum class Mode : std::uint8_t { none = 0, max_length = 1, balanced = 2 };

    Mode mode = Mode::none;
    Rational factor{};    // max_length
    std::uint64_t d = 2;  // balanced

    static SplitConfig none() { return {}; }
    static SplitConfig max_length(Rational f);
    static SplitConfig balanced(std::uint64_t d);

    bool operator==(const SplitConfig&) const = default;
};

struct SplitRuns {
    std::vector<std::uint64_t> sub_run_heads;
    std::vector<std::uint64_t> parent_run; // maximal run containing each sub-run
};

SplitRuns no_split(const RunLengthBWT& rl);

// ceil(factor * n / r)
std::uint64_t max_run_length(std::uint64_t n, std::uint64_t r, Rational factor);

// cuts every run longer than max_run_length into ceil(L / threshold) pieces
// whose lengths differ by at most one
SplitRuns split_max_length(const RunLengthBWT& rl, Rational factor);

/*
 * Adds heads to the permutation pi until, for every pair q < q' of
 * consecutive destinations of heads (with n closing the last interval),
 * fewer than 2d heads lie in [q, q'). Each step takes the violating
 * interval with the smallest q, picks the d-th largest head p inside it
 * and adds pi^-1(p) as a new head, which makes p a destination. At most
 * |heads| / (d - 1) heads are added.
 *
 * heads: sorted, starting with 0, pi incrementing between consecutive
 * heads. Returns the augmented sorted head set.
 */
std::vector<std::uint64_t> balance_heads(std::span<const std::uint64_t> heads, std::uint64_t n,
                                         const std::function<std::uint64_t(std::uint64_t)>& pi,
                                         const std::function<std::uint64_t(std::uint64_t)>& pi_inverse,
                                         std::uint64_t d);

// balance over the maximal run heads of the BWT under LF
SplitRuns balance(const RunLengthBWT& rl, const RunLf& lf, std::uint64_t d);

SplitRuns apply_split(const RunLengthBWT& rl, const SplitConfig& config);

// sub-run table; destinations recomputed from LF
MoveTable rebuild_table(const RunLengthBWT& rl, const SplitRuns& splits);

} // namespace lfmove
