#pragma once

#include "lfmove/text.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lfmove {

using sa_index_t = std::uint32_t;

/*
 * Prefix doubling: each round sorts suffixes by (rank of first k symbols,
 * rank of next k symbols) with one counting sort, reusing the previous
 * order for the second key. O(n log n) worst case.
 *
 * The input must be terminated (see validate_terminated); texts of 2^32
 * symbols or more are rejected.
 */
std::vector<sa_index_t> build_suffix_array(std::span<const symbol_t> text);

inline std::vector<sa_index_t> build_suffix_array(const Text& text)
{
    return build_suffix_array(text.bytes());
}

// bwt[i] = text[(sa[i] + n - 1) mod n]
std::vector<symbol_t> bwt_from_sa(std::span<const symbol_t> text, std::span<const sa_index_t> sa);

std::vector<symbol_t> build_bwt(const Text& text);

} // namespace lfmove
