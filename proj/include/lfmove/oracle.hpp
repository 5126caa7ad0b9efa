#pragma once

// Brute-force reference implementations. Slow by construction; they share
// no code with the table-based paths they are used to check.

#include "lfmove/text.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lfmove::oracle {

// C[bwt[i]] + occurrences of bwt[i] in bwt[0..i); O(i) per call
std::uint64_t lf(std::span<const symbol_t> bwt, const Alphabet& alphabet, std::uint64_t i);

// LF for every position by one counting pass
std::vector<std::uint64_t> lf_all(std::span<const symbol_t> bwt);

// suffix order by direct comparison of suffixes
std::vector<std::uint64_t> suffix_array_naive(std::span<const symbol_t> text);

// sliding-window count over text positions, terminator excluded
std::uint64_t count(std::span<const symbol_t> text, std::span<const symbol_t> pattern);

// text reconstructed by iterating LF from the terminator row
std::vector<symbol_t> invert(std::span<const symbol_t> bwt);

// number of i in [0, n-1) with LF(i+1) != LF(i) + 1
std::uint64_t lf_breaks(std::span<const std::uint64_t> lf);

} // namespace lfmove::oracle
