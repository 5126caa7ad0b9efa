#pragma once

// Corpus and pattern generators shared by the benchmarks, the CLI and the
// tests. Seeded std::mt19937_64 with modulo reduction, so output depends only
// on the seed.

#include "lfmove/text.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace lfmove::workload {

// first sigma symbols of "ACGTNRYS", or 'a'.. for larger sigma
std::vector<symbol_t> alphabet_of_size(unsigned sigma);

std::vector<symbol_t> random_text(std::uint64_t n, unsigned sigma, std::mt19937_64& rng);

// prefix of length n of the Fibonacci word over {a, b}
std::vector<symbol_t> fibonacci_word(std::uint64_t n);

// copies of base, each symbol replaced with probability rate by another
// symbol of the base's alphabet, concatenated
std::vector<symbol_t> mutated_copies(std::span<const symbol_t> base, unsigned copies, double rate,
                                     std::mt19937_64& rng);

// (bc)^(n/10) a^(4n/5), read as a BWT; n must be a multiple of 10
std::vector<symbol_t> adversarial_bwt(std::uint64_t n);

// random string over {b, c} of length m with "aaaa" after every symbol
std::vector<symbol_t> interleaved_adversarial_text(std::uint64_t m, std::mt19937_64& rng);

// count patterns of length 1..max_len: mostly substrings of text (never
// covering its terminator), the rest random strings over the text's symbols
std::vector<std::vector<symbol_t>> random_patterns(std::span<const symbol_t> text, std::uint64_t count,
                                                   std::uint64_t max_len, std::mt19937_64& rng);

inline std::vector<symbol_t> bytes(std::string_view s)
{
    return {s.begin(), s.end()};
}

} // namespace lfmove::workload
