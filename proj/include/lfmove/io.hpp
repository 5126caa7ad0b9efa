#pragma once

/*
 * Index file layout, all integers little-endian:
 *
 *   "MVTB"            magic
 *   u32               version (kFormatVersion)
 *   u8                backend (0 table, 1 blocked)
 *   u8 u64 u64 u64    split mode, factor numerator, factor denominator, d
 *   u64 u64           n, maximal run count
 *   u16 {u8 u64}*     alphabet: symbol count, then (symbol, occurrences)
 *   u32               section count
 *   {u64 bytes}*      sections, each prefixed with its byte length
 *
 * Table backend sections: rows (u64 length, u64 dest_run, u64 dest_offset,
 * u8 symbol per row), run heads (u64 each).
 * Blocked backend sections: layout (encoding, block size, rates, row count,
 * symbols), head samples, then one section per block. Bitvectors are
 * written as u64 bit length followed by u64 words.
 */

#include "lfmove/index.hpp"

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

namespace lfmove {

inline constexpr std::uint32_t kFormatVersion = 1;

std::vector<std::uint8_t> serialize(const Index& index);
Index deserialize(std::span<const std::uint8_t> bytes);

std::uint64_t save(const Index& index, std::ostream& out);
std::uint64_t save(const Index& index, const std::filesystem::path& path);

Index load(std::istream& in);
Index load(const std::filesystem::path& path);

} // namespace lfmove
