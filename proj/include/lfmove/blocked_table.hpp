#pragma once

#include "lfmove/bit_vector.hpp"
#include "lfmove/dac.hpp"
#include "lfmove/dest_list.hpp"
#include "lfmove/move_table.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lfmove {

struct BlockedOptions {
    DestEncoding encoding = DestEncoding::bitvector;
    std::uint64_t block_size = std::uint64_t{1} << 20;
    std::uint64_t dac_rate = 5;
    std::uint64_t interp_rate = 16;
    std::uint64_t head_sample_rate = 16; // every k-th row head kept absolute

    std::uint64_t dest_rate() const
    {
        return encoding == DestEncoding::dac_sampled ? dac_rate : encoding == DestEncoding::interpolated ? interp_rate : 0;
    }

    bool operator==(const BlockedOptions&) const = default;
};

// symbols other than the terminator that a block can index
inline constexpr std::size_t kMaxBlockSymbols = 8;

inline constexpr std::uint64_t kNoRow = std::numeric_limits<std::uint64_t>::max();

/*
 * Rows of a block: one bitvector per symbol marks the rows of that symbol,
 * lengths and offsets sit in DACs, and destination rows are split into one
 * non-decreasing list per symbol. For each symbol the block also keeps how
 * many rows of it come before the block and the nearest such rows on
 * either side of it.
 */
struct Block {
    std::vector<BitVector> char_bits;     // per symbol code
    std::vector<std::uint64_t> rank_before;
    std::vector<std::uint64_t> prev_row;  // last row of the symbol before the block, or kNoRow
    std::vector<std::uint64_t> next_row;  // first row of the symbol after the block, or kNoRow
    DacList lengths;
    DacList offsets;
    std::vector<DestList> dests;

    bool operator==(const Block&) const = default;
};

class BlockedTable {
public:
    BlockedTable() = default;

    // throws UnsupportedAlphabet when more than kMaxBlockSymbols
    // non-terminator symbols occur
    static BlockedTable compress(const MoveTable& table, const BlockedOptions& options = {});

    std::uint64_t size() const { return n_; }
    std::uint64_t num_rows() const { return rows_; }
    std::uint64_t num_blocks() const { return blocks_.size(); }
    const BlockedOptions& options() const { return options_; }
    const std::vector<symbol_t>& symbols() const { return symbols_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const std::vector<std::uint64_t>& head_samples() const { return head_samples_; }

    MoveRow row(std::uint64_t k) const;

    symbol_t symbol(std::uint64_t k) const { return symbols_[code_at(k)]; }

    std::uint64_t length(std::uint64_t k) const
    {
        return blocks_[k / options_.block_size].lengths[k % options_.block_size];
    }

    Position lf_step(Position p) const
    {
        Position q = destination(p.run);
        q.offset += p.offset;
        for (std::uint64_t len; q.offset >= (len = length(q.run));) {
            q.offset -= len;
            ++q.run;
        }
        return q;
    }

    std::pair<Position, std::uint64_t> lf_step_counted(Position p) const
    {
        Position q = destination(p.run);
        q.offset += p.offset;
        std::uint64_t scanned = 0;
        for (std::uint64_t len; q.offset >= (len = length(q.run));) {
            q.offset -= len;
            ++q.run;
            ++scanned;
        }
        return {q, scanned};
    }

    Position position_to_pair(std::uint64_t i) const;
    std::uint64_t pair_to_index(Position p) const;

    // rows in [0, k) with symbol c, k <= num_rows(); throws for symbols
    // outside the alphabet
    std::uint64_t run_rank(std::uint64_t k, symbol_t c) const;
    std::optional<std::uint64_t> run_select(std::uint64_t j, symbol_t c) const;
    std::uint64_t run_occurrences(symbol_t c) const;

    // first row >= k / last row <= k with symbol c, via the block's
    // bitvector or its boundary rows
    std::optional<std::uint64_t> next_run_of(std::uint64_t k, symbol_t c) const;
    std::optional<std::uint64_t> prev_run_of(std::uint64_t k, symbol_t c) const;

    std::uint64_t size_in_bytes() const;

    static BlockedTable from_parts(std::uint64_t n, std::uint64_t rows, BlockedOptions options,
                                   std::vector<symbol_t> symbols, std::vector<Block> blocks,
                                   std::vector<std::uint64_t> head_samples);

    bool operator==(const BlockedTable& o) const
    {
        return n_ == o.n_ && rows_ == o.rows_ && options_ == o.options_ && symbols_ == o.symbols_ &&
               blocks_ == o.blocks_ && head_samples_ == o.head_samples_;
    }

private:
    std::size_t code_at(std::uint64_t k) const
    {
        const Block& b = blocks_[k / options_.block_size];
        std::uint64_t l = k % options_.block_size;
        for (std::size_t c = 0; c + 1 < b.char_bits.size(); ++c)
            if (b.char_bits[c][l])
                return c;
        return b.char_bits.size() - 1;
    }

    Position destination(std::uint64_t k) const
    {
        const Block& b = blocks_[k / options_.block_size];
        std::uint64_t l = k % options_.block_size;
        std::size_t c = code_at(k);
        std::uint64_t local = b.char_bits[c].rank1(l);
        return {dest_at(b.dests[c], local), b.offsets[l]};
    }

    std::size_t code_of(symbol_t c) const
    {
        if (code_[c] < 0)
            throw std::invalid_argument("symbol " + std::to_string(c) + " is not in the table's alphabet");
        return static_cast<std::size_t>(code_[c]);
    }

    void index_codes();
    void check_rows() const;

    std::uint64_t n_ = 0;
    std::uint64_t rows_ = 0;
    BlockedOptions options_;
    std::vector<symbol_t> symbols_; // code -> symbol
    std::array<int, 256> code_{};   // symbol -> code, -1 when absent
    std::vector<std::uint64_t> totals_;
    std::vector<Block> blocks_;
    std::vector<std::uint64_t> head_samples_;
};

} // namespace lfmove
