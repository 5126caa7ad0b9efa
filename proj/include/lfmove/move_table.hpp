#pragma once

#include "lfmove/rlbwt.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lfmove {

// a BWT position as (row, offset within the row)
struct Position {
    std::uint64_t run = 0;
    std::uint64_t offset = 0;

    auto operator<=>(const Position&) const = default;
};

struct MoveRow {
    std::uint64_t length = 0;
    std::uint64_t dest_run = 0;    // row containing LF(head)
    std::uint64_t dest_offset = 0; // offset of LF(head) in that row
    symbol_t symbol = 0;

    bool operator==(const MoveRow&) const = default;
};

/*
 * Uncompressed move table: one row per (sub-)run. LF on a (row, offset)
 * pair is a row lookup followed by a forward scan over following rows.
 */
class MoveTable {
public:
    MoveTable() = default;

    // rows over the given heads; heads must include every maximal run head
    // of rl, so every row is unary
    MoveTable(const RunLengthBWT& rl, std::span<const std::uint64_t> heads, const RunLf& lf);

    std::uint64_t size() const { return n_; }
    std::uint64_t num_rows() const { return rows_.size(); }

    const MoveRow& row(std::uint64_t k) const { return rows_[k]; }
    std::span<const MoveRow> rows() const { return rows_; }
    std::span<const std::uint64_t> run_heads() const { return heads_; }

    symbol_t symbol(std::uint64_t k) const { return rows_[k].symbol; }
    std::uint64_t length(std::uint64_t k) const { return rows_[k].length; }

    Position position_to_pair(std::uint64_t i) const;
    std::uint64_t pair_to_index(Position p) const;

    Position lf_step(Position p) const
    {
        const MoveRow& r = rows_[p.run];
        Position q{r.dest_run, r.dest_offset + p.offset};
        while (q.offset >= rows_[q.run].length) {
            q.offset -= rows_[q.run].length;
            ++q.run;
        }
        return q;
    }

    // second member: rows advanced past the destination row
    std::pair<Position, std::uint64_t> lf_step_counted(Position p) const
    {
        const MoveRow& r = rows_[p.run];
        Position q{r.dest_run, r.dest_offset + p.offset};
        std::uint64_t scanned = 0;
        while (q.offset >= rows_[q.run].length) {
            q.offset -= rows_[q.run].length;
            ++q.run;
            ++scanned;
        }
        return {q, scanned};
    }

    // rows in [0, k) with symbol c
    std::uint64_t run_rank(std::uint64_t k, symbol_t c) const;
    // row of the j-th (1-based) occurrence of c, if any
    std::optional<std::uint64_t> run_select(std::uint64_t j, symbol_t c) const;
    std::uint64_t run_occurrences(symbol_t c) const { return by_symbol_[c].size(); }

    // first row >= k with symbol c / last row <= k with symbol c
    std::optional<std::uint64_t> next_run_of(std::uint64_t k, symbol_t c) const;
    std::optional<std::uint64_t> prev_run_of(std::uint64_t k, symbol_t c) const;

    // reassemble from stored columns; rebuilds the per-symbol row lists
    static MoveTable from_parts(std::uint64_t n, std::vector<MoveRow> rows, std::vector<std::uint64_t> heads);

private:
    void index_symbols();

    std::uint64_t n_ = 0;
    std::vector<MoveRow> rows_;
    std::vector<std::uint64_t> heads_;
    std::array<std::vector<std::uint64_t>, 256> by_symbol_;
};

// table over the maximal runs
MoveTable build_table(const RunLengthBWT& rl);

// absolute LF destinations of rows with symbol c, in row order
std::vector<std::uint64_t> destinations_of(const MoveTable& t, symbol_t c);

// every symbol's destinations are non-decreasing in row order
bool destinations_monotone(const MoveTable& t);

} // namespace lfmove
