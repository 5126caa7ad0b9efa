#include "lfmove/blocked_table.hpp"

#include "lfmove/error.hpp"

#include <algorithm>

namespace lfmove {

BlockedTable BlockedTable::compress(const MoveTable& table, const BlockedOptions& options)
{
    if (options.block_size == 0)
        throw std::invalid_argument("block size must be positive");
    if (options.head_sample_rate == 0)
        throw std::invalid_argument("head sample rate must be positive");
    if (options.encoding != DestEncoding::bitvector && options.dest_rate() == 0)
        throw std::invalid_argument("destination sample rate must be at least 1");

    BlockedTable bt;
    bt.n_ = table.size();
    bt.rows_ = table.num_rows();
    bt.options_ = options;

    std::array<bool, 256> present{};
    for (const MoveRow& r : table.rows())
        present[r.symbol] = true;
    for (int c = 0; c < 256; ++c)
        if (present[c])
            bt.symbols_.push_back(static_cast<symbol_t>(c));
    std::size_t effective = bt.symbols_.size() - (present[kTerminator] ? 1 : 0);
    if (effective > kMaxBlockSymbols)
        throw UnsupportedAlphabet("alphabet has " + std::to_string(effective) + " symbols besides the terminator; " +
                                  "the block store supports at most " + std::to_string(kMaxBlockSymbols));
    bt.index_codes();

    const std::size_t sigma = bt.symbols_.size();
    const std::uint64_t B = options.block_size;
    const std::uint64_t nblocks = (bt.rows_ + B - 1) / B;

    // global nearest rows of each symbol, for the boundary pointers
    std::vector<std::vector<std::uint64_t>> rows_of(sigma);
    for (std::uint64_t k = 0; k < bt.rows_; ++k)
        rows_of[bt.code_[table.symbol(k)]].push_back(k);

    std::vector<std::uint64_t> seen(sigma, 0);
    bt.blocks_.reserve(nblocks);
    for (std::uint64_t b = 0; b < nblocks; ++b) {
        const std::uint64_t first = b * B, last = std::min(first + B, bt.rows_);
        const std::uint64_t count = last - first;
        Block blk;
        blk.rank_before = seen;
        blk.prev_row.assign(sigma, kNoRow);
        blk.next_row.assign(sigma, kNoRow);
        for (std::size_t c = 0; c < sigma; ++c) {
            const auto& v = rows_of[c];
            auto lo = std::lower_bound(v.begin(), v.end(), first);
            if (lo != v.begin())
                blk.prev_row[c] = *(lo - 1);
            auto hi = std::lower_bound(v.begin(), v.end(), last);
            if (hi != v.end())
                blk.next_row[c] = *hi;
        }

        std::vector<BitVector::Builder> bits(sigma, BitVector::Builder(count));
        std::vector<std::vector<std::uint64_t>> dest_runs(sigma);
        std::vector<std::uint64_t> lengths(count), offsets(count);
        for (std::uint64_t k = first; k < last; ++k) {
            const MoveRow& r = table.row(k);
            auto c = static_cast<std::size_t>(bt.code_[r.symbol]);
            bits[c].set(k - first);
            dest_runs[c].push_back(r.dest_run);
            lengths[k - first] = r.length;
            offsets[k - first] = r.dest_offset;
            ++seen[c];
        }
        for (std::size_t c = 0; c < sigma; ++c) {
            blk.char_bits.push_back(std::move(bits[c]).build());
            blk.dests.push_back(encode_dest_list(dest_runs[c], options.encoding, options.dest_rate()));
        }
        blk.lengths = DacList(lengths);
        blk.offsets = DacList(offsets);
        bt.blocks_.push_back(std::move(blk));
    }
    bt.totals_ = seen;

    for (std::uint64_t k = 0; k < bt.rows_; k += options.head_sample_rate)
        bt.head_samples_.push_back(table.run_heads()[k]);
    return bt;
}

BlockedTable BlockedTable::from_parts(std::uint64_t n, std::uint64_t rows, BlockedOptions options,
                                      std::vector<symbol_t> symbols, std::vector<Block> blocks,
                                      std::vector<std::uint64_t> head_samples)
{
    if (options.block_size == 0 || options.head_sample_rate == 0)
        throw std::invalid_argument("block size and head sample rate must be positive");
    BlockedTable bt;
    bt.n_ = n;
    bt.rows_ = rows;
    bt.options_ = options;
    bt.symbols_ = std::move(symbols);
    bt.blocks_ = std::move(blocks);
    bt.head_samples_ = std::move(head_samples);
    if (!std::is_sorted(bt.symbols_.begin(), bt.symbols_.end()) ||
        std::adjacent_find(bt.symbols_.begin(), bt.symbols_.end()) != bt.symbols_.end())
        throw std::invalid_argument("blocked table symbols must be strictly increasing");
    bt.index_codes();

    const std::size_t sigma = bt.symbols_.size();
    const std::uint64_t B = options.block_size;
    if (bt.blocks_.size() != (rows + B - 1) / B)
        throw std::invalid_argument("blocked table has the wrong number of blocks");
    if (bt.head_samples_.size() != (rows + options.head_sample_rate - 1) / options.head_sample_rate)
        throw std::invalid_argument("blocked table has the wrong number of head samples");
    std::vector<std::uint64_t> seen(sigma, 0);
    for (std::uint64_t b = 0; b < bt.blocks_.size(); ++b) {
        const Block& blk = bt.blocks_[b];
        std::uint64_t count = std::min(B, rows - b * B);
        if (blk.char_bits.size() != sigma || blk.rank_before.size() != sigma || blk.prev_row.size() != sigma ||
            blk.next_row.size() != sigma || blk.dests.size() != sigma || blk.lengths.size() != count ||
            blk.offsets.size() != count)
            throw std::invalid_argument("block " + std::to_string(b) + " is inconsistent");
        std::uint64_t marked = 0;
        for (std::size_t c = 0; c < sigma; ++c) {
            if (blk.char_bits[c].size() != count || dest_size(blk.dests[c]) != blk.char_bits[c].ones() ||
                blk.rank_before[c] != seen[c])
                throw std::invalid_argument("block " + std::to_string(b) + " symbol index is inconsistent");
            marked += blk.char_bits[c].ones();
            seen[c] += blk.char_bits[c].ones();
        }
        if (marked != count)
            throw std::invalid_argument("block " + std::to_string(b) + " rows are not all labelled");
        for (std::uint64_t l = 0; l < count; ++l) {
            int labels = 0;
            for (std::size_t c = 0; c < sigma; ++c)
                labels += blk.char_bits[c][l];
            if (labels != 1)
                throw std::invalid_argument("block " + std::to_string(b) + " row " + std::to_string(l) +
                                            " has " + std::to_string(labels) + " symbols");
        }
    }
    bt.totals_ = seen;
    bt.check_rows();
    return bt;
}

// everything a query dereferences: heads, boundary rows and destinations
void BlockedTable::check_rows() const
{
    const std::uint64_t B = options_.block_size;
    std::vector<std::uint64_t> heads(rows_);
    std::uint64_t pos = 0;
    for (std::uint64_t k = 0; k < rows_; ++k) {
        std::uint64_t len = length(k);
        if (len == 0 || len > n_ - pos)
            throw std::invalid_argument("row lengths do not add up to the text length");
        if (k % options_.head_sample_rate == 0 && head_samples_[k / options_.head_sample_rate] != pos)
            throw std::invalid_argument("head sample for row " + std::to_string(k) + " is wrong");
        heads[k] = pos;
        pos += len;
    }
    if (pos != n_)
        throw std::invalid_argument("row lengths do not add up to the text length");

    std::vector<std::uint64_t> prev(symbols_.size(), kNoRow);
    for (std::uint64_t b = 0; b < blocks_.size(); ++b)
        for (std::size_t c = 0; c < symbols_.size(); ++c) {
            const BitVector& bits = blocks_[b].char_bits[c];
            if (blocks_[b].prev_row[c] != prev[c])
                throw std::invalid_argument("block " + std::to_string(b) + " has a wrong previous-row pointer");
            if (bits.ones() > 0)
                prev[c] = b * B + bits.select1(bits.ones());
        }
    std::vector<std::uint64_t> next(symbols_.size(), kNoRow);
    for (std::uint64_t b = blocks_.size(); b-- > 0;)
        for (std::size_t c = 0; c < symbols_.size(); ++c) {
            const BitVector& bits = blocks_[b].char_bits[c];
            if (blocks_[b].next_row[c] != next[c])
                throw std::invalid_argument("block " + std::to_string(b) + " has a wrong next-row pointer");
            if (bits.ones() > 0)
                next[c] = b * B + bits.select1(1);
        }

    for (std::uint64_t k = 0; k < rows_; ++k) {
        Position d = destination(k);
        if (d.run >= rows_ || d.offset >= length(d.run) || heads[d.run] + d.offset > n_ - length(k))
            throw std::invalid_argument("row " + std::to_string(k) + " has an out-of-range destination");
    }
}

void BlockedTable::index_codes()
{
    code_.fill(-1);
    for (std::size_t c = 0; c < symbols_.size(); ++c)
        code_[symbols_[c]] = static_cast<int>(c);
}

MoveRow BlockedTable::row(std::uint64_t k) const
{
    if (k >= rows_)
        throw std::out_of_range("row " + std::to_string(k) + " out of range");
    Position d = destination(k);
    return MoveRow{length(k), d.run, d.offset, symbol(k)};
}

Position BlockedTable::position_to_pair(std::uint64_t i) const
{
    if (i >= n_)
        throw std::out_of_range("position " + std::to_string(i) + " out of range");
    auto it = std::upper_bound(head_samples_.begin(), head_samples_.end(), i) - 1;
    std::uint64_t k = static_cast<std::uint64_t>(it - head_samples_.begin()) * options_.head_sample_rate;
    std::uint64_t pos = *it;
    for (std::uint64_t len; pos + (len = length(k)) <= i; ++k)
        pos += len;
    return {k, i - pos};
}

std::uint64_t BlockedTable::pair_to_index(Position p) const
{
    if (p.run >= rows_ || p.offset >= length(p.run))
        throw std::out_of_range("invalid position (" + std::to_string(p.run) + ", " + std::to_string(p.offset) +
                                ")");
    std::uint64_t s = p.run / options_.head_sample_rate;
    std::uint64_t pos = head_samples_[s];
    for (std::uint64_t k = s * options_.head_sample_rate; k < p.run; ++k)
        pos += length(k);
    return pos + p.offset;
}

std::uint64_t BlockedTable::run_rank(std::uint64_t k, symbol_t c) const
{
    std::size_t code = code_of(c);
    if (k >= rows_)
        return totals_[code];
    const Block& b = blocks_[k / options_.block_size];
    return b.rank_before[code] + b.char_bits[code].rank1(k % options_.block_size);
}

std::uint64_t BlockedTable::run_occurrences(symbol_t c) const
{
    return code_[c] < 0 ? 0 : totals_[static_cast<std::size_t>(code_[c])];
}

std::optional<std::uint64_t> BlockedTable::run_select(std::uint64_t j, symbol_t c) const
{
    std::size_t code = code_of(c);
    if (j == 0 || j > totals_[code])
        return std::nullopt;
    // last block with fewer than j occurrences before it
    auto it = std::partition_point(blocks_.begin(), blocks_.end(),
                                   [&](const Block& b) { return b.rank_before[code] < j; });
    auto b = static_cast<std::uint64_t>(it - blocks_.begin()) - 1;
    const Block& blk = blocks_[b];
    return b * options_.block_size + blk.char_bits[code].select1(j - blk.rank_before[code]);
}

std::optional<std::uint64_t> BlockedTable::next_run_of(std::uint64_t k, symbol_t c) const
{
    std::size_t code = code_of(c);
    if (k >= rows_)
        return std::nullopt;
    std::uint64_t b = k / options_.block_size;
    const Block& blk = blocks_[b];
    const BitVector& bits = blk.char_bits[code];
    std::uint64_t r = bits.rank1(k % options_.block_size);
    if (r < bits.ones())
        return b * options_.block_size + bits.select1(r + 1);
    if (blk.next_row[code] == kNoRow)
        return std::nullopt;
    return blk.next_row[code];
}

std::optional<std::uint64_t> BlockedTable::prev_run_of(std::uint64_t k, symbol_t c) const
{
    std::size_t code = code_of(c);
    if (k >= rows_)
        k = rows_ - 1;
    std::uint64_t b = k / options_.block_size;
    const Block& blk = blocks_[b];
    const BitVector& bits = blk.char_bits[code];
    std::uint64_t r = bits.rank1(k % options_.block_size + 1);
    if (r > 0)
        return b * options_.block_size + bits.select1(r);
    if (blk.prev_row[code] == kNoRow)
        return std::nullopt;
    return blk.prev_row[code];
}

std::uint64_t BlockedTable::size_in_bytes() const
{
    std::uint64_t bytes = 64 + symbols_.size() + head_samples_.size() * 8;
    for (const Block& b : blocks_) {
        bytes += b.lengths.size_in_bytes() + b.offsets.size_in_bytes();
        bytes += 24 * b.rank_before.size();
        for (const BitVector& v : b.char_bits)
            bytes += v.size_in_bytes();
        for (const DestList& d : b.dests)
            bytes += dest_bytes(d);
    }
    return bytes;
}

} // namespace lfmove
