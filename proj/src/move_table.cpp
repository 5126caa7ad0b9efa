#include "lfmove/move_table.hpp"

#include "lfmove/error.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lfmove {

MoveTable::MoveTable(const RunLengthBWT& rl, std::span<const std::uint64_t> heads, const RunLf& lf)
    : n_(rl.n), heads_(heads.begin(), heads.end())
{
    rows_.resize(heads_.size());
    std::uint64_t parent = 0;
    for (std::uint64_t k = 0; k < heads_.size(); ++k) {
        std::uint64_t h = heads_[k];
        while (parent + 1 < rl.runs() && rl.run_heads[parent + 1] <= h)
            ++parent;
        std::uint64_t end = k + 1 < heads_.size() ? heads_[k + 1] : n_;
        if (end > rl.run_end(parent))
            throw Error("row " + std::to_string(k) + " crosses a maximal run boundary");
        std::uint64_t dest = lf.at_run(parent, h);
        auto it = std::upper_bound(heads_.begin(), heads_.end(), dest) - 1;
        rows_[k] = MoveRow{end - h, static_cast<std::uint64_t>(it - heads_.begin()), dest - *it,
                           rl.run_chars[parent]};
    }
    index_symbols();
}

MoveTable MoveTable::from_parts(std::uint64_t n, std::vector<MoveRow> rows, std::vector<std::uint64_t> heads)
{
    MoveTable t;
    t.n_ = n;
    t.rows_ = std::move(rows);
    t.heads_ = std::move(heads);
    t.index_symbols();
    return t;
}

void MoveTable::index_symbols()
{
    for (auto& v : by_symbol_)
        v.clear();
    for (std::uint64_t k = 0; k < rows_.size(); ++k)
        by_symbol_[rows_[k].symbol].push_back(k);
}

Position MoveTable::position_to_pair(std::uint64_t i) const
{
    if (i >= n_)
        throw std::out_of_range("position " + std::to_string(i) + " out of range");
    auto it = std::upper_bound(heads_.begin(), heads_.end(), i) - 1;
    return {static_cast<std::uint64_t>(it - heads_.begin()), i - *it};
}

std::uint64_t MoveTable::pair_to_index(Position p) const
{
    if (p.run >= rows_.size() || p.offset >= rows_[p.run].length)
        throw std::out_of_range("invalid position (" + std::to_string(p.run) + ", " + std::to_string(p.offset) +
                                ")");
    return heads_[p.run] + p.offset;
}

std::uint64_t MoveTable::run_rank(std::uint64_t k, symbol_t c) const
{
    const auto& v = by_symbol_[c];
    return static_cast<std::uint64_t>(std::lower_bound(v.begin(), v.end(), k) - v.begin());
}

std::optional<std::uint64_t> MoveTable::run_select(std::uint64_t j, symbol_t c) const
{
    const auto& v = by_symbol_[c];
    if (j == 0 || j > v.size())
        return std::nullopt;
    return v[j - 1];
}

std::optional<std::uint64_t> MoveTable::next_run_of(std::uint64_t k, symbol_t c) const
{
    return run_select(run_rank(k, c) + 1, c);
}

std::optional<std::uint64_t> MoveTable::prev_run_of(std::uint64_t k, symbol_t c) const
{
    return run_select(run_rank(k + 1, c), c);
}

MoveTable build_table(const RunLengthBWT& rl)
{
    RunLf lf(rl);
    return MoveTable(rl, rl.run_heads, lf);
}

std::vector<std::uint64_t> destinations_of(const MoveTable& t, symbol_t c)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 0; k < t.num_rows(); ++k)
        if (t.symbol(k) == c)
            out.push_back(t.pair_to_index({t.row(k).dest_run, t.row(k).dest_offset}));
    return out;
}

bool destinations_monotone(const MoveTable& t)
{
    std::array<std::uint64_t, 256> last{};
    std::array<bool, 256> seen{};
    for (std::uint64_t k = 0; k < t.num_rows(); ++k) {
        const auto& r = t.row(k);
        std::uint64_t d = t.pair_to_index({r.dest_run, r.dest_offset});
        if (seen[r.symbol] && d < last[r.symbol])
            return false;
        seen[r.symbol] = true;
        last[r.symbol] = d;
    }
    return true;
}

} // namespace lfmove
