#pragma once

#include "lfmove/move_table.hpp"
#include "lfmove/text.hpp"

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lfmove {

template <class T>
concept LfBackend = requires(const T& t, Position p, std::uint64_t k, symbol_t c) {
    { t.size() } -> std::convertible_to<std::uint64_t>;
    { t.num_rows() } -> std::convertible_to<std::uint64_t>;
    { t.symbol(k) } -> std::convertible_to<symbol_t>;
    { t.length(k) } -> std::convertible_to<std::uint64_t>;
    { t.lf_step(p) } -> std::same_as<Position>;
    { t.lf_step_counted(p) } -> std::same_as<std::pair<Position, std::uint64_t>>;
    { t.position_to_pair(k) } -> std::same_as<Position>;
    { t.pair_to_index(p) } -> std::convertible_to<std::uint64_t>;
    { t.run_rank(k, c) } -> std::convertible_to<std::uint64_t>;
    { t.run_select(k, c) } -> std::same_as<std::optional<std::uint64_t>>;
    { t.run_occurrences(c) } -> std::convertible_to<std::uint64_t>;
    { t.next_run_of(k, c) } -> std::same_as<std::optional<std::uint64_t>>;
    { t.prev_run_of(k, c) } -> std::same_as<std::optional<std::uint64_t>>;
};

// BWT interval as two (row, offset) pairs; nullopt is the empty interval
struct SearchState {
    Position start;
    Position end;

    bool operator==(const SearchState&) const = default;
};

using Interval = std::optional<SearchState>;

struct ScanHistogram {
    std::map<std::uint64_t, std::uint64_t> counts; // scan length -> frequency
    std::uint64_t total_steps = 0;

    void add(std::uint64_t scan)
    {
        ++counts[scan];
        ++total_steps;
    }

    void merge(const ScanHistogram& o)
    {
        for (auto [len, f] : o.counts)
            counts[len] += f;
        total_steps += o.total_steps;
    }

    std::uint64_t max_scan() const { return counts.empty() ? 0 : counts.rbegin()->first; }

    std::uint64_t at(std::uint64_t scan) const
    {
        auto it = counts.find(scan);
        return it == counts.end() ? 0 : it->second;
    }

    bool operator==(const ScanHistogram&) const = default;
};

template <LfBackend Table>
SearchState full_interval(const Table& t)
{
    std::uint64_t last = t.num_rows() - 1;
    return {{0, 0}, {last, t.length(last) - 1}};
}

namespace detail {

template <LfBackend Table>
Position lf_recorded(const Table& t, Position p, ScanHistogram* hist)
{
    if (!hist)
        return t.lf_step(p);
    auto [q, scanned] = t.lf_step_counted(p);
    hist->add(scanned);
    return q;
}

} // namespace detail

/*
 * Extends the match one symbol to the left. A boundary row whose symbol
 * differs from c is moved to the nearest row of c inward (the first one at
 * or after the start row, the last one at or before the end row), taking
 * its first or last offset, and both ends are then mapped by LF.
 */
template <LfBackend Table>
Interval backward_step(const Table& t, const Interval& state, symbol_t c, ScanHistogram* hist = nullptr)
{
    if (!state || t.run_occurrences(c) == 0)
        return std::nullopt;
    Position s = state->start, e = state->end;

    if (t.symbol(s.run) != c) {
        auto js = t.next_run_of(s.run, c);
        if (!js)
            return std::nullopt;
        s = {*js, 0};
    }
    if (t.symbol(e.run) != c) {
        auto je = t.prev_run_of(e.run, c);
        if (!je)
            return std::nullopt;
        e = {*je, t.length(*je) - 1};
    }
    if (s > e)
        return std::nullopt;
    Position ns = detail::lf_recorded(t, s, hist);
    Position ne = detail::lf_recorded(t, e, hist);
    return SearchState{ns, ne};
}

template <LfBackend Table>
Interval backward_search(const Table& t, std::span<const symbol_t> pattern, ScanHistogram* hist = nullptr)
{
    Interval state = full_interval(t);
    for (auto it = pattern.rbegin(); it != pattern.rend() && state; ++it)
        state = backward_step(t, state, *it, hist);
    return state;
}

// occurrences of a nonempty pattern; a terminator inside the pattern
// matches nothing
template <LfBackend Table>
std::uint64_t count(const Table& t, std::span<const symbol_t> pattern, ScanHistogram* hist = nullptr)
{
    if (pattern.empty())
        throw std::invalid_argument("count requires a nonempty pattern");
    if (std::find(pattern.begin(), pattern.end(), kTerminator) != pattern.end())
        return 0;
    Interval state = backward_search(t, pattern, hist);
    if (!state)
        return 0;
    return t.pair_to_index(state->end) - t.pair_to_index(state->start) + 1;
}

// walks LF from the terminator row, emitting each row's symbol right to left
template <LfBackend Table>
std::vector<symbol_t> invert(const Table& t)
{
    auto row = t.run_occurrences(kTerminator) == 1 ? t.run_select(1, kTerminator) : std::nullopt;
    if (!row)
        throw std::invalid_argument("index has no unique terminator row; cannot invert");
    std::vector<symbol_t> out(t.size());
    Position p{*row, 0};
    for (std::uint64_t j = t.size(); j-- > 0;) {
        out[j] = t.symbol(p.run);
        p = t.lf_step(p);
    }
    return out;
}

template <LfBackend Table>
ScanHistogram profile_scans(const Table& t, std::span<const std::vector<symbol_t>> patterns)
{
    ScanHistogram hist;
    for (const auto& pat : patterns)
        if (!pat.empty())
            count(t, pat, &hist);
    return hist;
}

} // namespace lfmove
