#pragma once

// Batch kernels. Each has an OpenMP version and a serial reference that the
// tests hold it to; results are identical and in input order.

#include "lfmove/index.hpp"
#include "lfmove/query.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace lfmove::kernels {

namespace detail {

inline void require_nonempty(std::span<const std::vector<symbol_t>> patterns)
{
    for (std::size_t i = 0; i < patterns.size(); ++i)
        if (patterns[i].empty())
            throw std::invalid_argument("pattern " + std::to_string(i) + " is empty");
}

// LF of every position in [lo, hi), walking positions in row order
template <LfBackend Table, class F>
void for_each_lf(const Table& t, std::uint64_t lo, std::uint64_t hi, F&& f)
{
    if (lo >= hi)
        return;
    Position p = t.position_to_pair(lo);
    std::uint64_t len = t.length(p.run);
    for (std::uint64_t i = lo; i < hi; ++i) {
        f(i, t.lf_step_counted(p));
        if (++p.offset == len && i + 1 < hi) {
            ++p.run;
            p.offset = 0;
            len = t.length(p.run);
        }
    }
}

inline constexpr std::uint64_t kChunk = 1 << 14;

} // namespace detail

inline std::vector<std::uint64_t> count_batch_serial(const Index& index, std::span<const std::vector<symbol_t>> patterns)
{
    detail::require_nonempty(patterns);
    std::vector<std::uint64_t> out(patterns.size());
    for (std::size_t i = 0; i < patterns.size(); ++i)
        out[i] = index.count(patterns[i]);
    return out;
}

inline std::vector<std::uint64_t> count_batch(const Index& index, std::span<const std::vector<symbol_t>> patterns)
{
    detail::require_nonempty(patterns);
    std::vector<std::uint64_t> out(patterns.size());
    const auto m = static_cast<std::int64_t>(patterns.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < m; ++i)
        out[i] = index.count(patterns[i]);
    return out;
}

template <LfBackend Table>
std::vector<std::uint64_t> lf_all_serial(const Table& t)
{
    std::vector<std::uint64_t> out(t.size());
    detail::for_each_lf(t, 0, t.size(), [&](std::uint64_t i, auto r) { out[i] = t.pair_to_index(r.first); });
    return out;
}

template <LfBackend Table>
std::vector<std::uint64_t> lf_all(const Table& t)
{
    std::vector<std::uint64_t> out(t.size());
    const auto chunks = static_cast<std::int64_t>((t.size() + detail::kChunk - 1) / detail::kChunk);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
        std::uint64_t lo = c * detail::kChunk, hi = std::min(t.size(), lo + detail::kChunk);
        detail::for_each_lf(t, lo, hi, [&](std::uint64_t i, auto r) { out[i] = t.pair_to_index(r.first); });
    }
    return out;
}

// scan lengths of LF from every BWT position
template <LfBackend Table>
ScanHistogram scan_all_serial(const Table& t)
{
    ScanHistogram h;
    detail::for_each_lf(t, 0, t.size(), [&](std::uint64_t, auto r) { h.add(r.second); });
    return h;
}

template <LfBackend Table>
ScanHistogram scan_all(const Table& t)
{
    const auto chunks = static_cast<std::int64_t>((t.size() + detail::kChunk - 1) / detail::kChunk);
    std::vector<ScanHistogram> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
        std::uint64_t lo = c * detail::kChunk, hi = std::min(t.size(), lo + detail::kChunk);
        detail::for_each_lf(t, lo, hi, [&](std::uint64_t, auto r) { parts[c].add(r.second); });
    }
    ScanHistogram h;
    for (const auto& p : parts)
        h.merge(p);
    return h;
}

inline ScanHistogram profile_scans(const Index& index, std::span<const std::vector<symbol_t>> patterns)
{
    detail::require_nonempty(patterns);
    const auto m = static_cast<std::int64_t>(patterns.size());
    std::vector<ScanHistogram> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < m; ++i)
            index.count(patterns[i], &mine);
    }
    ScanHistogram h;
    for (const auto& p : parts)
        h.merge(p);
    return h;
}

} // namespace lfmove::kernels
