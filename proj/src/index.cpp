#include "lfmove/index.hpp"

#include "lfmove/suffix_array.hpp"

#include <stdexcept>
#include <string>

namespace lfmove {

std::string_view to_string(Backend b)
{
    return b == Backend::table ? "table" : "blocked";
}

Backend parse_backend(std::string_view s)
{
    if (s == "table")
        return Backend::table;
    if (s == "blocked")
        return Backend::blocked;
    throw std::invalid_argument("unknown backend '" + std::string(s) + "'");
}

Index::Index(Storage storage, SplitConfig split, std::uint64_t maximal_runs, std::array<std::uint64_t, 256> counts)
    : storage_(std::move(storage)), split_(split), maximal_runs_(maximal_runs), counts_(counts)
{
}

Index Index::build(const Text& text, const BuildOptions& options)
{
    auto bwt = build_bwt(text);
    return build_from_bwt(bwt, options);
}

Index Index::build_from_bwt(std::span<const symbol_t> bwt, const BuildOptions& options)
{
    RunLengthBWT rl = runs_from_bwt(bwt);
    MoveTable table = rebuild_table(rl, apply_split(rl, options.split));
    Storage storage;
    if (options.backend == Backend::blocked)
        storage = BlockedTable::compress(table, options.blocked);
    else
        storage = std::move(table);
    return Index(std::move(storage), options.split, rl.runs(), Alphabet::of(bwt).counts);
}

std::uint64_t Index::size() const
{
    return visit([](const auto& t) { return t.size(); });
}

std::uint64_t Index::num_rows() const
{
    return visit([](const auto& t) { return t.num_rows(); });
}

std::uint64_t Index::count(std::span<const symbol_t> pattern, ScanHistogram* hist) const
{
    return visit([&](const auto& t) { return lfmove::count(t, pattern, hist); });
}

std::uint64_t Index::count(std::string_view pattern) const
{
    auto p = reinterpret_cast<const symbol_t*>(pattern.data());
    return count(std::span<const symbol_t>(p, pattern.size()));
}

std::vector<symbol_t> Index::invert() const
{
    return visit([](const auto& t) { return lfmove::invert(t); });
}

ScanHistogram Index::profile_scans(std::span<const std::vector<symbol_t>> patterns) const
{
    return visit([&](const auto& t) { return lfmove::profile_scans(t, patterns); });
}

std::uint64_t Index::size_in_bytes() const
{
    if (const auto* t = std::get_if<MoveTable>(&storage_))
        return t->num_rows() * sizeof(MoveRow) + t->num_rows() * 8;
    return std::get<BlockedTable>(storage_).size_in_bytes();
}

} // namespace lfmove
