#pragma once

#include "lfmove/blocked_table.hpp"
#include "lfmove/move_table.hpp"
#include "lfmove/query.hpp"
#include "lfmove/run_splitting.hpp"
#include "lfmove/text.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace lfmove {

enum class Backend : std::uint8_t { table = 0, blocked = 1 };

std::string_view to_string(Backend b);
Backend parse_backend(std::string_view s); // "table", "blocked"

struct BuildOptions {
    Backend backend = Backend::blocked;
    SplitConfig split;
    BlockedOptions blocked;
};

/*
 * A count/inversion index over one text (or one BWT): either backend, plus
 * the statistics of the maximal runs it was built from.
 */
class Index {
public:
    using Storage = std::variant<MoveTable, BlockedTable>;

    Index() = default;
    Index(Storage storage, SplitConfig split, std::uint64_t maximal_runs, std::array<std::uint64_t, 256> counts);

    static Index build(const Text& text, const BuildOptions& options = {});
    static Index build_from_bwt(std::span<const symbol_t> bwt, const BuildOptions& options = {});

    std::uint64_t size() const;
    std::uint64_t maximal_runs() const { return maximal_runs_; }
    std::uint64_t num_rows() const;
    Backend backend() const { return storage_.index() == 0 ? Backend::table : Backend::blocked; }
    const SplitConfig& split() const { return split_; }
    const std::array<std::uint64_t, 256>& symbol_counts() const { return counts_; }
    const Storage& storage() const { return storage_; }

    template <class F>
    decltype(auto) visit(F&& f) const
    {
        return std::visit(std::forward<F>(f), storage_);
    }

    std::uint64_t count(std::span<const symbol_t> pattern, ScanHistogram* hist = nullptr) const;
    std::uint64_t count(std::string_view pattern) const;
    std::vector<symbol_t> invert() const;
    ScanHistogram profile_scans(std::span<const std::vector<symbol_t>> patterns) const;

    // in-memory footprint of the table structures
    std::uint64_t size_in_bytes() const;

private:
    Storage storage_;
    SplitConfig split_;
    std::uint64_t maximal_runs_ = 0;
    std::array<std::uint64_t, 256> counts_{};
};

} // namespace lfmove
