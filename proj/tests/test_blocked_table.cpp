#include "doctest.h"
#include "support.hpp"

#include "lfmove/blocked_table.hpp"
#include "lfmove/error.hpp"
#include "lfmove/oracle.hpp"

#include <random>

using namespace lfmove;
using lfmove::testing::sym;

namespace {

constexpr DestEncoding kEncodings[] = {DestEncoding::bitvector, DestEncoding::dac_sampled,
                                       DestEncoding::interpolated};

BlockedOptions opts(DestEncoding e, std::uint64_t block_size)
{
    BlockedOptions o;
    o.encoding = e;
    o.block_size = block_size;
    o.head_sample_rate = 3;
    return o;
}

void check_same(const MoveTable& t, const BlockedTable& bt)
{
    REQUIRE(bt.size() == t.size());
    REQUIRE(bt.num_rows() == t.num_rows());
    for (std::uint64_t k = 0; k < t.num_rows(); ++k)
        REQUIRE(bt.row(k) == t.row(k));
    for (std::uint64_t i = 0; i < t.size(); ++i) {
        Position p = t.position_to_pair(i);
        REQUIRE(bt.position_to_pair(i) == p);
        REQUIRE(bt.pair_to_index(p) == i);
        REQUIRE(bt.lf_step_counted(p) == t.lf_step_counted(p));
    }
    for (symbol_t c : bt.symbols()) {
        REQUIRE(bt.run_occurrences(c) == t.run_occurrences(c));
        for (std::uint64_t k = 0; k <= t.num_rows(); ++k)
            REQUIRE(bt.run_rank(k, c) == t.run_rank(k, c));
        for (std::uint64_t j = 1; j <= t.run_occurrences(c) + 1; ++j)
            REQUIRE(bt.run_select(j, c) == t.run_select(j, c));
        for (std::uint64_t k = 0; k < t.num_rows(); ++k) {
            REQUIRE(bt.next_run_of(k, c) == t.next_run_of(k, c));
            REQUIRE(bt.prev_run_of(k, c) == t.prev_run_of(k, c));
        }
    }
}

} // namespace

TEST_CASE("example table in blocks of four")
{
    auto t = build_table(runs_from_bwt(sym("TTTCGGAA$ATTA")));
    for (auto e : kEncodings) {
        auto bt = BlockedTable::compress(t, opts(e, 4));
        CHECK(bt.num_blocks() == 2);
        CHECK(bt.row(0) == MoveRow{3, 4, 0, 'T'});
        CHECK(bt.row(3) == MoveRow{2, 0, 1, 'A'});
        CHECK(bt.row(4) == MoveRow{1, 0, 0, kTerminator});
        CHECK(bt.run_rank(8, 'A') == 3);
        CHECK(bt.run_rank(0, 'T') == 0);
        CHECK(bt.run_rank(5, 'T') == 1);
        CHECK(bt.run_select(1, kTerminator) == 4);
        CHECK(bt.run_select(3, 'A') == 7);
        CHECK(bt.run_select(1, 'T') == 0);
        CHECK_FALSE(bt.run_select(4, 'A'));
        CHECK_THROWS_AS(bt.run_rank(3, 'Z'), std::invalid_argument);
        CHECK(bt.run_occurrences('Z') == 0);
        CHECK_THROWS_AS(bt.row(8), std::out_of_range);
        check_same(t, bt);
    }
}

TEST_CASE("boundary pointers of the example")
{
    auto t = build_table(runs_from_bwt(sym("TTTCGGAA$ATTA")));
    auto bt = BlockedTable::compress(t, opts(DestEncoding::bitvector, 4));
    // symbols $ A C G T get codes 0..4
    const Block& second = bt.blocks()[1];
    CHECK(second.prev_row[1] == 3); // last A before rows 4..7
    CHECK(second.prev_row[4] == 0); // last T
    CHECK(second.next_row[1] == kNoRow);
    CHECK(bt.blocks()[0].next_row[0] == 4);
    CHECK(second.rank_before[1] == 1);

    auto single = BlockedTable::compress(t, opts(DestEncoding::bitvector, 8));
    CHECK(single.num_blocks() == 1);
    for (std::size_t c = 0; c < single.symbols().size(); ++c) {
        CHECK(single.blocks()[0].prev_row[c] == kNoRow);
        CHECK(single.blocks()[0].next_row[c] == kNoRow);
    }
}

TEST_CASE("boundary pointers agree with a linear scan")
{
    std::mt19937_64 rng(8);
    auto body = workload::random_text(3000, 8, rng);
    auto t = build_table(runs_from_bwt(build_bwt(Text::from_bytes(body))));
    auto bt = BlockedTable::compress(t, opts(DestEncoding::interpolated, 50));
    for (std::uint64_t b = 0; b < bt.num_blocks(); ++b) {
        std::uint64_t first = b * 50, last = std::min(first + 50, t.num_rows());
        for (std::size_t c = 0; c < bt.symbols().size(); ++c) {
            symbol_t s = bt.symbols()[c];
            std::uint64_t prev = kNoRow, next = kNoRow, before = 0;
            for (std::uint64_t k = 0; k < first; ++k)
                if (t.symbol(k) == s) {
                    prev = k;
                    ++before;
                }
            for (std::uint64_t k = t.num_rows(); k-- > last;)
                if (t.symbol(k) == s)
                    next = k;
            REQUIRE(bt.blocks()[b].prev_row[c] == prev);
            REQUIRE(bt.blocks()[b].next_row[c] == next);
            REQUIRE(bt.blocks()[b].rank_before[c] == before);
        }
    }
}

TEST_CASE("blocked table matches the move table")
{
    std::mt19937_64 rng(9);
    for (int round = 0; round < 24; ++round) {
        auto body = workload::random_text(1 + rng() % 2000, 1 + rng() % 8, rng);
        auto t = build_table(runs_from_bwt(build_bwt(Text::from_bytes(body))));
        for (auto e : kEncodings) {
            auto o = opts(e, 1 + rng() % 64);
            o.dac_rate = 1 + rng() % 9;
            o.interp_rate = 1 + rng() % 20;
            o.head_sample_rate = 1 + rng() % 20;
            check_same(t, BlockedTable::compress(t, o));
        }
    }
    auto adv = build_table(runs_from_bwt(workload::adversarial_bwt(500)));
    for (auto e : kEncodings)
        check_same(adv, BlockedTable::compress(adv, opts(e, 16)));
}

TEST_CASE("large alphabets are rejected")
{
    auto nine = workload::bytes("ABCDEFGHI");
    auto t = build_table(runs_from_bwt(build_bwt(Text::from_bytes(nine))));
    CHECK_THROWS_AS(BlockedTable::compress(t), UnsupportedAlphabet);

    auto eight = workload::bytes("ABCDEFGH");
    auto ok = build_table(runs_from_bwt(build_bwt(Text::from_bytes(eight))));
    CHECK(BlockedTable::compress(ok).symbols().size() == 9);
}

TEST_CASE("compress argument checks")
{
    auto t = build_table(runs_from_bwt(sym("TTTCGGAA$ATTA")));
    CHECK_THROWS(BlockedTable::compress(t, opts(DestEncoding::bitvector, 0)));
    auto o = opts(DestEncoding::dac_sampled, 4);
    o.dac_rate = 0;
    CHECK_THROWS(BlockedTable::compress(t, o));
}
