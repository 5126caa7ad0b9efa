#include "doctest.h"
#include "support.hpp"

#include "lfmove/oracle.hpp"
#include "lfmove/run_splitting.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace lfmove;
using lfmove::testing::sym;

namespace {

// random permutation of [0, n) that is an increment inside each of a random
// set of intervals; the interval starts are the heads
struct IntervalPerm {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> heads;
    std::vector<std::uint64_t> dest;

    std::uint64_t interval_of(std::uint64_t i) const
    {
        return static_cast<std::uint64_t>(std::upper_bound(heads.begin(), heads.end(), i) - heads.begin()) - 1;
    }
    std::uint64_t operator()(std::uint64_t i) const
    {
        auto k = interval_of(i);
        return dest[k] + i - heads[k];
    }
};

IntervalPerm random_interval_perm(std::uint64_t n, std::uint64_t cuts, std::mt19937_64& rng)
{
    IntervalPerm p;
    p.n = n;
    std::vector<std::uint64_t> h{0};
    for (std::uint64_t i = 0; i < cuts; ++i)
        h.push_back(rng() % n);
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    p.heads = h;
    std::vector<std::uint64_t> order(h.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    p.dest.resize(h.size());
    std::uint64_t at = 0;
    for (auto k : order) {
        p.dest[k] = at;
        at += (k + 1 < h.size() ? h[k + 1] : n) - h[k];
    }
    return p;
}

std::uint64_t max_scan(const MoveTable& t)
{
    std::uint64_t worst = 0;
    for (std::uint64_t i = 0; i < t.size(); ++i)
        worst = std::max(worst, t.lf_step_counted(t.position_to_pair(i)).second);
    return worst;
}

void check_partition(const RunLengthBWT& rl, const SplitRuns& s)
{
    REQUIRE(s.sub_run_heads.size() == s.parent_run.size());
    REQUIRE(std::is_sorted(s.sub_run_heads.begin(), s.sub_run_heads.end()));
    REQUIRE(std::adjacent_find(s.sub_run_heads.begin(), s.sub_run_heads.end()) == s.sub_run_heads.end());
    for (auto h : rl.run_heads)
        REQUIRE(std::binary_search(s.sub_run_heads.begin(), s.sub_run_heads.end(), h));
    for (std::size_t j = 0; j < s.sub_run_heads.size(); ++j) {
        auto parent = s.parent_run[j];
        auto end = j + 1 < s.sub_run_heads.size() ? s.sub_run_heads[j + 1] : rl.n;
        REQUIRE(s.sub_run_heads[j] >= rl.run_heads[parent]);
        REQUIRE(end <= rl.run_end(parent));
    }
    // the pieces of each parent concatenate to it
    std::vector<std::uint64_t> covered(rl.runs());
    for (std::size_t j = 0; j < s.sub_run_heads.size(); ++j) {
        auto end = j + 1 < s.sub_run_heads.size() ? s.sub_run_heads[j + 1] : rl.n;
        covered[s.parent_run[j]] += end - s.sub_run_heads[j];
    }
    for (std::uint64_t k = 0; k < rl.runs(); ++k)
        REQUIRE(covered[k] == rl.run_length(k));
}

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(Rational::parse("2") == Rational{2, 1});
    CHECK(Rational::parse("2.5") == Rational{25, 10});
    CHECK(Rational::parse("5/2") == Rational{5, 2});
    CHECK(Rational::parse(".5") == Rational{5, 10});
    CHECK(Rational{5, 2}.to_string() == "5/2");
    CHECK_THROWS(Rational::parse("0"));
    CHECK_THROWS(Rational::parse("2/0"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("-1"));
    CHECK_THROWS(SplitConfig::balanced(1));
    CHECK_THROWS(SplitConfig::max_length({0, 1}));
}

TEST_CASE("max length threshold")
{
    CHECK(max_run_length(13, 8, {2, 1}) == 4);
    CHECK(max_run_length(100, 1, {2, 1}) == 200);
    CHECK(max_run_length(50, 11, {2, 1}) == 10);
    CHECK(max_run_length(10, 10, {1, 100}) == 1);
}

TEST_CASE("max length splitting examples")
{
    auto example = runs_from_bwt(sym("TTTCGGAA$ATTA"));
    CHECK(split_max_length(example, {2, 1}).sub_run_heads == example.run_heads);

    auto unary = runs_from_bwt(std::vector<symbol_t>(100, 'A'));
    CHECK(split_max_length(unary, {2, 1}).sub_run_heads == std::vector<std::uint64_t>{0});

    auto adv = runs_from_bwt(workload::adversarial_bwt(50));
    REQUIRE(adv.runs() == 11);
    auto s = split_max_length(adv, {2, 1});
    CHECK(s.sub_run_heads.size() == 14);
    CHECK(std::vector<std::uint64_t>(s.sub_run_heads.end() - 4, s.sub_run_heads.end()) ==
          std::vector<std::uint64_t>{10, 20, 30, 40});
    check_partition(adv, s);

    auto t = rebuild_table(adv, s);
    CHECK(t.num_rows() == 14);
    std::uint64_t total = 0;
    for (const auto& r : t.rows()) {
        total += r.length;
        CHECK(r.length <= 10);
    }
    CHECK(total == 50);
}

TEST_CASE("equal-as-possible pieces")
{
    auto rl = runs_from_bwt(std::vector<symbol_t>(23, 'A'));
    auto s = split_max_length(rl, {1, 5}); // threshold ceil(23/5) = 5
    CHECK(s.sub_run_heads == std::vector<std::uint64_t>{0, 5, 10, 15, 19});
}

TEST_CASE("no split reproduces build_table")
{
    auto rl = runs_from_bwt(build_bwt(Text::from_string("GATTAGATACAT")));
    auto a = build_table(rl);
    auto b = rebuild_table(rl, no_split(rl));
    CHECK(std::equal(a.rows().begin(), a.rows().end(), b.rows().begin(), b.rows().end()));
}

TEST_CASE("balance on the adversarial string")
{
    auto bwt = workload::adversarial_bwt(10000);
    auto rl = runs_from_bwt(bwt);
    auto s = balance(rl, RunLf(rl), 2);
    check_partition(rl, s);
    CHECK(s.sub_run_heads.size() <= 2 * rl.runs());
    auto t = rebuild_table(rl, s);
    CHECK(max_scan(t) <= 3);

    auto want = oracle::lf_all(bwt);
    for (std::uint64_t i = 0; i < bwt.size(); ++i)
        REQUIRE(t.pair_to_index(t.lf_step(t.position_to_pair(i))) == want[i]);
}

TEST_CASE("balance on a random text")
{
    std::mt19937_64 rng(21);
    auto bwt = build_bwt(Text::from_bytes(workload::random_text(10000, 4, rng)));
    auto rl = runs_from_bwt(bwt);
    auto s = balance(rl, RunLf(rl), 4);
    check_partition(rl, s);
    CHECK(3 * s.sub_run_heads.size() <= 4 * rl.runs());
    CHECK(max_scan(rebuild_table(rl, s)) < 8);
}

TEST_CASE("balance leaves a balanced table alone")
{
    auto rl = runs_from_bwt(sym("TTTCGGAA$ATTA"));
    CHECK(balance(rl, RunLf(rl), 4).sub_run_heads == rl.run_heads);
}

TEST_CASE("balance bounds on random interval permutations")
{
    std::mt19937_64 rng(99);
    for (int round = 0; round < 400; ++round) {
        std::uint64_t n = 2 + rng() % 3000;
        auto perm = random_interval_perm(n, rng() % (n / 2 + 1), rng);
        std::vector<std::uint64_t> inverse(n);
        for (std::uint64_t i = 0; i < n; ++i)
            inverse[perm(i)] = i;
        std::uint64_t d = 2 + rng() % 7;
        auto out = balance_heads(perm.heads, n, perm, [&](std::uint64_t p) { return inverse[p]; }, d);

        REQUIRE(std::includes(out.begin(), out.end(), perm.heads.begin(), perm.heads.end()));
        REQUIRE(out.size() * (d - 1) <= d * perm.heads.size());

        std::vector<std::uint64_t> q;
        for (auto h : out)
            q.push_back(perm(h));
        q.push_back(n);
        std::sort(q.begin(), q.end());
        for (std::size_t j = 0; j + 1 < q.size(); ++j) {
            auto inside = std::lower_bound(out.begin(), out.end(), q[j + 1]) -
                          std::lower_bound(out.begin(), out.end(), q[j]);
            REQUIRE(static_cast<std::uint64_t>(inside) < 2 * d);
        }
    }
}

TEST_CASE("balance argument checks")
{
    std::vector<std::uint64_t> heads{0, 2};
    auto id = [](std::uint64_t i) { return i; };
    CHECK_THROWS(balance_heads(heads, 4, id, id, 1));
    std::vector<std::uint64_t> no_zero{1, 2};
    CHECK_THROWS(balance_heads(no_zero, 4, id, id, 2));
}
