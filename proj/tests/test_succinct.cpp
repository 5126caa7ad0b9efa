#include "doctest.h"

#include "lfmove/bit_vector.hpp"
#include "lfmove/dac.hpp"
#include "lfmove/dest_list.hpp"

#include <algorithm>
#include <random>
#include <string>

using namespace lfmove;

namespace {

std::string bits_of(const BitVector& bv)
{
    std::string s;
    for (std::uint64_t i = 0; i < bv.size(); ++i)
        s.push_back(bv[i] ? '1' : '0');
    return s;
}

std::vector<std::uint64_t> sorted_list(std::mt19937_64& rng, std::size_t len, std::uint64_t max_gap)
{
    std::vector<std::uint64_t> m(len);
    std::uint64_t v = rng() % (max_gap * 4 + 1);
    for (auto& x : m) {
        x = v;
        v += rng() % (max_gap + 1);
    }
    return m;
}

template <class List>
void check_decodes(const List& l, const std::vector<std::uint64_t>& m)
{
    REQUIRE(l.size() == m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        REQUIRE(l[i] == m[i]);
}

} // namespace

TEST_CASE("bitvector rank and select against a scan")
{
    std::mt19937_64 rng(1);
    for (int round = 0; round < 50; ++round) {
        std::uint64_t n = rng() % 5000;
        unsigned density = 1 + rng() % 100;
        BitVector::Builder b;
        std::vector<bool> plain;
        for (std::uint64_t i = 0; i < n; ++i) {
            bool bit = rng() % 100 < density;
            b.push_back(bit);
            plain.push_back(bit);
        }
        BitVector bv = std::move(b).build();
        REQUIRE(bv.size() == n);
        std::uint64_t ones = 0;
        for (std::uint64_t i = 0; i <= n; ++i) {
            REQUIRE(bv.rank1(i) == ones);
            if (i < n && plain[i]) {
                ++ones;
                REQUIRE(bv.select1(ones) == i);
                REQUIRE(bv[i]);
            }
        }
        CHECK(bv.ones() == ones);
    }
}

TEST_CASE("bitvector construction checks")
{
    CHECK_THROWS(BitVector(10, {}));
    CHECK_THROWS(BitVector(3, {0b1000}));
    BitVector::Builder pre(70);
    pre.set(69);
    auto bv = std::move(pre).build();
    CHECK(bv.rank1(70) == 1);
    CHECK(bv.select1(1) == 69);
    CHECK(BitVector().ones() == 0);
}

TEST_CASE("dac random access")
{
    std::mt19937_64 rng(2);
    std::vector<std::uint64_t> edge{0, 255, 256, 65535, 65536, ~std::uint64_t{0}, 1ULL << 56, 42};
    DacList d(edge);
    check_decodes(d, edge);
    CHECK(d.levels().size() == 8);

    for (int round = 0; round < 100; ++round) {
        std::vector<std::uint64_t> v(rng() % 2000);
        unsigned bits = 1 + rng() % 64;
        for (auto& x : v)
            x = bits == 64 ? rng() : rng() % (std::uint64_t{1} << bits);
        DacList dl(v);
        check_decodes(dl, v);
        CHECK(DacList::from_levels(dl.levels()) == dl);
    }
    CHECK(DacList().size() == 0);
}

TEST_CASE("bitvector list worked example")
{
    std::vector<std::uint64_t> m{11, 16, 19, 21};
    auto l = BvList::encode(m);
    CHECK(l.base() == 11);
    CHECK(bits_of(l.bits()) == "10000010001001");
    CHECK(l[2] == 19);
    check_decodes(l, m);

    auto single = BvList::encode(std::vector<std::uint64_t>{5});
    CHECK(bits_of(single.bits()) == "1");
    CHECK(single[0] == 5);
}

TEST_CASE("dac sampled worked example")
{
    std::vector<std::uint64_t> m{11, 16, 19, 21};
    auto l = DacSampledList::encode(m, 2);
    CHECK(l.samples() == std::vector<std::uint64_t>{11, 19});
    CHECK(l.diffs()[3] == 2);
    CHECK(l[3] == 21);
    check_decodes(l, m);

    auto direct = DacSampledList::encode(m, 1);
    CHECK(direct.samples() == m);
    check_decodes(direct, m);
}

TEST_CASE("interpolation worked example")
{
    CHECK(InterpList::estimate(11, 21, 1, 3) == 14);
    CHECK(InterpList::estimate(11, 21, 2, 3) == 18);
    CHECK(InterpList::estimate(0, 1, 1, 2) == 1); // half rounds up

    std::vector<std::uint64_t> m{11, 16, 19, 21};
    auto l = InterpList::encode(m, 3);
    CHECK(l.samples() == std::vector<std::uint64_t>{11, 21});
    REQUIRE(l.magnitudes().size() == 2);
    CHECK(l.magnitudes()[0] == 2);
    CHECK(l.magnitudes()[1] == 1);
    CHECK_FALSE(l.negative()[0]);
    CHECK_FALSE(l.negative()[1]);
    check_decodes(l, m);

    std::vector<std::uint64_t> linear;
    for (std::uint64_t i = 0; i < 64; ++i)
        linear.push_back(100 + 7 * i);
    auto lin = InterpList::encode(linear, 8);
    for (std::uint64_t j = 0; j < lin.magnitudes().size(); ++j)
        if (j < 49) // every window but the last interpolates exactly
            CHECK(lin.magnitudes()[j] == 0);
    check_decodes(lin, linear);

    // the last window has no right sample; deltas are taken from x
    std::vector<std::uint64_t> tail{4, 9};
    auto t = InterpList::encode(tail, 4);
    CHECK(t.magnitudes()[0] == 5);
    check_decodes(t, tail);
}

TEST_CASE("interpolation stores negative deltas")
{
    std::vector<std::uint64_t> m{0, 0, 0, 100};
    auto l = InterpList::encode(m, 3); // window [0, 3) interpolates 0 -> 100
    CHECK(l.negative()[0]);
    CHECK(l.magnitudes()[0] == 33);
    check_decodes(l, m);
}

TEST_CASE("encoding round trips on random lists")
{
    std::mt19937_64 rng(4);
    for (int round = 0; round < 2000; ++round) {
        auto m = sorted_list(rng, 1 + rng() % 300, 1 + rng() % 200);
        std::uint64_t rate = 1 + rng() % 20;
        check_decodes(BvList::encode(m), m);
        check_decodes(DacSampledList::encode(m, rate), m);
        check_decodes(InterpList::encode(m, rate), m);
        for (auto e : {DestEncoding::bitvector, DestEncoding::dac_sampled, DestEncoding::interpolated}) {
            auto l = encode_dest_list(m, e, rate);
            REQUIRE(dest_size(l) == m.size());
            REQUIRE(dest_at(l, m.size() - 1) == m.back());
        }
    }
    std::vector<std::uint64_t> wide{0, 1, ~std::uint64_t{0} - 5, ~std::uint64_t{0}};
    check_decodes(DacSampledList::encode(wide, 3), wide);
    check_decodes(InterpList::encode(wide, 3), wide);
}

TEST_CASE("encoding argument checks")
{
    std::vector<std::uint64_t> unsorted{3, 1};
    CHECK_THROWS(BvList::encode(unsorted));
    CHECK_THROWS(DacSampledList::encode(unsorted, 2));
    CHECK_THROWS(InterpList::encode(unsorted, 2));
    std::vector<std::uint64_t> ok{1, 2};
    CHECK_THROWS(DacSampledList::encode(ok, 0));
    CHECK_THROWS(InterpList::encode(ok, 0));
    CHECK(parse_dest_encoding("interp") == DestEncoding::interpolated);
    CHECK(to_string(DestEncoding::dac_sampled) == "dac");
    CHECK_THROWS(parse_dest_encoding("elias"));
    CHECK(BvList::encode(std::vector<std::uint64_t>{}).size() == 0);
}
