#pragma once

// Shared fixtures: literal conversion, the corpus suite and the build
// configuration matrix.

#include "lfmove/index.hpp"
#include "lfmove/suffix_array.hpp"
#include "lfmove/workload.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace lfmove::testing {

// '$' stands for the terminator
inline std::vector<symbol_t> sym(std::string_view s)
{
    std::vector<symbol_t> out;
    for (char ch : s)
        out.push_back(ch == '$' ? kTerminator : static_cast<symbol_t>(ch));
    return out;
}

inline std::string str(std::span<const symbol_t> s)
{
    std::string out;
    for (symbol_t c : s)
        out.push_back(c == kTerminator ? '$' : static_cast<char>(c));
    return out;
}

struct Corpus {
    std::string name;
    std::vector<symbol_t> text; // terminated; empty for BWT-only corpora
    std::vector<symbol_t> bwt;
};

inline Corpus text_corpus(std::string name, std::vector<symbol_t> body)
{
    Text t = Text::from_bytes(body);
    Corpus c{std::move(name), {t.bytes().begin(), t.bytes().end()}, {}};
    c.bwt = build_bwt(t);
    return c;
}

inline Corpus bwt_corpus(std::string name, std::vector<symbol_t> bwt)
{
    return {std::move(name), {}, std::move(bwt)};
}

inline std::vector<Corpus> corpus_suite()
{
    std::vector<Corpus> out;
    std::mt19937_64 rng(0x5eed);
    std::uint64_t seed = 1;
    for (unsigned sigma : {2u, 4u, 8u})
        for (std::uint64_t n : {100ULL, 1000ULL, 10000ULL, 100000ULL})
            for (int rep = 0; rep < 2; ++rep) {
                std::mt19937_64 g(seed++);
                out.push_back(text_corpus("random-s" + std::to_string(sigma) + "-n" + std::to_string(n) + "-" +
                                              std::to_string(rep),
                                          workload::random_text(n, sigma, g)));
            }
    for (std::uint64_t n : {10ULL, 100ULL, 1000ULL, 10000ULL, 100000ULL})
        out.push_back(text_corpus("fibonacci-" + std::to_string(n), workload::fibonacci_word(n)));
    for (std::uint64_t n : {1ULL, 2ULL, 10ULL, 1000ULL, 100000ULL})
        out.push_back(text_corpus("unary-" + std::to_string(n), std::vector<symbol_t>(n, 'a')));
    for (std::uint64_t m : {20ULL, 2000ULL})
        out.push_back(text_corpus("interleaved-" + std::to_string(m), workload::interleaved_adversarial_text(m, rng)));
    for (unsigned sigma : {2u, 4u, 8u}) {
        auto base = workload::random_text(2000, sigma, rng);
        out.push_back(text_corpus("mutated-s" + std::to_string(sigma),
                                  workload::mutated_copies(base, 16, 0.001, rng)));
    }
    {
        auto base = workload::random_text(500, 4, rng);
        out.push_back(text_corpus("mutated-heavy", workload::mutated_copies(base, 40, 0.01, rng)));
    }
    auto repeat = [](std::string_view unit, std::size_t times) {
        std::string s;
        for (std::size_t i = 0; i < times; ++i)
            s += unit;
        return workload::bytes(s);
    };
    out.push_back(text_corpus("periodic-acgt", repeat("ACGT", 2500)));
    out.push_back(text_corpus("periodic-abc", repeat("abc", 3000)));
    out.push_back(text_corpus("periodic-aab", repeat("aab", 777)));
    out.push_back(text_corpus("tiny-A", workload::bytes("A")));
    out.push_back(text_corpus("tiny-GATTAGATACAT", workload::bytes("GATTAGATACAT")));
    out.push_back(text_corpus("tiny-ABAB", workload::bytes("ABAB")));
    out.push_back(text_corpus("tiny-mississippi", workload::bytes("mississippi")));
    out.push_back(text_corpus("tiny-CA", workload::bytes("CA")));
    out.push_back(bwt_corpus("adversarial-bwt-1000", workload::adversarial_bwt(1000)));
    out.push_back(bwt_corpus("adversarial-bwt-10000", workload::adversarial_bwt(10000)));
    return out;
}

struct Config {
    std::string name;
    BuildOptions options;
};

// every backend x split mode x encoding; small blocks so that lists and
// boundary pointers span several blocks
inline std::vector<Config> config_matrix(std::uint64_t block_size = 64)
{
    std::vector<std::pair<std::string, SplitConfig>> splits{
        {"none", SplitConfig::none()},
        {"maxlen2", SplitConfig::max_length({2, 1})},
        {"balance2", SplitConfig::balanced(2)},
        {"balance4", SplitConfig::balanced(4)},
    };
    std::vector<Config> out;
    for (const auto& [sname, split] : splits) {
        BuildOptions table;
        table.backend = Backend::table;
        table.split = split;
        out.push_back({"table/" + sname, table});
        for (DestEncoding e : {DestEncoding::bitvector, DestEncoding::dac_sampled, DestEncoding::interpolated}) {
            BuildOptions b;
            b.backend = Backend::blocked;
            b.split = split;
            b.blocked.encoding = e;
            b.blocked.block_size = block_size;
            out.push_back({"blocked-" + std::string(to_string(e)) + "/" + sname, b});
        }
    }
    return out;
}

} // namespace lfmove::testing
