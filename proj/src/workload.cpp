#include "lfmove/workload.hpp"

#include <algorithm>
#include <stdexcept>

namespace lfmove::workload {

std::vector<symbol_t> alphabet_of_size(unsigned sigma)
{
    static constexpr std::string_view kSmall = "ACGTNRYS";
    if (sigma == 0 || sigma > 255)
        throw std::invalid_argument("alphabet size must be in [1, 255]");
    std::vector<symbol_t> out;
    for (unsigned i = 0; i < sigma; ++i)
        out.push_back(sigma <= kSmall.size() ? static_cast<symbol_t>(kSmall[i]) : static_cast<symbol_t>(1 + i));
    return out;
}

std::vector<symbol_t> random_text(std::uint64_t n, unsigned sigma, std::mt19937_64& rng)
{
    auto sym = alphabet_of_size(sigma);
    std::vector<symbol_t> out(n);
    for (auto& c : out)
        c = sym[rng() % sigma];
    return out;
}

std::vector<symbol_t> fibonacci_word(std::uint64_t n)
{
    std::vector<symbol_t> prev{'b'}, cur{'a'};
    while (cur.size() < n) {
        std::vector<symbol_t> next = cur;
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur.resize(n);
    return cur;
}

std::vector<symbol_t> mutated_copies(std::span<const symbol_t> base, unsigned copies, double rate,
                                     std::mt19937_64& rng)
{
    auto alpha = Alphabet::of(base).symbols;
    std::vector<symbol_t> out;
    out.reserve(base.size() * copies);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (unsigned c = 0; c < copies; ++c) {
        for (symbol_t s : base) {
            if (alpha.size() > 1 && coin(rng) < rate) {
                symbol_t t = s;
                while (t == s)
                    t = alpha[rng() % alpha.size()];
                s = t;
            }
            out.push_back(s);
        }
    }
    return out;
}

std::vector<symbol_t> adversarial_bwt(std::uint64_t n)
{
    if (n == 0 || n % 10 != 0)
        throw std::invalid_argument("adversarial BWT length must be a positive multiple of 10");
    std::vector<symbol_t> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n / 10; ++i) {
        out.push_back('b');
        out.push_back('c');
    }
    out.insert(out.end(), 4 * n / 5, 'a');
    return out;
}

std::vector<symbol_t> interleaved_adversarial_text(std::uint64_t m, std::mt19937_64& rng)
{
    std::vector<symbol_t> out;
    out.reserve(5 * m);
    for (std::uint64_t i = 0; i < m; ++i) {
        out.push_back(rng() % 2 ? 'b' : 'c');
        out.insert(out.end(), 4, 'a');
    }
    return out;
}

std::vector<std::vector<symbol_t>> random_patterns(std::span<const symbol_t> text, std::uint64_t count,
                                                   std::uint64_t max_len, std::mt19937_64& rng)
{
    std::size_t body = text.size();
    if (body > 0 && text.back() == kTerminator)
        --body;
    auto alpha = Alphabet::of(text.first(body)).symbols;
    std::vector<std::vector<symbol_t>> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t len = 1 + rng() % max_len;
        if (body > 0 && rng() % 4 != 0) {
            len = std::min<std::uint64_t>(len, body);
            std::uint64_t start = rng() % (body - len + 1);
            out.emplace_back(text.begin() + start, text.begin() + start + len);
        } else {
            std::vector<symbol_t> p(len);
            for (auto& c : p)
                c = alpha.empty() ? symbol_t{'A'} : alpha[rng() % alpha.size()];
            out.push_back(std::move(p));
        }
    }
    return out;
}

} // namespace lfmove::workload
