#include "lfmove/oracle.hpp"

#include "lfmove/error.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace lfmove::oracle {

std::uint64_t lf(std::span<const symbol_t> bwt, const Alphabet& alphabet, std::uint64_t i)
{
    if (i >= bwt.size())
        throw std::out_of_range("lf oracle: position " + std::to_string(i) + " out of range");
    symbol_t c = bwt[i];
    auto prior = static_cast<std::uint64_t>(std::count(bwt.begin(), bwt.begin() + i, c));
    return alphabet.c_array[c] + prior;
}

std::vector<std::uint64_t> lf_all(std::span<const symbol_t> bwt)
{
    auto alphabet = Alphabet::of(bwt);
    std::array<std::uint64_t, 256> next = alphabet.c_array;
    std::vector<std::uint64_t> out(bwt.size());
    for (std::size_t i = 0; i < bwt.size(); ++i)
        out[i] = next[bwt[i]]++;
    return out;
}

std::vector<std::uint64_t> suffix_array_naive(std::span<const symbol_t> text)
{
    std::vector<std::uint64_t> sa(text.size());
    std::iota(sa.begin(), sa.end(), 0);
    std::sort(sa.begin(), sa.end(), [&](std::uint64_t a, std::uint64_t b) {
        return std::lexicographical_compare(text.begin() + a, text.end(), text.begin() + b, text.end());
    });
    return sa;
}

std::uint64_t count(std::span<const symbol_t> text, std::span<const symbol_t> pattern)
{
    if (pattern.empty())
        return 0;
    std::size_t body = text.size();
    if (body > 0 && text.back() == kTerminator)
        --body;
    if (pattern.size() > body)
        return 0;
    std::uint64_t hits = 0;
    for (std::size_t i = 0; i + pattern.size() <= body; ++i)
        if (std::equal(pattern.begin(), pattern.end(), text.begin() + i))
            ++hits;
    return hits;
}

std::vector<symbol_t> invert(std::span<const symbol_t> bwt)
{
    auto it = std::find(bwt.begin(), bwt.end(), kTerminator);
    if (it == bwt.end())
        throw InvalidText("BWT has no terminator");
    auto lfv = lf_all(bwt);
    std::vector<symbol_t> out(bwt.size());
    std::uint64_t row = static_cast<std::uint64_t>(it - bwt.begin());
    for (std::size_t j = bwt.size(); j-- > 0;) {
        out[j] = bwt[row];
        row = lfv[row];
    }
    return out;
}

std::uint64_t lf_breaks(std::span<const std::uint64_t> lf)
{
    std::uint64_t b = 0;
    for (std::size_t i = 0; i + 1 < lf.size(); ++i)
        if (lf[i + 1] != lf[i] + 1)
            ++b;
    return b;
}

} // namespace lfmove::oracle
