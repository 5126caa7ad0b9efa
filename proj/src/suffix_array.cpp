#include "lfmove/suffix_array.hpp"

#include "lfmove/error.hpp"

#include <limits>

namespace lfmove {

std::vector<sa_index_t> build_suffix_array(std::span<const symbol_t> text)
{
    validate_terminated(text);
    if (text.size() >= std::numeric_limits<sa_index_t>::max())
        throw InvalidText("text too long for 32-bit suffix array");

    const std::size_t n = text.size();
    std::vector<sa_index_t> sa(n), rank(n), tmp(n);
    std::vector<sa_index_t> cnt(std::max<std::size_t>(n, 256) + 1);

    // round 0: bucket by first symbol
    for (symbol_t c : text)
        cnt[c]++;
    for (std::size_t c = 1; c < 256; ++c)
        cnt[c] += cnt[c - 1];
    for (std::size_t i = n; i-- > 0;)
        sa[--cnt[text[i]]] = static_cast<sa_index_t>(i);
    rank[sa[0]] = 0;
    sa_index_t classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (text[sa[i]] != text[sa[i - 1]])
            ++classes;
        rank[sa[i]] = classes - 1;
    }

    for (std::size_t k = 1; classes < n; k <<= 1) {
        // order by second key: suffixes shorter than k+1 first, then the
        // previous order shifted by k
        std::size_t p = 0;
        for (std::size_t i = n - std::min(k, n); i < n; ++i)
            tmp[p++] = static_cast<sa_index_t>(i);
        for (std::size_t j = 0; j < n; ++j)
            if (sa[j] >= k)
                tmp[p++] = static_cast<sa_index_t>(sa[j] - k);

        // stable counting sort by first key
        std::fill(cnt.begin(), cnt.begin() + classes, 0);
        for (std::size_t i = 0; i < n; ++i)
            cnt[rank[i]]++;
        for (std::size_t c = 1; c < classes; ++c)
            cnt[c] += cnt[c - 1];
        for (std::size_t j = n; j-- > 0;)
            sa[--cnt[rank[tmp[j]]]] = tmp[j];

        auto second = [&](sa_index_t i) -> std::int64_t {
            return i + k < n ? static_cast<std::int64_t>(rank[i + k]) : -1;
        };
        tmp[sa[0]] = 0;
        classes = 1;
        for (std::size_t i = 1; i < n; ++i) {
            sa_index_t a = sa[i - 1], b = sa[i];
            if (rank[a] != rank[b] || second(a) != second(b))
                ++classes;
            tmp[b] = classes - 1;
        }
        rank.swap(tmp);
    }
    return sa;
}

std::vector<symbol_t> bwt_from_sa(std::span<const symbol_t> text, std::span<const sa_index_t> sa)
{
    if (text.size() != sa.size())
        throw Error("suffix array length " + std::to_string(sa.size()) + " does not match text length " +
                    std::to_string(text.size()));
    const std::size_t n = text.size();
    std::vector<symbol_t> bwt(n);
    for (std::size_t i = 0; i < n; ++i)
        bwt[i] = text[(sa[i] + n - 1) % n];
    return bwt;
}

std::vector<symbol_t> build_bwt(const Text& text)
{
    auto sa = build_suffix_array(text);
    return bwt_from_sa(text.bytes(), sa);
}

} // namespace lfmove
