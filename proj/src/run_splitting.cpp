#include "lfmove/run_splitting.hpp"

#include "lfmove/error.hpp"

#include <ext/pb_ds/assoc_container.hpp>
#include <ext/pb_ds/tree_policy.hpp>

#include <algorithm>
#include <cassert>
#include <charconv>
#include <set>

namespace lfmove {

namespace {

using order_set = __gnu_pbds::tree<std::uint64_t, __gnu_pbds::null_type, std::less<>, __gnu_pbds::rb_tree_tag,
                                   __gnu_pbds::tree_order_statistics_node_update>;

std::uint64_t parse_u64(std::string_view s)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    return v;
}

SplitRuns splits_from_heads(const RunLengthBWT& rl, std::vector<std::uint64_t> heads)
{
    SplitRuns out;
    out.parent_run.reserve(heads.size());
    std::uint64_t parent = 0;
    for (std::uint64_t h : heads) {
        while (parent + 1 < rl.runs() && rl.run_heads[parent + 1] <= h)
            ++parent;
        out.parent_run.push_back(parent);
    }
    out.sub_run_heads = std::move(heads);
    return out;
}

} // namespace

Rational Rational::parse(std::string_view s)
{
    Rational r;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        r.num = parse_u64(s.substr(0, slash));
        r.den = parse_u64(s.substr(slash + 1));
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto frac = s.substr(dot + 1);
        if (frac.size() > 18)
            throw std::invalid_argument("too many decimals: '" + std::string(s) + "'");
        r.den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            r.den *= 10;
        r.num = (dot == 0 ? 0 : parse_u64(s.substr(0, dot))) * r.den + (frac.empty() ? 0 : parse_u64(frac));
    } else {
        r.num = parse_u64(s);
        r.den = 1;
    }
    if (r.num == 0 || r.den == 0)
        throw std::invalid_argument("factor must be a positive rational: '" + std::string(s) + "'");
    return r;
}

std::string Rational::to_string() const
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

SplitConfig SplitConfig::max_length(Rational f)
{
    if (f.num == 0 || f.den == 0)
        throw std::invalid_argument("split factor must be positive");
    SplitConfig c;
    c.mode = Mode::max_length;
    c.factor = f;
    return c;
}

SplitConfig SplitConfig::balanced(std::uint64_t d)
{
    if (d < 2)
        throw std::invalid_argument("balance parameter d must be at least 2");
    SplitConfig c;
    c.mode = Mode::balanced;
    c.d = d;
    return c;
}

SplitRuns no_split(const RunLengthBWT& rl)
{
    return splits_from_heads(rl, rl.run_heads);
}

std::uint64_t max_run_length(std::uint64_t n, std::uint64_t r, Rational factor)
{
    unsigned __int128 num = static_cast<unsigned __int128>(factor.num) * n;
    unsigned __int128 den = static_cast<unsigned __int128>(factor.den) * r;
    auto t = static_cast<std::uint64_t>((num + den - 1) / den);
    return std::max<std::uint64_t>(t, 1);
}

SplitRuns split_max_length(const RunLengthBWT& rl, Rational factor)
{
    const std::uint64_t limit = max_run_length(rl.n, rl.runs(), factor);
    std::vector<std::uint64_t> heads;
    heads.reserve(rl.runs());
    for (std::uint64_t k = 0; k < rl.runs(); ++k) {
        std::uint64_t len = rl.run_length(k);
        std::uint64_t pieces = (len + limit - 1) / limit;
        std::uint64_t base = len / pieces, extra = len % pieces;
        std::uint64_t h = rl.run_heads[k];
        for (std::uint64_t j = 0; j < pieces; ++j) {
            heads.push_back(h);
            h += base + (j < extra ? 1 : 0);
        }
    }
    return splits_from_heads(rl, std::move(heads));
}

std::vector<std::uint64_t> balance_heads(std::span<const std::uint64_t> heads, std::uint64_t n,
                                         const std::function<std::uint64_t(std::uint64_t)>& pi,
                                         const std::function<std::uint64_t(std::uint64_t)>& pi_inverse,
                                         std::uint64_t d)
{
    if (d < 2)
        throw std::invalid_argument("balance parameter d must be at least 2");
    if (heads.empty() || heads.front() != 0)
        throw std::invalid_argument("head set must contain 0");

    order_set p_set;
    std::set<std::uint64_t> q_set;
    for (std::uint64_t h : heads) {
        p_set.insert(h);
        q_set.insert(pi(h));
    }
    assert(*q_set.begin() == 0);
    q_set.insert(n); // closes the last interval

    auto heads_in = [&](std::uint64_t lo, std::uint64_t hi) {
        return static_cast<std::uint64_t>(p_set.order_of_key(hi) - p_set.order_of_key(lo));
    };
    auto interval_end = [&](std::uint64_t q) { return *std::next(q_set.find(q)); };

    const std::uint64_t limit = 2 * d;
    std::set<std::uint64_t> violating;
    for (auto it = q_set.begin(); std::next(it) != q_set.end(); ++it)
        if (heads_in(*it, *std::next(it)) >= limit)
            violating.insert(*it);

    while (!violating.empty()) {
        std::uint64_t q = *violating.begin();
        violating.erase(violating.begin());
        std::uint64_t q_end = interval_end(q);
        if (heads_in(q, q_end) < limit)
            continue;

        // d-th largest head in [q, q_end)
        std::uint64_t p = *p_set.find_by_order(p_set.order_of_key(q_end) - d);
        assert(p > q && !q_set.contains(p));
        std::uint64_t x = pi_inverse(p);
        assert(p_set.find(x) == p_set.end());
        p_set.insert(x);
        q_set.insert(p);

        std::uint64_t u = *std::prev(q_set.upper_bound(x));
        for (std::uint64_t s : {q, p, u})
            if (heads_in(s, interval_end(s)) >= limit)
                violating.insert(s);
    }

    return {p_set.begin(), p_set.end()};
}

SplitRuns balance(const RunLengthBWT& rl, const RunLf& lf, std::uint64_t d)
{
    auto heads = balance_heads(
        rl.run_heads, rl.n, [&](std::uint64_t i) { return lf(i); },
        [&](std::uint64_t p) { return lf.inverse(p); }, d);
    return splits_from_heads(rl, std::move(heads));
}

SplitRuns apply_split(const RunLengthBWT& rl, const SplitConfig& config)
{
    switch (config.mode) {
    case SplitConfig::Mode::none:
        return no_split(rl);
    case SplitConfig::Mode::max_length:
        return split_max_length(rl, config.factor);
    case SplitConfig::Mode::balanced:
        return balance(rl, RunLf(rl), config.d);
    }
    throw std::invalid_argument("unknown split mode");
}

MoveTable rebuild_table(const RunLengthBWT& rl, const SplitRuns& splits)
{
    RunLf lf(rl);
    return MoveTable(rl, splits.sub_run_heads, lf);
}

} // namespace lfmove
