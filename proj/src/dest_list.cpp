#include "lfmove/dest_list.hpp"

#include <stdexcept>
#include <string>

namespace lfmove {

namespace {

void require_sorted(std::span<const std::uint64_t> m)
{
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i] < m[i - 1])
            throw std::invalid_argument("destination list is not non-decreasing at index " + std::to_string(i));
}

void require_rate(std::uint64_t rate)
{
    if (rate == 0)
        throw std::invalid_argument("sample rate must be at least 1");
}

} // namespace

std::string_view to_string(DestEncoding e)
{
    switch (e) {
    case DestEncoding::bitvector:
        return "bv";
    case DestEncoding::dac_sampled:
        return "dac";
    case DestEncoding::interpolated:
        return "interp";
    }
    return "?";
}

DestEncoding parse_dest_encoding(std::string_view s)
{
    if (s == "bv")
        return DestEncoding::bitvector;
    if (s == "dac")
        return DestEncoding::dac_sampled;
    if (s == "interp")
        return DestEncoding::interpolated;
    throw std::invalid_argument("unknown destination encoding '" + std::string(s) + "'");
}

BvList::BvList(std::uint64_t base, BitVector bits) : base_(base), bits_(std::move(bits))
{
    if (bits_.size() != 0 && !bits_[bits_.size() - 1])
        throw std::invalid_argument("bitvector list must end with a one");
}

BvList BvList::encode(std::span<const std::uint64_t> m)
{
    require_sorted(m);
    if (m.empty())
        return {};
    // the k-th one sits after M[k] - M[0] zeros
    BitVector::Builder b(m.back() - m[0] + m.size());
    for (std::size_t k = 0; k < m.size(); ++k)
        b.set(m[k] - m[0] + k);
    return BvList(m[0], std::move(b).build());
}

DacSampledList::DacSampledList(std::uint64_t rate, std::vector<std::uint64_t> samples, DacList diffs)
    : rate_(rate), samples_(std::move(samples)), diffs_(std::move(diffs))
{
    require_rate(rate_);
    if (samples_.size() != (diffs_.size() + rate_ - 1) / rate_)
        throw std::invalid_argument("DAC-sampled list has " + std::to_string(samples_.size()) +
                                    " samples for " + std::to_string(diffs_.size()) + " values");
}

DacSampledList DacSampledList::encode(std::span<const std::uint64_t> m, std::uint64_t rate)
{
    require_sorted(m);
    require_rate(rate);
    std::vector<std::uint64_t> samples, diffs(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        diffs[i] = i == 0 ? 0 : m[i] - m[i - 1];
        if (i % rate == 0)
            samples.push_back(m[i]);
    }
    return DacSampledList(rate, std::move(samples), DacList(diffs));
}

InterpList::InterpList(std::uint64_t rate, std::uint64_t size, std::vector<std::uint64_t> samples,
                       DacList magnitudes, BitVector negative)
    : rate_(rate), size_(size), samples_(std::move(samples)), magnitudes_(std::move(magnitudes)),
      negative_(std::move(negative))
{
    require_rate(rate_);
    std::uint64_t sampled = (size_ + rate_ - 1) / rate_;
    if (samples_.size() != sampled || magnitudes_.size() != size_ - sampled || negative_.size() != size_ - sampled)
        throw std::invalid_argument("interpolated list sections disagree on length");
}

InterpList InterpList::encode(std::span<const std::uint64_t> m, std::uint64_t rate)
{
    require_sorted(m);
    require_rate(rate);
    std::vector<std::uint64_t> samples;
    for (std::size_t i = 0; i < m.size(); i += rate)
        samples.push_back(m[i]);

    std::vector<std::uint64_t> mags;
    BitVector::Builder neg;
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint64_t w = i / rate, step = i % rate;
        if (step == 0)
            continue;
        std::uint64_t x = samples[w];
        std::uint64_t eps = w + 1 < samples.size() ? estimate(x, samples[w + 1], step, rate) : x;
        bool below = m[i] < eps;
        mags.push_back(below ? eps - m[i] : m[i] - eps);
        neg.push_back(below);
    }
    return InterpList(rate, m.size(), std::move(samples), DacList(mags), std::move(neg).build());
}

DestList encode_dest_list(std::span<const std::uint64_t> m, DestEncoding encoding, std::uint64_t rate)
{
    switch (encoding) {
    case DestEncoding::bitvector:
        return BvList::encode(m);
    case DestEncoding::dac_sampled:
        return DacSampledList::encode(m, rate);
    case DestEncoding::interpolated:
        return InterpList::encode(m, rate);
    }
    throw std::invalid_argument("unknown destination encoding");
}

} // namespace lfmove
