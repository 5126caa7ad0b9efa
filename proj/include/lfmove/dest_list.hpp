#pragma once

// Encodings for a non-decreasing integer list M with random access.

#include "lfmove/bit_vector.hpp"
#include "lfmove/dac.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace lfmove {

enum class DestEncoding : std::uint8_t { bitvector = 0, dac_sampled = 1, interpolated = 2 };

std::string_view to_string(DestEncoding e);
DestEncoding parse_dest_encoding(std::string_view s); // "bv", "dac", "interp"

// M[0] stored explicitly; gap M[i] - M[i-1] written as that many 0s followed
// by a 1, so M[k] = M[0] + select1(k + 1) - k.
class BvList {
public:
    BvList() = default;
    BvList(std::uint64_t base, BitVector bits);

    static BvList encode(std::span<const std::uint64_t> m);

    std::uint64_t size() const { return bits_.ones(); }
    std::uint64_t operator[](std::uint64_t k) const { return base_ + bits_.select1(k + 1) - k; }

    std::uint64_t base() const { return base_; }
    const BitVector& bits() const { return bits_; }
    std::uint64_t size_in_bytes() const { return 8 + bits_.size_in_bytes(); }

    bool operator==(const BvList&) const = default;

private:
    std::uint64_t base_ = 0;
    BitVector bits_;
};

// consecutive differences in a DAC plus every rate-th absolute value
class DacSampledList {
public:
    DacSampledList() = default;
    DacSampledList(std::uint64_t rate, std::vector<std::uint64_t> samples, DacList diffs);

    static DacSampledList encode(std::span<const std::uint64_t> m, std::uint64_t rate);

    std::uint64_t size() const { return diffs_.size(); }
    std::uint64_t operator[](std::uint64_t k) const
    {
        std::uint64_t s = k / rate_;
        std::uint64_t v = samples_[s];
        for (std::uint64_t i = s * rate_ + 1; i <= k; ++i)
            v += diffs_[i];
        return v;
    }

    std::uint64_t rate() const { return rate_; }
    const std::vector<std::uint64_t>& samples() const { return samples_; }
    const DacList& diffs() const { return diffs_; }
    std::uint64_t size_in_bytes() const { return 8 + samples_.size() * 8 + diffs_.size_in_bytes(); }

    bool operator==(const DacSampledList&) const = default;

private:
    std::uint64_t rate_ = 1;
    std::vector<std::uint64_t> samples_;
    DacList diffs_;
};

/*
 * Every rate-th value is sampled. An unsampled M[i] is stored as its signed
 * distance from the linear estimate x + round((z - x) * (i mod s) / s)
 * between the surrounding samples x and z (half rounds up). The last window
 * has no z; its estimate is x.
 */
class InterpList {
public:
    InterpList() = default;
    InterpList(std::uint64_t rate, std::uint64_t size, std::vector<std::uint64_t> samples, DacList magnitudes,
               BitVector negative);

    static InterpList encode(std::span<const std::uint64_t> m, std::uint64_t rate);

    static std::uint64_t estimate(std::uint64_t x, std::uint64_t z, std::uint64_t step, std::uint64_t rate)
    {
        auto num = static_cast<unsigned __int128>(z - x) * step * 2 + rate;
        return x + static_cast<std::uint64_t>(num / (static_cast<unsigned __int128>(rate) * 2));
    }

    std::uint64_t size() const { return size_; }
    std::uint64_t operator[](std::uint64_t i) const
    {
        std::uint64_t w = i / rate_, step = i % rate_;
        std::uint64_t x = samples_[w];
        if (step == 0)
            return x;
        std::uint64_t eps = w + 1 < samples_.size() ? estimate(x, samples_[w + 1], step, rate_) : x;
        std::uint64_t j = i - w - 1;
        std::uint64_t mag = magnitudes_[j];
        return negative_[j] ? eps - mag : eps + mag;
    }

    std::uint64_t rate() const { return rate_; }
    const std::vector<std::uint64_t>& samples() const { return samples_; }
    const DacList& magnitudes() const { return magnitudes_; }
    const BitVector& negative() const { return negative_; }
    std::uint64_t size_in_bytes() const
    {
        return 16 + samples_.size() * 8 + magnitudes_.size_in_bytes() + negative_.size_in_bytes();
    }

    bool operator==(const InterpList&) const = default;

private:
    std::uint64_t rate_ = 1;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> samples_;
    DacList magnitudes_;
    BitVector negative_;
};

using DestList = std::variant<BvList, DacSampledList, InterpList>;

DestList encode_dest_list(std::span<const std::uint64_t> m, DestEncoding encoding, std::uint64_t rate);

inline std::uint64_t dest_at(const DestList& list, std::uint64_t k)
{
    return std::visit([k](const auto& l) { return l[k]; }, list);
}

inline std::uint64_t dest_size(const DestList& list)
{
    return std::visit([](const auto& l) { return l.size(); }, list);
}

inline std::uint64_t dest_bytes(const DestList& list)
{
    return std::visit([](const auto& l) { return l.size_in_bytes(); }, list);
}

} // namespace lfmove
