#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string_view>
#include <vector>

namespace lfmove {

using symbol_t = std::uint8_t;

// sorts before every other byte; occurs once, at the end of a text
inline constexpr symbol_t kTerminator = 0;

/*
 * A byte string ending with a unique terminator.
 */
class Text {
public:
    Text() = default;

    // appends the terminator; rejects interior zero bytes. A trailing zero
    // byte is accepted as the terminator.
    static Text from_bytes(std::span<const symbol_t> bytes);
    static Text from_string(std::string_view s);

    // requires the terminator to be present already
    static Text from_terminated(std::vector<symbol_t> bytes);

    std::span<const symbol_t> bytes() const { return bytes_; }
    std::uint64_t size() const { return bytes_.size(); }
    symbol_t operator[](std::uint64_t i) const { return bytes_[i]; }

private:
    explicit Text(std::vector<symbol_t> bytes) : bytes_(std::move(bytes)) {}

    std::vector<symbol_t> bytes_;
};

// throws InvalidText when the terminator is missing, duplicated or misplaced
void validate_terminated(std::span<const symbol_t> bytes);

struct Alphabet {
    std::vector<symbol_t> symbols;          // distinct symbols present, ascending
    std::array<std::uint64_t, 256> counts{};
    std::array<std::uint64_t, 256> c_array{}; // occurrences of strictly smaller symbols

    static Alphabet of(std::span<const symbol_t> s);

    bool contains(symbol_t c) const { return counts[c] != 0; }
    std::size_t size() const { return symbols.size(); }

    // number of symbols other than the terminator
    std::size_t effective_size() const { return symbols.size() - (contains(kTerminator) ? 1 : 0); }
};

std::vector<symbol_t> read_file(const std::filesystem::path& path);

// concatenates all records, dropping '>' header lines and line breaks
std::vector<symbol_t> parse_fasta(std::span<const symbol_t> raw);

} // namespace lfmove
