#include "lfmove/text.hpp"

#include "lfmove/error.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

namespace lfmove {

void validate_terminated(std::span<const symbol_t> bytes)
{
    if (bytes.empty())
        throw InvalidText("empty text");
    if (bytes.back() != kTerminator)
        throw InvalidText("text does not end with the terminator");
    auto first = std::find(bytes.begin(), bytes.end(), kTerminator);
    if (first != bytes.end() - 1)
        throw InvalidText("terminator occurs before the end of the text at offset " +
                          std::to_string(first - bytes.begin()));
}

Text Text::from_bytes(std::span<const symbol_t> bytes)
{
    std::vector<symbol_t> v(bytes.begin(), bytes.end());
    if (v.empty() || v.back() != kTerminator)
        v.push_back(kTerminator);
    validate_terminated(v);
    return Text(std::move(v));
}

Text Text::from_string(std::string_view s)
{
    auto p = reinterpret_cast<const symbol_t*>(s.data());
    return from_bytes({p, s.size()});
}

Text Text::from_terminated(std::vector<symbol_t> bytes)
{
    validate_terminated(bytes);
    return Text(std::move(bytes));
}

Alphabet Alphabet::of(std::span<const symbol_t> s)
{
    Alphabet a;
    for (symbol_t c : s)
        a.counts[c]++;
    std::uint64_t acc = 0;
    for (int c = 0; c < 256; ++c) {
        a.c_array[c] = acc;
        acc += a.counts[c];
        if (a.counts[c] != 0)
            a.symbols.push_back(static_cast<symbol_t>(c));
    }
    return a;
}

std::vector<symbol_t> read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::vector<symbol_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad())
        throw Error("read failed: " + path.string());
    return data;
}

std::vector<symbol_t> parse_fasta(std::span<const symbol_t> raw)
{
    std::vector<symbol_t> out;
    out.reserve(raw.size());
    bool header = false;
    bool line_start = true;
    for (symbol_t c : raw) {
        if (line_start && c == '>')
            header = true;
        if (c == '\n') {
            header = false;
            line_start = true;
            continue;
        }
        line_start = false;
        if (header || c == '\r')
            continue;
        out.push_back(c);
    }
    return out;
}

} // namespace lfmove
