#include "lfmove/io.hpp"

#include "lfmove/error.hpp"

#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

namespace lfmove {

namespace {

constexpr char kMagic[4] = {'M', 'V', 'T', 'B'};

class Writer {
public:
    template <class T>
    void put(T v)
    {
        static_assert(std::is_unsigned_v<T>);
        for (std::size_t i = 0; i < sizeof(T); ++i)
            buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }

    void raw(std::span<const std::uint8_t> b) { buf_.insert(buf_.end(), b.begin(), b.end()); }

    void u64s(std::span<const std::uint64_t> v)
    {
        put<std::uint64_t>(v.size());
        for (auto x : v)
            put(x);
    }

    void bits(const BitVector& bv)
    {
        put<std::uint64_t>(bv.size());
        for (auto w : bv.words())
            put(w);
    }

    void dac(const DacList& d)
    {
        put<std::uint64_t>(d.levels().size());
        for (const auto& level : d.levels()) {
            put<std::uint64_t>(level.chunks.size());
            raw(level.chunks);
            bits(level.more);
        }
    }

    void section(const Writer& w)
    {
        put<std::uint64_t>(w.buf_.size());
        raw(w.buf_);
    }

    std::vector<std::uint8_t> take() && { return std::move(buf_); }

private:
    std::vector<std::uint8_t> buf_;
};

class Reader {
public:
    Reader(std::span<const std::uint8_t> b, std::string what) : buf_(b), what_(std::move(what)) {}

    template <class T>
    T get()
    {
        need(sizeof(T));
        T v = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i)
            v |= static_cast<T>(static_cast<T>(buf_[pos_ + i]) << (8 * i));
        pos_ += sizeof(T);
        return v;
    }

    std::span<const std::uint8_t> raw(std::uint64_t len)
    {
        need(len);
        auto s = buf_.subspan(pos_, len);
        pos_ += len;
        return s;
    }

    std::vector<std::uint64_t> u64s()
    {
        std::uint64_t len = get<std::uint64_t>();
        need_items(len, 8);
        std::vector<std::uint64_t> v(len);
        for (auto& x : v)
            x = get<std::uint64_t>();
        return v;
    }

    BitVector bits()
    {
        std::uint64_t len = get<std::uint64_t>();
        std::uint64_t words = len / 64 + (len % 64 != 0);
        need_items(words, 8);
        std::vector<std::uint64_t> w(words);
        for (auto& x : w)
            x = get<std::uint64_t>();
        return BitVector(len, std::move(w));
    }

    DacList dac()
    {
        std::uint64_t levels = get<std::uint64_t>();
        need_items(levels, 16);
        std::vector<DacList::Level> out(levels);
        for (auto& level : out) {
            auto chunks = raw(get<std::uint64_t>());
            level.chunks.assign(chunks.begin(), chunks.end());
            level.more = bits();
        }
        return DacList::from_levels(std::move(out));
    }

    Reader section(std::string what)
    {
        std::uint64_t len = get<std::uint64_t>();
        if (len > buf_.size() - pos_)
            throw TruncatedSection(what + ": section declares " + std::to_string(len) + " bytes but only " +
                                   std::to_string(buf_.size() - pos_) + " remain");
        return Reader(raw(len), std::move(what));
    }

    void finish() const
    {
        if (pos_ != buf_.size())
            throw FormatError(what_ + ": " + std::to_string(buf_.size() - pos_) + " unexpected trailing bytes");
    }

private:
    void need(std::uint64_t len) const
    {
        if (len > buf_.size() - pos_)
            throw TruncatedSection(what_ + ": truncated at byte " + std::to_string(pos_));
    }

    void need_items(std::uint64_t count, std::uint64_t item_bytes) const
    {
        if (count > (buf_.size() - pos_) / item_bytes)
            throw TruncatedSection(what_ + ": truncated at byte " + std::to_string(pos_));
    }

    std::span<const std::uint8_t> buf_;
    std::uint64_t pos_ = 0;
    std::string what_;
};

void write_dest(Writer& w, const DestList& list)
{
    w.put<std::uint8_t>(static_cast<std::uint8_t>(list.index()));
    if (const auto* bv = std::get_if<BvList>(&list)) {
        w.put(bv->base());
        w.bits(bv->bits());
    } else if (const auto* dac = std::get_if<DacSampledList>(&list)) {
        w.put(dac->rate());
        w.u64s(dac->samples());
        w.dac(dac->diffs());
    } else {
        const auto& ip = std::get<InterpList>(list);
        w.put(ip.rate());
        w.put(ip.size());
        w.u64s(ip.samples());
        w.dac(ip.magnitudes());
        w.bits(ip.negative());
    }
}

DestList read_dest(Reader& r)
{
    switch (r.get<std::uint8_t>()) {
    case 0: {
        auto base = r.get<std::uint64_t>();
        return BvList(base, r.bits());
    }
    case 1: {
        auto rate = r.get<std::uint64_t>();
        auto samples = r.u64s();
        return DacSampledList(rate, std::move(samples), r.dac());
    }
    case 2: {
        auto rate = r.get<std::uint64_t>();
        auto size = r.get<std::uint64_t>();
        auto samples = r.u64s();
        auto mags = r.dac();
        return InterpList(rate, size, std::move(samples), std::move(mags), r.bits());
    }
    default:
        throw FormatError("unknown destination encoding tag");
    }
}

void write_table(Writer& out, const MoveTable& t)
{
    Writer rows;
    rows.put<std::uint64_t>(t.num_rows());
    for (const MoveRow& r : t.rows()) {
        rows.put(r.length);
        rows.put(r.dest_run);
        rows.put(r.dest_offset);
        rows.put(r.symbol);
    }
    Writer heads;
    heads.u64s(t.run_heads());
    out.put<std::uint32_t>(2);
    out.section(rows);
    out.section(heads);
}

MoveTable read_table(Reader& in, std::uint64_t n)
{
    if (in.get<std::uint32_t>() != 2)
        throw FormatError("table backend expects 2 sections");
    Reader rs = in.section("rows");
    std::uint64_t count = rs.get<std::uint64_t>();
    if (count > n)
        throw FormatError("row count exceeds text length");
    std::vector<MoveRow> rows(count);
    for (auto& r : rows) {
        r.length = rs.get<std::uint64_t>();
        r.dest_run = rs.get<std::uint64_t>();
        r.dest_offset = rs.get<std::uint64_t>();
        r.symbol = rs.get<std::uint8_t>();
    }
    rs.finish();
    Reader hs = in.section("run heads");
    auto heads = hs.u64s();
    hs.finish();

    if (heads.size() != count || count == 0 || heads[0] != 0)
        throw FormatError("run heads do not match rows");
    for (std::uint64_t k = 0; k < count; ++k) {
        std::uint64_t end = k + 1 < count ? heads[k + 1] : n;
        if (end <= heads[k] || end > n || rows[k].length != end - heads[k] || rows[k].dest_run >= count)
            throw FormatError("row " + std::to_string(k) + " is inconsistent with the run heads");
    }
    for (std::uint64_t k = 0; k < count; ++k) {
        const MoveRow& r = rows[k];
        if (r.dest_offset >= rows[r.dest_run].length || heads[r.dest_run] + r.dest_offset > n - r.length)
            throw FormatError("row " + std::to_string(k) + " destination out of range");
    }
    return MoveTable::from_parts(n, std::move(rows), std::move(heads));
}

void write_blocked(Writer& out, const BlockedTable& t)
{
    const BlockedOptions& o = t.options();
    Writer layout;
    layout.put<std::uint8_t>(static_cast<std::uint8_t>(o.encoding));
    layout.put(o.block_size);
    layout.put(o.dac_rate);
    layout.put(o.interp_rate);
    layout.put(o.head_sample_rate);
    layout.put(t.num_rows());
    layout.put<std::uint16_t>(static_cast<std::uint16_t>(t.symbols().size()));
    layout.raw(t.symbols());

    Writer samples;
    samples.u64s(t.head_samples());

    out.put<std::uint32_t>(static_cast<std::uint32_t>(2 + t.num_blocks()));
    out.section(layout);
    out.section(samples);
    for (const Block& b : t.blocks()) {
        Writer w;
        for (std::size_t c = 0; c < t.symbols().size(); ++c) {
            w.bits(b.char_bits[c]);
            w.put(b.rank_before[c]);
            w.put(b.prev_row[c]);
            w.put(b.next_row[c]);
            write_dest(w, b.dests[c]);
        }
        w.dac(b.lengths);
        w.dac(b.offsets);
        out.section(w);
    }
}

BlockedTable read_blocked(Reader& in, std::uint64_t n)
{
    std::uint32_t sections = in.get<std::uint32_t>();
    if (sections < 2)
        throw FormatError("blocked backend expects at least 2 sections");
    Reader lr = in.section("layout");
    BlockedOptions o;
    auto enc = lr.get<std::uint8_t>();
    if (enc > 2)
        throw FormatError("unknown destination encoding " + std::to_string(enc));
    o.encoding = static_cast<DestEncoding>(enc);
    o.block_size = lr.get<std::uint64_t>();
    o.dac_rate = lr.get<std::uint64_t>();
    o.interp_rate = lr.get<std::uint64_t>();
    o.head_sample_rate = lr.get<std::uint64_t>();
    std::uint64_t rows = lr.get<std::uint64_t>();
    auto sigma = lr.get<std::uint16_t>();
    auto sym = lr.raw(sigma);
    std::vector<symbol_t> symbols(sym.begin(), sym.end());
    lr.finish();
    if (o.block_size == 0 || rows == 0 || rows > n)
        throw FormatError("invalid blocked layout");
    if (sections != 2 + (rows + o.block_size - 1) / o.block_size)
        throw FormatError("section count does not match block count");

    Reader sr = in.section("head samples");
    auto head_samples = sr.u64s();
    sr.finish();

    std::vector<Block> blocks(sections - 2);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        Reader br = in.section("block " + std::to_string(b));
        Block& blk = blocks[b];
        for (std::size_t c = 0; c < symbols.size(); ++c) {
            blk.char_bits.push_back(br.bits());
            blk.rank_before.push_back(br.get<std::uint64_t>());
            blk.prev_row.push_back(br.get<std::uint64_t>());
            blk.next_row.push_back(br.get<std::uint64_t>());
            blk.dests.push_back(read_dest(br));
        }
        blk.lengths = br.dac();
        blk.offsets = br.dac();
        br.finish();
    }
    return BlockedTable::from_parts(n, rows, o, std::move(symbols), std::move(blocks), std::move(head_samples));
}

} // namespace

std::vector<std::uint8_t> serialize(const Index& index)
{
    Writer w;
    w.raw({reinterpret_cast<const std::uint8_t*>(kMagic), 4});
    w.put(kFormatVersion);
    w.put<std::uint8_t>(static_cast<std::uint8_t>(index.backend()));
    const SplitConfig& s = index.split();
    w.put<std::uint8_t>(static_cast<std::uint8_t>(s.mode));
    w.put(s.factor.num);
    w.put(s.factor.den);
    w.put(s.d);
    w.put(index.size());
    w.put(index.maximal_runs());
    const auto& counts = index.symbol_counts();
    std::uint16_t sigma = 0;
    for (auto c : counts)
        sigma += c != 0;
    w.put(sigma);
    for (int c = 0; c < 256; ++c) {
        if (counts[c] == 0)
            continue;
        w.put<std::uint8_t>(static_cast<std::uint8_t>(c));
        w.put(counts[c]);
    }
    if (const auto* t = std::get_if<MoveTable>(&index.storage()))
        write_table(w, *t);
    else
        write_blocked(w, std::get<BlockedTable>(index.storage()));
    return std::move(w).take();
}

Index deserialize(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw BadMagic("not an index file (bad magic)");
    Reader r(bytes.subspan(4), "header");
    auto version = r.get<std::uint32_t>();
    if (version != kFormatVersion)
        throw VersionMismatch("index format version " + std::to_string(version) + " is not supported (expected " +
                              std::to_string(kFormatVersion) + ")");

    try {
        auto backend = r.get<std::uint8_t>();
        if (backend > 1)
            throw FormatError("unknown backend tag " + std::to_string(backend));
        SplitConfig split;
        auto mode = r.get<std::uint8_t>();
        if (mode > 2)
            throw FormatError("unknown split mode " + std::to_string(mode));
        split.mode = static_cast<SplitConfig::Mode>(mode);
        split.factor.num = r.get<std::uint64_t>();
        split.factor.den = r.get<std::uint64_t>();
        split.d = r.get<std::uint64_t>();
        if ((split.mode == SplitConfig::Mode::balanced && split.d < 2) ||
            (split.mode == SplitConfig::Mode::max_length && (split.factor.num == 0 || split.factor.den == 0)))
            throw FormatError("invalid split parameters");
        std::uint64_t n = r.get<std::uint64_t>();
        std::uint64_t runs = r.get<std::uint64_t>();
        std::array<std::uint64_t, 256> counts{};
        auto sigma = r.get<std::uint16_t>();
        std::uint64_t total = 0;
        for (std::uint16_t i = 0; i < sigma; ++i) {
            auto c = r.get<std::uint8_t>();
            counts[c] = r.get<std::uint64_t>();
            total += counts[c];
        }
        if (n == 0 || total != n)
            throw FormatError("alphabet counts do not sum to the text length");

        Index::Storage storage;
        if (backend == 0)
            storage = read_table(r, n);
        else
            storage = read_blocked(r, n);
        r.finish();
        return Index(std::move(storage), split, runs, counts);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("malformed index payload: ") + e.what());
    }
}

std::uint64_t save(const Index& index, std::ostream& out)
{
    auto bytes = serialize(index);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw Error("write failed");
    return bytes.size();
}

std::uint64_t save(const Index& index, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot open " + path.string() + " for writing");
    try {
        auto written = save(index, out);
        out.close();
        if (!out)
            throw Error("close failed");
        return written;
    } catch (const Error& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

Index load(std::istream& in)
{
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize(bytes);
}

Index load(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    try {
        return load(in);
    } catch (const FormatError& e) {
        // keep the concrete type so callers can tell failures apart
        if (dynamic_cast<const BadMagic*>(&e))
            throw BadMagic(path.string() + ": " + e.what());
        if (dynamic_cast<const VersionMismatch*>(&e))
            throw VersionMismatch(path.string() + ": " + e.what());
        if (dynamic_cast<const TruncatedSection*>(&e))
            throw TruncatedSection(path.string() + ": " + e.what());
        throw FormatError(path.string() + ": " + e.what());
    }
}

} // namespace lfmove
