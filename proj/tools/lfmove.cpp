#include "lfmove/error.hpp"
#include "lfmove/index.hpp"
#include "lfmove/io.hpp"
#include "lfmove/kernels.hpp"
#include "lfmove/predecessor_lf.hpp"
#include "lfmove/suffix_array.hpp"
#include "lfmove/workload.hpp"

#include "CLI11.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

using namespace lfmove;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::vector<symbol_t> read_input(const std::string& path)
{
    if (path == "-") {
        std::vector<symbol_t> data((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return data;
    }
    return read_file(path);
}

// newline-delimited raw patterns; the final newline does not start a pattern
std::vector<std::vector<symbol_t>> read_patterns(const std::string& path)
{
    auto raw = read_input(path);
    std::vector<std::vector<symbol_t>> out;
    std::vector<symbol_t> cur;
    std::uint64_t line = 1;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] != '\n') {
            cur.push_back(raw[i]);
            continue;
        }
        if (cur.empty())
            throw Error(path + ":" + std::to_string(line) + ": empty pattern");
        out.push_back(std::move(cur));
        cur.clear();
        ++line;
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

struct BuildFlags {
    std::string input = "-";
    std::string output;
    bool fasta = false;
    std::optional<std::string> split_factor;
    std::optional<std::uint64_t> balance;
    std::string backend = "blocked";
    std::string encoding = "bv";
    std::uint64_t block_size = BlockedOptions{}.block_size;
    std::uint64_t dac_rate = BlockedOptions{}.dac_rate;
    std::uint64_t interp_rate = BlockedOptions{}.interp_rate;

    BuildOptions options() const
    {
        BuildOptions o;
        o.backend = parse_backend(backend);
        if (split_factor)
            o.split = SplitConfig::max_length(Rational::parse(*split_factor));
        else if (balance)
            o.split = SplitConfig::balanced(*balance);
        o.blocked.encoding = parse_dest_encoding(encoding);
        o.blocked.block_size = block_size;
        o.blocked.dac_rate = dac_rate;
        o.blocked.interp_rate = interp_rate;
        return o;
    }
};

void add_build_flags(CLI::App* cmd, BuildFlags& f)
{
    auto* factor = cmd->add_option("--split-factor", f.split_factor,
                                   "cut runs longer than ceil(F*n/r); F like 2, 2.5 or 5/2");
    auto* bal = cmd->add_option("--balance", f.balance, "balance rows so LF scans fewer than 2D rows (D >= 2)")
                    ->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
    factor->excludes(bal);
    cmd->add_option("--backend", f.backend, "table or blocked")
        ->check(CLI::IsMember({"table", "blocked"}))
        ->capture_default_str();
    cmd->add_option("--dest-encoding", f.encoding, "destination lists: bv, dac or interp")
        ->check(CLI::IsMember({"bv", "dac", "interp"}))
        ->capture_default_str();
    cmd->add_option("--block-size", f.block_size, "rows per block")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--dac-rate", f.dac_rate, "DAC sample rate")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--interp-rate", f.interp_rate, "interpolation sample rate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

int cmd_build(const BuildFlags& f)
{
    auto raw = read_input(f.input);
    if (f.fasta)
        raw = parse_fasta(raw);
    Text text = Text::from_bytes(raw);
    auto options = f.options();

    auto t0 = Clock::now();
    auto bwt = build_bwt(text);
    Index idx = Index::build_from_bwt(bwt, options);
    double secs = seconds_since(t0);
    std::uint64_t bytes = save(idx, std::filesystem::path(f.output));

    std::uint64_t n = idx.size(), r = idx.maximal_runs();
    std::cout << "n=" << n << "\n"
              << "r=" << r << "\n"
              << "n/r=" << fixed(static_cast<double>(n) / static_cast<double>(r), 2) << "\n"
              << "rows=" << idx.num_rows() << "\n"
              << "bytes=" << bytes << "\n";
    std::cerr << "built " << to_string(idx.backend()) << " index in " << fixed(secs, 2) << " s\n";
    return 0;
}

int cmd_count(const std::string& index_path, const std::string& patterns_path, int threads)
{
    Index idx = load(std::filesystem::path(index_path));
    auto patterns = read_patterns(patterns_path);
    if (threads > 0)
        omp_set_num_threads(threads);
    auto counts = kernels::count_batch(idx, patterns);
    std::string out;
    for (auto c : counts) {
        out += std::to_string(c);
        out += '\n';
    }
    std::cout << out;
    return 0;
}

int cmd_invert(const std::string& index_path, const std::string& output)
{
    Index idx = load(std::filesystem::path(index_path));
    auto text = idx.invert();
    text.pop_back(); // terminator
    auto data = reinterpret_cast<const char*>(text.data());
    if (output == "-") {
        std::cout.write(data, static_cast<std::streamsize>(text.size()));
        std::cout.flush();
        if (!std::cout)
            throw Error("write to standard output failed");
        return 0;
    }
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot open " + output + " for writing");
    out.write(data, static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out)
        throw Error("write failed: " + output);
    return 0;
}

void write_histogram(const ScanHistogram& h, std::ostream& out)
{
    out << "scan_length,frequency,percent\n";
    for (auto [len, f] : h.counts)
        out << len << "," << f << "," << fixed(100.0 * static_cast<double>(f) / static_cast<double>(h.total_steps), 4)
            << "\n";
}

int cmd_stats(const std::string& index_path, const std::string& patterns_path)
{
    Index idx = load(std::filesystem::path(index_path));
    ScanHistogram h;
    if (patterns_path.empty())
        h = idx.visit([](const auto& t) { return kernels::scan_all(t); });
    else
        h = kernels::profile_scans(idx, read_patterns(patterns_path));
    write_histogram(h, std::cout);
    return 0;
}

struct BenchFlags {
    std::string input;
    bool fasta = false;
    std::uint64_t base_length = 1 << 16;
    unsigned sigma = 4;
    unsigned copies = 16;
    double mutation = 0.001;
    std::uint64_t seed = 1;
    std::uint64_t queries = 10000;
    std::uint64_t max_pattern = 32;
    std::uint64_t lf_steps = 1 << 22;
    std::uint64_t block_size = BlockedOptions{}.block_size;
};

// mean ns per step of a dependent chain of LF steps
template <class Table>
double lf_chain_ns(const Table& t, std::uint64_t steps)
{
    Position p{0, 0};
    auto t0 = Clock::now();
    for (std::uint64_t i = 0; i < steps; ++i)
        p = t.lf_step(p);
    double secs = seconds_since(t0);
    volatile std::uint64_t sink = p.run;
    (void)sink;
    return secs * 1e9 / static_cast<double>(steps);
}

int cmd_bench(const BenchFlags& f)
{
    std::vector<symbol_t> body;
    std::string source;
    if (!f.input.empty()) {
        body = read_input(f.input);
        if (f.fasta)
            body = parse_fasta(body);
        source = f.input;
    } else {
        std::mt19937_64 rng(f.seed);
        auto base = workload::random_text(f.base_length, f.sigma, rng);
        body = workload::mutated_copies(base, f.copies, f.mutation, rng);
        source = "generated";
    }
    Text text = Text::from_bytes(body);
    std::mt19937_64 rng(f.seed + 1);
    auto patterns = workload::random_patterns(text.bytes(), f.queries, f.max_pattern, rng);

    auto t0 = Clock::now();
    auto bwt = build_bwt(text);
    double bwt_secs = seconds_since(t0);
    auto rl = runs_from_bwt(bwt);
    std::cerr << "source=" << source << " n=" << text.size() << " r=" << rl.runs() << " bwt_seconds=" << fixed(bwt_secs, 3)
              << "\n";
    const std::uint64_t steps = std::min(f.lf_steps, std::max<std::uint64_t>(text.size(), 1));

    std::cout << "structure,encoding,split,rows,build_seconds,index_bytes,ns_per_lf,ns_per_count,"
                 "ns_per_count_parallel,threads\n";
    auto row = [&](const std::string& name, const std::string& enc, const std::string& split, std::uint64_t rows,
                   double build, std::uint64_t bytes, double lf_ns, std::string count_ns, std::string par_ns) {
        std::cout << name << "," << enc << "," << split << "," << rows << "," << fixed(build, 4) << "," << bytes << ","
                  << fixed(lf_ns, 2) << "," << count_ns << "," << par_ns << "," << omp_get_max_threads() << "\n";
    };

    {
        auto t1 = Clock::now();
        PredecessorLf pred(rl);
        double build = seconds_since(t1);
        std::uint64_t i = 0;
        auto t2 = Clock::now();
        for (std::uint64_t s = 0; s < steps; ++s)
            i = pred(i);
        double lf_ns = seconds_since(t2) * 1e9 / static_cast<double>(steps);
        volatile std::uint64_t sink = i;
        (void)sink;
        row("predecessor", "-", "none", rl.runs(), build + bwt_secs, pred.size_in_bytes(), lf_ns, "", "");
    }

    std::vector<std::pair<std::string, SplitConfig>> splits{
        {"none", SplitConfig::none()}, {"maxlen2", SplitConfig::max_length({2, 1})}, {"balance2", SplitConfig::balanced(2)}};
    for (const auto& [sname, split] : splits) {
        std::vector<std::pair<Backend, DestEncoding>> variants{{Backend::table, DestEncoding::bitvector},
                                                               {Backend::blocked, DestEncoding::bitvector},
                                                               {Backend::blocked, DestEncoding::dac_sampled},
                                                               {Backend::blocked, DestEncoding::interpolated}};
        for (auto [backend, enc] : variants) {
            BuildOptions o;
            o.backend = backend;
            o.split = split;
            o.blocked.encoding = enc;
            o.blocked.block_size = f.block_size;
            auto t1 = Clock::now();
            Index idx = Index::build_from_bwt(bwt, o);
            double build = seconds_since(t1);
            double lf_ns = idx.visit([&](const auto& t) { return lf_chain_ns(t, steps); });

            std::string count_ns, par_ns;
            if (!patterns.empty()) {
                auto t2 = Clock::now();
                auto serial = kernels::count_batch_serial(idx, patterns);
                count_ns = fixed(seconds_since(t2) * 1e9 / static_cast<double>(patterns.size()), 1);
                auto t3 = Clock::now();
                auto parallel = kernels::count_batch(idx, patterns);
                par_ns = fixed(seconds_since(t3) * 1e9 / static_cast<double>(patterns.size()), 1);
                if (serial != parallel)
                    throw Error("parallel and serial counts disagree");
            }
            row(backend == Backend::table ? "move_table" : "blocked",
                backend == Backend::table ? "-" : std::string(to_string(enc)), sname, idx.num_rows(), build + bwt_secs,
                idx.size_in_bytes(), lf_ns, count_ns, par_ns);
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Move-table index over the run-length BWT: build, count, invert, stats, bench"};
    app.require_subcommand(1);
    app.failure_message([](const CLI::App*, const CLI::Error& e) { return "lfmove: " + std::string(e.what()) + "\n"; });

    BuildFlags bf;
    auto* build = app.add_subcommand("build", "index a text file; prints n, r, n/r, rows and bytes written");
    build->add_option("-i,--input", bf.input, "text file, or - for standard input")->capture_default_str();
    build->add_option("-o,--output", bf.output, "index file to write")->required();
    build->add_flag("--fasta", bf.fasta, "strip '>' header lines and line breaks first");
    add_build_flags(build, bf);

    std::string index_path, patterns_path = "-", output = "-";
    int threads = 0;
    auto* count = app.add_subcommand("count", "one occurrence count per pattern line");
    count->add_option("-x,--index", index_path, "index file")->required();
    count->add_option("-p,--patterns", patterns_path, "newline-delimited patterns, or - for standard input")
        ->capture_default_str();
    count->add_option("-t,--threads", threads, "OpenMP threads (default: runtime setting)")
        ->check(CLI::NonNegativeNumber);

    auto* invert = app.add_subcommand("invert", "reconstruct the indexed text");
    invert->add_option("-x,--index", index_path, "index file")->required();
    invert->add_option("-o,--output", output, "output file, or - for standard output")->capture_default_str();

    std::string stats_patterns;
    auto* stats = app.add_subcommand("stats", "scan-length histogram as CSV (scan_length,frequency,percent)");
    stats->add_option("-x,--index", index_path, "index file")->required();
    stats->add_option("-p,--patterns", stats_patterns,
                      "profile count queries over these patterns; default: LF from every position");

    BenchFlags bench_flags;
    auto* bench = app.add_subcommand("bench", "CSV of build time, bytes, ns per LF step and per count query");
    bench->add_option("-i,--input", bench_flags.input, "benchmark on this text instead of generating one");
    bench->add_flag("--fasta", bench_flags.fasta, "input is FASTA");
    bench->add_option("--base-length", bench_flags.base_length, "length of the generated base text")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--sigma", bench_flags.sigma, "alphabet size of the base text")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
    bench->add_option("--copies", bench_flags.copies, "copies N")->check(CLI::PositiveNumber)->capture_default_str();
    bench->add_option("--mutation", bench_flags.mutation, "per-symbol mutation rate")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    bench->add_option("--seed", bench_flags.seed, "generator seed")->capture_default_str();
    bench->add_option("--queries", bench_flags.queries, "count queries")->capture_default_str();
    bench->add_option("--max-pattern", bench_flags.max_pattern, "longest query pattern")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--lf-steps", bench_flags.lf_steps, "chained LF steps per structure")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--block-size", bench_flags.block_size, "rows per block")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("-t,--threads", threads, "OpenMP threads for the parallel count column")
        ->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build)
            return cmd_build(bf);
        if (*count)
            return cmd_count(index_path, patterns_path, threads);
        if (*invert)
            return cmd_invert(index_path, output);
        if (*stats)
            return cmd_stats(index_path, stats_patterns);
        if (threads > 0)
            omp_set_num_threads(threads);
        return cmd_bench(bench_flags);
    } catch (const std::exception& e) {
        std::cerr << "lfmove: " << e.what() << "\n";
        return 1;
    }
}
