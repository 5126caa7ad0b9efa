#pragma once

#include "lfmove/text.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace lfmove {

/*
 * Run-length BWT: run_chars[k] is the symbol of run k, run_heads[k] its
 * first BWT position. Run k spans [run_heads[k], run_heads[k+1]) with
 * run_heads[r] = n.
 */
struct RunLengthBWT {
    std::vector<symbol_t> run_chars;
    std::vector<std::uint64_t> run_heads;
    std::uint64_t n = 0;

    std::uint64_t runs() const { return run_heads.size(); }

    std::uint64_t run_end(std::uint64_t k) const { return k + 1 < runs() ? run_heads[k + 1] : n; }
    std::uint64_t run_length(std::uint64_t k) const { return run_end(k) - run_heads[k]; }

    // index of the run containing BWT position i
    std::uint64_t run_of(std::uint64_t i) const;

    std::vector<symbol_t> expand() const;
};

// maximal unary decomposition; bwt must be nonempty
RunLengthBWT runs_from_bwt(std::span<const symbol_t> bwt);

/*
 * LF and its inverse evaluated on the run-length BWT in O(log r), used at
 * construction time. Works for any byte string read as a BWT: LF is then
 * the stable sort permutation, whether or not the string has a terminator.
 */
class RunLf {
public:
    explicit RunLf(const RunLengthBWT& rl);

    std::uint64_t size() const { return n_; }

    std::uint64_t operator()(std::uint64_t i) const;

    std::uint64_t inverse(std::uint64_t p) const;

    // LF(i) given that i lies in maximal run k
    std::uint64_t at_run(std::uint64_t k, std::uint64_t i) const
    {
        return c_[chars_[k]] + before_[k] + (i - heads_[k]);
    }

    std::uint64_t run_of(std::uint64_t i) const;

private:
    std::uint64_t n_ = 0;
    std::vector<symbol_t> chars_;
    std::vector<std::uint64_t> heads_;
    std::vector<std::uint64_t> before_; // occurrences of chars_[k] in runs [0, k)
    std::array<std::uint64_t, 257> c_{};
    std::array<std::vector<std::uint64_t>, 256> runs_of_sym_;
};

} // namespace lfmove
