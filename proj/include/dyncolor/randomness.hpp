#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dyncolor/params.hpp"
#include "dyncolor/types.hpp"

namespace dyncolor {

// splitmix64 finalizer; the building block of every generator here.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Unbiased uniform draw in [0, n) from one 64-bit word (multiply-shift).
inline std::uint64_t bounded(std::uint64_t word, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<__uint128_t>(word) * n) >> 64);
}

inline double unit_double(std::uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

// Small sequential counter generator for consumers that just need a
// reproducible stream (greedy colorer, stream generators).
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : state_(seed), counter_(0) {}

    std::uint64_t next() { return mix64(state_ + 0x9E3779B97F4A7C15ull * ++counter_); }
    double next_double() { return unit_double(next()); }
    // uniform in [lo, hi] inclusive
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return lo + bounded(next(), hi - lo + 1);
    }

private:
    std::uint64_t state_;
    std::uint64_t counter_;
};

// Everything the algorithm pre-fixes for one potential edge.
struct EdgeRandomness {
    std::uint32_t subgraph;      // 0-based partition index, < eta
    Round round;                 // in [1, T+1]
    std::vector<Color> colors;   // K entries, each in [1, sub_palette_size]
};

// Deterministic per-edge randomness, derived by keyed hashing of
// (seed, u, v, incarnation). Nothing is precomputed: each draw is a pure
// function of those inputs, so "fixing the randomness in advance" costs
// no preprocessing, and bumping an edge's incarnation after deletion
// yields a statistically fresh draw on reinsertion.
class EdgeRng {
public:
    EdgeRng(std::uint64_t seed, const Params& params)
        : seed_(seed), params_(params) {}

    // Round in [1, T+1]: Pr[i] = (1-eps)^(i-1) * eps for i <= T,
    // Pr[T+1] = (1-eps)^T.
    Round sample_round(Edge e) const;

    // K colors, each uniform in [1, sub_palette_size].
    std::vector<Color> sample_color_sequence(Edge e) const;

    // Uniform 0-based subgraph index in [0, eta).
    std::uint32_t sample_partition_index(Edge e) const;

    EdgeRandomness edge_randomness(Edge e) const;

    // Invalidate e's current draws; the next samples behave like a fresh
    // potential edge. Called when e leaves the graph.
    void fresh_incarnation(Edge e);

    std::uint64_t incarnation_of(Edge e) const;
    std::uint64_t seed() const { return seed_; }
    const Params& params() const { return params_; }

private:
    std::uint64_t stream_word(Edge e, std::uint64_t tag,
                              std::uint64_t k) const;

    std::uint64_t seed_;
    Params params_;
    std::unordered_map<Edge, std::uint64_t, EdgeHash> incarnations_;
};

}  // namespace dyncolor
