#pragma once

#include <cstdint>

namespace dyncolor {

// All derived quantities use the natural logarithm.
struct Params {
    double epsilon = 0.0;          // accuracy parameter, (0, 1/2]
    std::uint32_t delta_cap = 0;   // promised max degree of the input graph
    double greedy_slack = 1.0;     // slack of the fallback greedy colorer

    std::uint32_t rounds = 0;           // T = floor((1/eps) ln(1/eps))
    std::uint32_t seq_length = 0;       // K = ceil((8/eps^2) ln(1/eps))
    double gamma = 0.0;                 // 1 / (30 T)
    std::uint32_t delta_prime = 0;      // ceil(delta_cap^gamma), min 2 when delta_cap >= 2
    std::uint32_t subgraph_count = 0;   // eta = ceil(delta_cap / delta_prime)
    std::uint32_t sub_palette_size = 0; // ceil((1+eps)^2 * delta_cap^gamma)

    // Set when epsilon lies outside (0, 1/10]; derived values are still
    // usable but the asymptotic guarantees no longer apply.
    bool epsilon_out_of_theory_range = false;

    // First global color of subgraph j's palette, 1-based, 0-based j.
    std::uint32_t palette_offset(std::uint32_t j) const {
        return j * sub_palette_size;
    }
    // Greedy fallback colors start after every subgraph palette.
    std::uint32_t greedy_color_offset() const {
        return subgraph_count * sub_palette_size;
    }
};

// Throws InvalidEpsilonError unless 0 < epsilon <= 1/2, and InvalidArgsError
// unless delta_cap >= 1 and 0 < greedy_slack <= 1.
Params derive_params(double epsilon, std::uint32_t delta_cap,
                     double greedy_slack = 1.0);

}  // namespace dyncolor
