#include "dyncolor/params.hpp"

#include <cmath>
#include <string>

#include "dyncolor/errors.hpp"

namespace dyncolor {

Params derive_params(double epsilon, std::uint32_t delta_cap,
                     double greedy_slack) {
    if (!(epsilon > 0.0) || epsilon > 0.5)
        throw InvalidEpsilonError("epsilon must lie in (0, 1/2], got " +
                                  std::to_string(epsilon));
    if (delta_cap < 1)
        throw InvalidArgsError("delta_cap must be >= 1");
    if (!(greedy_slack > 0.0) || greedy_slack > 1.0)
        throw InvalidArgsError("greedy_slack must lie in (0, 1]");

    Params p;
    p.epsilon = epsilon;
    p.delta_cap = delta_cap;
    p.greedy_slack = greedy_slack;
    p.epsilon_out_of_theory_range = epsilon > 0.1;

    const double log_inv = std::log(1.0 / epsilon);
    p.rounds = static_cast<std::uint32_t>(std::floor(log_inv / epsilon));
    p.seq_length = static_cast<std::uint32_t>(
        std::ceil(8.0 * log_inv / (epsilon * epsilon)));
    p.gamma = 1.0 / (30.0 * p.rounds);

    const double dp_raw = std::pow(static_cast<double>(delta_cap), p.gamma);
    // pow can land one ulp above an exact power; don't let ceil jump a bin
    const double dp_snapped =
        std::abs(dp_raw - std::round(dp_raw)) < 1e-9 ? std::round(dp_raw)
                                                     : dp_raw;
    p.delta_prime = static_cast<std::uint32_t>(std::ceil(dp_snapped));
    if (delta_cap >= 2 && p.delta_prime < 2) p.delta_prime = 2;
    if (p.delta_prime > delta_cap) p.delta_prime = delta_cap;

    p.subgraph_count = (delta_cap + p.delta_prime - 1) / p.delta_prime;
    p.sub_palette_size = static_cast<std::uint32_t>(
        std::ceil((1.0 + epsilon) * (1.0 + epsilon) * dp_raw));

    return p;
}

}  // namespace dyncolor
