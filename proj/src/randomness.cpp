#include "dyncolor/randomness.hpp"

#include <cmath>

namespace dyncolor {

namespace {
constexpr std::uint64_t kTagPartition = 0x70617274ull;  // "part"
constexpr std::uint64_t kTagRound = 0x726F756Eull;      // "roun"
constexpr std::uint64_t kTagColors = 0x636F6C73ull;     // "cols"
}  // namespace

std::uint64_t EdgeRng::stream_word(Edge e, std::uint64_t tag,
                                   std::uint64_t k) const {
    auto it = incarnations_.find(e);
    const std::uint64_t inc = it == incarnations_.end() ? 0 : it->second;
    std::uint64_t h = mix64(seed_);
    h = mix64(h ^ e.packed());
    h = mix64(h ^ inc);
    h = mix64(h ^ tag);
    return mix64(h + k * 0x9E3779B97F4A7C15ull);
}

Round EdgeRng::sample_round(Edge e) const {
    const double eps = params_.epsilon;
    const std::uint32_t T = params_.rounds;
    const double u = unit_double(stream_word(e, kTagRound, 0));
    // inverse CDF of the geometric: i = 1 + floor(ln(1-u)/ln(1-eps)),
    // capped at T+1
    const double raw = std::log1p(-u) / std::log1p(-eps);
    if (!(raw < static_cast<double>(T)))  // also catches inf/nan at u ~ 1
        return T + 1;
    return static_cast<Round>(1 + static_cast<std::uint32_t>(raw));
}

std::vector<Color> EdgeRng::sample_color_sequence(Edge e) const {
    std::vector<Color> seq(params_.seq_length);
    for (std::uint32_t k = 0; k < params_.seq_length; ++k)
        seq[k] = static_cast<Color>(
            1 + bounded(stream_word(e, kTagColors, k), params_.sub_palette_size));
    return seq;
}

std::uint32_t EdgeRng::sample_partition_index(Edge e) const {
    return static_cast<std::uint32_t>(
        bounded(stream_word(e, kTagPartition, 0), params_.subgraph_count));
}

EdgeRandomness EdgeRng::edge_randomness(Edge e) const {
    return EdgeRandomness{sample_partition_index(e), sample_round(e),
                          sample_color_sequence(e)};
}

void EdgeRng::fresh_incarnation(Edge e) { ++incarnations_[e]; }

std::uint64_t EdgeRng::incarnation_of(Edge e) const {
    auto it = incarnations_.find(e);
    return it == incarnations_.end() ? 0 : it->second;
}

}  // namespace dyncolor
