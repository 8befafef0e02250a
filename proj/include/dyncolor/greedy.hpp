#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dyncolor/graph.hpp"
#include "dyncolor/randomness.hpp"
#include "dyncolor/types.hpp"

namespace dyncolor {

// Dynamic (2+slack)·Δ(H) edge colorer for the failed-edge graph H.
// Invariant kept after every operation: the coloring is proper and every
// edge e=(u,v) holds a color in [ceil((2+slack)·max{deg(u),deg(v)})].
// Insertions rejection-sample a free color (expected <= 3/slack tries);
// deletions recolor the at most six incident edges whose colors fell out
// of the shrunken per-endpoint range.
class GreedyState {
public:
    GreedyState(NodeId n, double slack, std::uint64_t seed,
                std::uint32_t degree_bound = 0);

    // Colors e and returns the recolored edges (always exactly {e}).
    std::vector<Edge> insert(Edge e);

    // Removes e; returns the neighbors that had to be recolored (<= 6).
    std::vector<Edge> erase(Edge e);

    Color color_of(Edge e) const;
    bool contains(Edge e) const { return chi_.count(e) != 0; }

    const DynGraph& graph() const { return h_; }
    double slack() const { return slack_; }

    // Total colors sampled and free-color searches completed, for the
    // expected-3/slack acceptance metric.
    std::uint64_t samples() const { return samples_; }
    std::uint64_t colorings() const { return colorings_; }
    // Times the rejection cap was hit and a deterministic scan took over.
    std::uint64_t fallbacks() const { return fallbacks_; }

private:
    static std::uint64_t slot(NodeId u, Color c) {
        return (static_cast<std::uint64_t>(u) << 32) | c;
    }
    std::uint32_t palette_size(Edge e) const;
    bool is_free(Edge e, Color c) const;
    Color sample_free_color(Edge e);
    void assign(Edge e, Color c);
    void unassign(Edge e);

    DynGraph h_;
    double slack_;
    CounterRng rng_;
    std::unordered_map<Edge, Color, EdgeHash> chi_;
    std::unordered_map<std::uint64_t, Edge> psi_;  // (node, color) -> edge
    std::uint64_t samples_ = 0;
    std::uint64_t colorings_ = 0;
    std::uint64_t fallbacks_ = 0;
    std::uint64_t attempt_cap_;
};

}  // namespace dyncolor
