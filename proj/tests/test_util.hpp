#pragma once

#include <unordered_map>
#include <vector>

#include "dyncolor/graph.hpp"
#include "dyncolor/nibble.hpp"
#include "dyncolor/randomness.hpp"
#include "dyncolor/types.hpp"

namespace dyncolor::test {

// Random simple graph under a degree bound; anything not inserted after
// too many rejections is just skipped.
inline std::vector<Edge> random_edges(NodeId n, std::uint32_t delta,
                                      std::size_t target, CounterRng& rng) {
    DynGraph g(n, delta);
    std::vector<Edge> edges;
    std::size_t attempts = 0;
    while (edges.size() < target && attempts < 64 * target + 1024) {
        ++attempts;
        NodeId u = static_cast<NodeId>(rng.uniform(0, n - 1));
        NodeId v = static_cast<NodeId>(rng.uniform(0, n - 1));
        if (u == v) continue;
        Edge e(u, v);
        if (g.has_edge(e) || g.degree(u) >= delta || g.degree(v) >= delta)
            continue;
        g.insert_edge(e);
        edges.push_back(e);
    }
    return edges;
}

// Fixed (round, colors) per edge, for hand-built fixtures.
class FixtureDraws {
public:
    void set(Edge e, Round round, std::vector<Color> colors) {
        draws_[e] = EdgeDraw{round, std::move(colors)};
    }
    DrawFn fn() const {
        return [this](Edge e) { return draws_.at(e); };
    }

private:
    std::unordered_map<Edge, EdgeDraw, EdgeHash> draws_;
};

inline DrawFn rng_draws(const EdgeRng& rng) {
    return [&rng](Edge e) {
        return EdgeDraw{rng.sample_round(e), rng.sample_color_sequence(e)};
    };
}

}  // namespace dyncolor::test
