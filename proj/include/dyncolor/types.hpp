#pragma once

#include <cstdint>
#include <functional>

namespace dyncolor {

using NodeId = std::uint32_t;

// Colors are 1-based; 0 means "no color".
using Color = std::uint32_t;
inline constexpr Color kNoColor = 0;

// Rounds are 1-based; an edge with round T+1 never receives a tentative color.
using Round = std::uint32_t;

// Position in a color sequence; 0 means the edge is uncolored.
using ColorIndex = std::uint32_t;

// Undirected edge, stored normalized so (u,v) and (v,u) compare equal.
struct Edge {
    NodeId u;
    NodeId v;

    Edge() : u(0), v(0) {}
    Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator!=(const Edge& o) const { return !(*this == o); }
    bool operator<(const Edge& o) const {
        return u < o.u || (u == o.u && v < o.v);
    }

    std::uint64_t packed() const {
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }
};

struct EdgeHash {
    std::size_t operator()(const Edge& e) const {
        // Fibonacci scramble of the packed pair; std::hash on integers is
        // identity in libstdc++ which clusters badly for adjacent ids.
        std::uint64_t x = e.packed() * 0x9E3779B97F4A7C15ull;
        return static_cast<std::size_t>(x ^ (x >> 29));
    }
};

}  // namespace dyncolor
