#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dyncolor/graph.hpp"
#include "dyncolor/params.hpp"
#include "dyncolor/randomness.hpp"
#include "dyncolor/types.hpp"

namespace dyncolor {

// Random split of the live edge set into eta subgraphs over a shared node
// set. Each edge's destination is its sampled partition index, which stays
// fixed while the edge is live.
class PartitionState {
public:
    PartitionState(NodeId n, const Params& params);

    // Samples j for e's current incarnation and inserts e into subgraph j.
    std::uint32_t route_insert(Edge e, const EdgeRng& rng);

    // Removes e from its subgraph and forgets the routing; returns the
    // subgraph it was in.
    std::uint32_t route_delete(Edge e);

    std::uint32_t member_of(Edge e) const;
    bool contains(Edge e) const { return member_.count(e) != 0; }

    std::uint32_t count() const {
        return static_cast<std::uint32_t>(subgraphs_.size());
    }
    const DynGraph& subgraph(std::uint32_t j) const { return subgraphs_[j]; }
    std::size_t routed_edges() const { return member_.size(); }

    const std::unordered_map<Edge, std::uint32_t, EdgeHash>& members() const {
        return member_;
    }

private:
    std::vector<DynGraph> subgraphs_;
    std::unordered_map<Edge, std::uint32_t, EdgeHash> member_;
};

}  // namespace dyncolor
