#include "dyncolor/partition.hpp"

#include <string>

#include "dyncolor/errors.hpp"

namespace dyncolor {

PartitionState::PartitionState(NodeId n, const Params& params) {
    subgraphs_.reserve(params.subgraph_count);
    for (std::uint32_t j = 0; j < params.subgraph_count; ++j)
        subgraphs_.emplace_back(n, params.delta_cap);
}

std::uint32_t PartitionState::route_insert(Edge e, const EdgeRng& rng) {
    if (contains(e))
        throw DuplicateEdgeError("edge (" + std::to_string(e.u) + "," +
                                 std::to_string(e.v) + ") already routed");
    const std::uint32_t j = rng.sample_partition_index(e);
    subgraphs_[j].insert_edge(e);
    member_.emplace(e, j);
    return j;
}

std::uint32_t PartitionState::route_delete(Edge e) {
    auto it = member_.find(e);
    if (it == member_.end())
        throw MissingEdgeError("edge (" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + ") not routed");
    const std::uint32_t j = it->second;
    subgraphs_[j].delete_edge(e);
    member_.erase(it);
    return j;
}

std::uint32_t PartitionState::member_of(Edge e) const {
    auto it = member_.find(e);
    if (it == member_.end())
        throw MissingEdgeError("edge (" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + ") not routed");
    return it->second;
}

}  // namespace dyncolor
