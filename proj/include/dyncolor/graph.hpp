#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "dyncolor/types.hpp"

namespace dyncolor {

// Dynamic undirected simple graph over a fixed node set [0, n).
// Tracks per-node degrees and the exact maximum degree under insertions
// and deletions. Edges are normalized pairs; at most one copy can be live.
class DynGraph {
public:
    // degree_bound: promised max degree; insertions that would exceed it
    // throw DegreeBoundError. Pass 0 for "no bound" (= n - 1).
    explicit DynGraph(NodeId n, std::uint32_t degree_bound = 0);

    void insert_edge(Edge e);
    void delete_edge(Edge e);

    bool has_edge(Edge e) const;
    std::uint32_t degree(NodeId u) const;
    std::uint32_t max_degree() const { return max_degree_; }
    std::uint32_t degree_bound() const { return degree_bound_; }

    NodeId node_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    // Neighbor node ids of u, in unspecified order.
    const std::unordered_set<NodeId>& neighbors_of(NodeId u) const;
    std::vector<Edge> incident_edges(NodeId u) const;
    std::vector<Edge> edges() const;

private:
    void check_node(NodeId u) const;

    NodeId n_;
    std::uint32_t degree_bound_;
    std::size_t edge_count_;
    std::uint32_t max_degree_;
    std::vector<std::unordered_set<NodeId>> adj_;
    // degree histogram, so max_degree() stays exact under deletions
    std::vector<std::uint32_t> degree_count_;
};

}  // namespace dyncolor
