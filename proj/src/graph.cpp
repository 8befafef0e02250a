#include "dyncolor/graph.hpp"

#include <string>

#include "dyncolor/errors.hpp"

namespace dyncolor {

namespace {
std::string edge_str(Edge e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}
}  // namespace

DynGraph::DynGraph(NodeId n, std::uint32_t degree_bound)
    : n_(n),
      degree_bound_(degree_bound == 0 ? (n > 0 ? n - 1 : 0) : degree_bound),
      edge_count_(0),
      max_degree_(0),
      adj_(n),
      degree_count_(static_cast<std::size_t>(n) + 1, 0) {
    if (n > 0) degree_count_[0] = n;
}

void DynGraph::check_node(NodeId u) const {
    if (u >= n_)
        throw IndexOutOfRangeError("node " + std::to_string(u) +
                                   " out of range, n=" + std::to_string(n_));
}

void DynGraph::insert_edge(Edge e) {
    check_node(e.u);
    check_node(e.v);
    if (e.u == e.v)
        throw InvalidArgsError("self-loop " + edge_str(e));
    if (adj_[e.u].count(e.v))
        throw DuplicateEdgeError("edge " + edge_str(e) + " already present");
    if (degree(e.u) + 1 > degree_bound_ || degree(e.v) + 1 > degree_bound_)
        throw DegreeBoundError("inserting " + edge_str(e) +
                               " would exceed degree bound " +
                               std::to_string(degree_bound_));

    for (NodeId x : {e.u, e.v}) {
        std::uint32_t d = degree(x);
        --degree_count_[d];
        ++degree_count_[d + 1];
        if (d + 1 > max_degree_) max_degree_ = d + 1;
    }
    adj_[e.u].insert(e.v);
    adj_[e.v].insert(e.u);
    ++edge_count_;
}

void DynGraph::delete_edge(Edge e) {
    check_node(e.u);
    check_node(e.v);
    if (!adj_[e.u].count(e.v))
        throw MissingEdgeError("edge " + edge_str(e) + " not present");

    for (NodeId x : {e.u, e.v}) {
        std::uint32_t d = degree(x);
        --degree_count_[d];
        ++degree_count_[d - 1];
    }
    adj_[e.u].erase(e.v);
    adj_[e.v].erase(e.u);
    --edge_count_;
    while (max_degree_ > 0 && degree_count_[max_degree_] == 0) --max_degree_;
}

bool DynGraph::has_edge(Edge e) const {
    if (e.u >= n_ || e.v >= n_) return false;
    return adj_[e.u].count(e.v) != 0;
}

std::uint32_t DynGraph::degree(NodeId u) const {
    check_node(u);
    return static_cast<std::uint32_t>(adj_[u].size());
}

const std::unordered_set<NodeId>& DynGraph::neighbors_of(NodeId u) const {
    check_node(u);
    return adj_[u];
}

std::vector<Edge> DynGraph::incident_edges(NodeId u) const {
    check_node(u);
    std::vector<Edge> out;
    out.reserve(adj_[u].size());
    for (NodeId v : adj_[u]) out.emplace_back(u, v);
    return out;
}

std::vector<Edge> DynGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < n_; ++u)
        for (NodeId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

}  // namespace dyncolor
