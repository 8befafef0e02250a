#include "dyncolor/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace dyncolor::oracle {

std::vector<std::pair<Edge, Edge>> verify_proper(const Coloring& coloring,
                                                 const DynGraph& g) {
    std::vector<std::pair<Edge, Edge>> violations;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        std::unordered_map<Color, Edge> seen;
        for (NodeId v : g.neighbors_of(u)) {
            const Edge e(u, v);
            auto it = coloring.find(e);
            if (it == coloring.end() || it->second == kNoColor) {
                if (u < v) violations.emplace_back(e, e);  // uncolored edge
                continue;
            }
            auto [slot, fresh] = seen.emplace(it->second, e);
            // two distinct edges share exactly one endpoint, so each
            // clashing pair surfaces at one node only
            if (!fresh) violations.emplace_back(slot->second, e);
        }
    }
    return violations;
}

ReferenceNibble reference_nibble(const std::vector<Edge>& edges,
                                 const Params& params, const DrawFn& draw) {
    ReferenceNibble out;

    std::unordered_map<Edge, std::vector<Color>, EdgeHash> sequences;
    std::unordered_map<NodeId, std::vector<Edge>> incident;
    std::vector<std::vector<Edge>> by_round(params.rounds + 2);
    for (Edge e : edges) {
        EdgeDraw d = draw(e);
        out.rounds.emplace(e, d.round);
        sequences.emplace(e, std::move(d.colors));
        by_round[d.round].push_back(e);
        incident[e.u].push_back(e);
        incident[e.v].push_back(e);
        out.color_index.emplace(e, 0);
        out.tentative.emplace(e, kNoColor);
    }

    for (Round i = 1; i <= params.rounds; ++i) {
        std::sort(by_round[i].begin(), by_round[i].end());
        for (Edge e : by_round[i]) {
            // colors already held around either endpoint in earlier rounds
            std::unordered_set<Color> blocked;
            for (NodeId x : {e.u, e.v})
                for (Edge f : incident[x]) {
                    if (f == e || out.rounds.at(f) >= i) continue;
                    const Color c = out.tentative.at(f);
                    if (c != kNoColor) blocked.insert(c);
                }
            ColorIndex pick = 0;
            if (blocked.size() < params.sub_palette_size) {
                const auto& seq = sequences.at(e);
                for (ColorIndex ell = 1; ell <= seq.size(); ++ell)
                    if (!blocked.count(seq[ell - 1])) {
                        pick = ell;
                        break;
                    }
            }
            if (pick != 0) {
                out.color_index[e] = pick;
                out.tentative[e] = sequences.at(e)[pick - 1];
            }
        }
    }

    out.failed = brute_force_failed_set(out.tentative, out.rounds, edges);
    return out;
}

EdgeSet brute_force_failed_set(
    const std::unordered_map<Edge, Color, EdgeHash>& tentative,
    const std::unordered_map<Edge, Round, EdgeHash>& rounds,
    const std::vector<Edge>& edges) {
    EdgeSet failed;
    std::unordered_map<NodeId, std::vector<Edge>> incident;
    for (Edge e : edges) {
        incident[e.u].push_back(e);
        incident[e.v].push_back(e);
    }
    for (Edge e : edges) {
        const Color c = tentative.at(e);
        if (c == kNoColor) {
            failed.insert(e);
            continue;
        }
        const Round i = rounds.at(e);
        for (NodeId x : {e.u, e.v})
            for (Edge f : incident[x]) {
                if (f == e) continue;
                if (rounds.at(f) == i && tentative.at(f) == c)
                    failed.insert(e);
            }
    }
    return failed;
}

std::size_t recourse_diff(const Coloring& before, const Coloring& after) {
    std::size_t changed = 0;
    for (const auto& [e, c] : before) {
        auto it = after.find(e);
        const Color now = it == after.end() ? kNoColor : it->second;
        if (now != c) ++changed;
    }
    for (const auto& [e, c] : after)
        if (c != kNoColor && before.count(e) == 0) ++changed;
    return changed;
}

namespace {

std::string edge_str(Edge e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

std::string audit_subgraph(const Engine& engine, std::uint32_t j) {
    const PaletteState& state = engine.palette(j);
    const std::vector<Edge> edges = engine.partition().subgraph(j).edges();
    if (edges.size() != state.edge_count())
        return "subgraph " + std::to_string(j) + ": palette stores " +
               std::to_string(state.edge_count()) + " edges, graph has " +
               std::to_string(edges.size());

    const EdgeRng& rng = engine.rng();
    const DrawFn draw = [&rng](Edge e) {
        return EdgeDraw{rng.sample_round(e), rng.sample_color_sequence(e)};
    };
    const ReferenceNibble ref = reference_nibble(edges, engine.params(), draw);

    for (Edge e : edges) {
        if (state.round_of(e) != ref.rounds.at(e))
            return "subgraph " + std::to_string(j) + ": edge " + edge_str(e) +
                   " stored round " + std::to_string(state.round_of(e)) +
                   " != sampled round " + std::to_string(ref.rounds.at(e));
        if (state.color_index_of(e) != ref.color_index.at(e))
            return "subgraph " + std::to_string(j) + ": edge " + edge_str(e) +
                   " round " + std::to_string(ref.rounds.at(e)) +
                   " color index " + std::to_string(state.color_index_of(e)) +
                   " != reference " + std::to_string(ref.color_index.at(e));
        if (state.color_query(e) != ref.tentative.at(e))
            return "subgraph " + std::to_string(j) + ": edge " + edge_str(e) +
                   " round " + std::to_string(ref.rounds.at(e)) +
                   " tentative color " + std::to_string(state.color_query(e)) +
                   " != reference " + std::to_string(ref.tentative.at(e));
        if (state.failed().count(e) != ref.failed.count(e))
            return "subgraph " + std::to_string(j) + ": edge " + edge_str(e) +
                   " round " + std::to_string(ref.rounds.at(e)) +
                   " failed-set membership diverges (maintained " +
                   std::to_string(state.failed().count(e)) + ")";
    }
    if (state.failed().size() != ref.failed.size())
        return "subgraph " + std::to_string(j) + ": |F| " +
               std::to_string(state.failed().size()) + " != reference " +
               std::to_string(ref.failed.size());
    return {};
}

std::string audit_engine(const Engine& engine) {
    const std::vector<Edge> live = engine.graph().edges();
    const PartitionState& partition = engine.partition();
    if (live.size() != partition.routed_edges())
        return "routing: " + std::to_string(partition.routed_edges()) +
               " routed edges vs " + std::to_string(live.size()) + " live";
    for (Edge e : live) {
        if (!partition.contains(e))
            return "routing: live edge " + edge_str(e) + " unrouted";
        if (partition.member_of(e) != engine.rng().sample_partition_index(e))
            return "routing: edge " + edge_str(e) +
                   " not in its sampled subgraph";
    }

    for (std::uint32_t j = 0; j < partition.count(); ++j)
        if (std::string msg = audit_subgraph(engine, j); !msg.empty())
            return msg;

    // H must be exactly the union of the failed sets.
    std::size_t failed_total = 0;
    for (std::uint32_t j = 0; j < partition.count(); ++j) {
        for (Edge e : engine.palette(j).failed()) {
            ++failed_total;
            if (!engine.h_graph().has_edge(e))
                return "H-sync: failed edge " + edge_str(e) + " missing in H";
        }
    }
    if (failed_total != engine.h_graph().edge_count())
        return "H-sync: |H| " +
               std::to_string(engine.h_graph().edge_count()) +
               " != total failed " + std::to_string(failed_total);

    // Combined coloring: stored snapshot vs recomputation, then properness.
    const Coloring snapshot = engine.snapshot();
    if (snapshot.size() != live.size())
        return "combined: snapshot size " + std::to_string(snapshot.size()) +
               " != live edges " + std::to_string(live.size());
    for (Edge e : live) {
        const std::uint32_t j = partition.member_of(e);
        const PaletteState& s = engine.palette(j);
        const Color expect =
            s.failed_edge_query(e)
                ? engine.params().greedy_color_offset() +
                      engine.greedy().color_of(e)
                : engine.params().palette_offset(j) + s.color_query(e);
        auto it = snapshot.find(e);
        if (it == snapshot.end() || it->second != expect)
            return "combined: edge " + edge_str(e) + " stored color stale";
    }
    if (!verify_proper(snapshot, engine.graph()).empty())
        return "combined coloring is not proper";
    return {};
}

}  // namespace dyncolor::oracle
