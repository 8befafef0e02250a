#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dyncolor/params.hpp"
#include "dyncolor/types.hpp"

namespace dyncolor {

using EdgeSet = std::unordered_set<Edge, EdgeHash>;

// One F-membership change, in the order it happened.
struct FailedTransition {
    Edge edge;
    bool entered;  // true: joined F, false: left F
};

// Per-subgraph tentative-coloring state: for every stored edge its round,
// color sequence and color index, plus the failed set F and the index maps
//
//   phi[u,i](c)  = edges at u in round i whose tentative color is c
//   psi[u,i](c)  = edges at u in round i whose color sequence contains c
//   phi'[u](c)   = count of edges at u (any round) whose tentative color is c
//
// phi/psi sets are created lazily and dropped when empty. F is kept exactly
// consistent with the definition "uncolored, or a same-round neighbor holds
// the same tentative color" after every operation; membership changes are
// appended to a transition log the owner can drain.
class PaletteState {
public:
    struct EdgeState {
        Round round = 0;
        ColorIndex ell = 0;
        std::vector<Color> colors;
    };

    enum class QueryMode {
        kScan,        // palette query walks rounds 1..i-1
        kFirstBuild,  // O(1) counter shortcut; valid only while no edge of a
                      // later round holds a color (initial round-by-round build)
    };

    explicit PaletteState(const Params& params);

    // Stores e with round i and the given color sequence, uncolored (ell=0),
    // so e joins F. Updates psi at both endpoints for every sequence entry.
    void insert(Edge e, Round round, std::vector<Color> colors);

    // Zeroes the color index first (repairing neighbors' F membership),
    // then removes all per-edge state; e leaves F.
    void erase(Edge e);

    // Sets ell_e, updates phi/phi' at both endpoints, and repairs F for e and
    // the at most four neighbor candidates exposed by the phi size tests.
    // ell == current index is a complete no-op.
    void set_color_index(Edge e, ColorIndex ell);

    // Sets ell_e to the smallest position whose color is free in the edge's
    // round palette, or 0 if none. Returns true iff the index changed.
    // Round-(T+1) edges have no palette and always keep ell = 0.
    bool reset_color(Edge e, QueryMode mode = QueryMode::kScan);

    // True iff no edge at u in a round before i holds color c.
    bool node_palette_query(NodeId u, Round i, Color c,
                            QueryMode mode = QueryMode::kScan) const;
    bool edge_palette_query(Edge e, Round i, Color c,
                            QueryMode mode = QueryMode::kScan) const;

    bool failed_edge_query(Edge e) const;
    // Tentative color, kNoColor when uncolored.
    Color color_query(Edge e) const;

    bool contains(Edge e) const { return edges_.count(e) != 0; }
    std::size_t edge_count() const { return edges_.size(); }
    Round round_of(Edge e) const;
    ColorIndex color_index_of(Edge e) const;
    const std::vector<Color>& color_sequence_of(Edge e) const;

    const std::unordered_map<Edge, EdgeState, EdgeHash>& edges() const {
        return edges_;
    }
    const EdgeSet& failed() const { return failed_; }

    // psi[u,i](c) ∪ psi[v,i](c) for e=(u,v); nullptr entries skipped.
    void collect_psi(Edge e, Round i, Color c, EdgeSet& out) const;

    std::vector<FailedTransition> drain_failed_transitions();
    void clear_failed_transitions() { transitions_.clear(); }

    // Index introspection (audits and tests).
    std::size_t phi_size(NodeId u, Round i, Color c) const;
    std::size_t psi_size(NodeId u, Round i, Color c) const;
    std::uint32_t phi_prime_count(NodeId u, Color c) const;

    const Params& params() const { return params_; }

private:
    static std::uint64_t key3(NodeId u, Round i, Color c) {
        return (static_cast<std::uint64_t>(u) << 32) |
               (static_cast<std::uint64_t>(i) << 16) | c;
    }
    static std::uint64_t key2(NodeId u, Color c) {
        return (static_cast<std::uint64_t>(u) << 32) | c;
    }

    EdgeState& state_of(Edge e);
    const EdgeState& state_of(Edge e) const;
    Color color_of_state(const EdgeState& st) const {
        return st.ell == 0 ? kNoColor : st.colors[st.ell - 1];
    }

    void index_insert(std::unordered_map<std::uint64_t, EdgeSet>& index,
                      std::uint64_t key, Edge e);
    void index_erase(std::unordered_map<std::uint64_t, EdgeSet>& index,
                     std::uint64_t key, Edge e);
    std::size_t index_size(
        const std::unordered_map<std::uint64_t, EdgeSet>& index,
        std::uint64_t key) const;

    // Recomputes whether f fails from its own endpoints and syncs F.
    void refresh_failed(Edge f);
    bool computes_failed(Edge f, const EdgeState& st) const;
    void set_failed_membership(Edge f, bool now_failed);

    Params params_;
    std::unordered_map<Edge, EdgeState, EdgeHash> edges_;
    EdgeSet failed_;
    std::vector<FailedTransition> transitions_;
    std::unordered_map<std::uint64_t, EdgeSet> phi_;
    std::unordered_map<std::uint64_t, EdgeSet> psi_;
    std::unordered_map<std::uint64_t, std::uint32_t> phi_prime_;
};

}  // namespace dyncolor
