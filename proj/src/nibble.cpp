#include "dyncolor/nibble.hpp"

#include <algorithm>
#include <unordered_map>

namespace dyncolor {

namespace {

Color current_color(const PaletteState& state, Edge e) {
    return state.contains(e) ? state.color_query(e) : kNoColor;
}

}  // namespace

void propagate_changes(PaletteState& state, DirtySet& dirty,
                       PrevColorMap& prev, Round start_round) {
    const Round last = state.params().rounds;
    for (Round i = start_round + 1; i <= last; ++i) {
        if (dirty.empty()) return;
        EdgeSet gathered;
        for (Edge e : dirty.edges) {
            state.collect_psi(e, i, current_color(state, e), gathered);
            state.collect_psi(e, i, prev.at(e), gathered);
        }
        if (gathered.empty()) continue;

        std::vector<Edge> candidates(gathered.begin(), gathered.end());
        std::sort(candidates.begin(), candidates.end());
        for (Edge f : candidates) prev.emplace(f, state.color_query(f));
        for (Edge f : candidates)
            if (state.reset_color(f)) dirty.edges.push_back(f);
    }
}

namespace {

void run_rounds(PaletteState& state,
                std::vector<std::vector<Edge>>& by_round) {
    for (std::size_t i = 0; i + 1 < by_round.size(); ++i)  // rounds 1..T
        for (Edge e : by_round[i])
            state.reset_color(e, PaletteState::QueryMode::kFirstBuild);
}

}  // namespace

void static_nibble_ordered(PaletteState& state, const std::vector<Edge>& edges,
                           const DrawFn& draw) {
    const Round last = state.params().rounds;
    std::vector<std::vector<Edge>> by_round(last + 1);  // [i-1] holds round i
    for (Edge e : edges) {
        EdgeDraw d = draw(e);
        by_round[d.round - 1].push_back(e);
        state.insert(e, d.round, std::move(d.colors));
    }
    run_rounds(state, by_round);
}

void static_nibble(PaletteState& state, const std::vector<Edge>& edges,
                   const DrawFn& draw) {
    std::vector<Edge> ordered(edges);
    std::sort(ordered.begin(), ordered.end());
    static_nibble_ordered(state, ordered, draw);
}

DirtySet insertion_update(PaletteState& state, Edge e, const DrawFn& draw) {
    EdgeDraw d = draw(e);
    const Round round = d.round;
    state.insert(e, round, std::move(d.colors));

    DirtySet dirty;
    if (round > state.params().rounds) return dirty;  // stays ⊥, nothing moves

    PrevColorMap prev;
    prev.emplace(e, kNoColor);
    if (state.reset_color(e)) dirty.edges.push_back(e);
    propagate_changes(state, dirty, prev, round);
    return dirty;
}

DirtySet deletion_update(PaletteState& state, Edge e) {
    const Round round = state.round_of(e);
    const Color old_color = state.color_query(e);
    state.erase(e);

    DirtySet dirty;
    PrevColorMap prev;
    if (old_color != kNoColor) {
        dirty.edges.push_back(e);
        prev.emplace(e, old_color);
    }
    propagate_changes(state, dirty, prev, round);
    return dirty;
}

}  // namespace dyncolor
