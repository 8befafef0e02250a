#pragma once

#include <functional>
#include <vector>

#include "dyncolor/palette_ds.hpp"
#include "dyncolor/types.hpp"

namespace dyncolor {

// Pre-fixed randomness of one edge: its round and truncated color sequence.
struct EdgeDraw {
    Round round;
    std::vector<Color> colors;
};

// Supplier of per-edge randomness; pure for the duration of one call.
using DrawFn = std::function<EdgeDraw(Edge)>;

// Edges whose color index changed during one update, in discovery order.
// After an update this is exactly { e : ell_e before != ell_e after }.
struct DirtySet {
    std::vector<Edge> edges;

    bool empty() const { return edges.empty(); }
    std::size_t size() const { return edges.size(); }
};

// Per-update scratch: the color each dirty or candidate edge held before
// its most recent recolor this update. kNoColor stands for ⊥.
using PrevColorMap = std::unordered_map<Edge, Color, EdgeHash>;

// One-shot pass: inserts every edge with its draw, then for rounds 1..T
// assigns each round's edges their smallest free color position. Within a
// round, edges are processed in sorted order; outcomes do not depend on
// within-round order because palettes only see earlier rounds.
void static_nibble(PaletteState& state, const std::vector<Edge>& edges,
                   const DrawFn& draw);

// Same pass, but edges within each round are processed in the relative
// order they appear in `edges` (order-independence tests drive this).
void static_nibble_ordered(PaletteState& state, const std::vector<Edge>& edges,
                           const DrawFn& draw);

// Inserts e (drawing its randomness), recolors it, and propagates the
// change so every color index matches a from-scratch run on the new edge
// set with the same draws.
DirtySet insertion_update(PaletteState& state, Edge e, const DrawFn& draw);

// Removes e and propagates, as above for the shrunken edge set. The round
// used to seed propagation is read from stored state before erasing.
DirtySet deletion_update(PaletteState& state, Edge e);

// Rounds start_round+1..T: gather each round's candidates from the psi
// sets keyed by the current and previous colors of every dirty edge so
// far, snapshot their colors into prev, recolor them, and accumulate the
// changed ones into dirty. Every dirty edge must have a prev entry.
void propagate_changes(PaletteState& state, DirtySet& dirty,
                       PrevColorMap& prev, Round start_round);

}  // namespace dyncolor
