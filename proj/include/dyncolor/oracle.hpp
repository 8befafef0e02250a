#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dyncolor/engine.hpp"
#include "dyncolor/graph.hpp"
#include "dyncolor/nibble.hpp"
#include "dyncolor/params.hpp"
#include "dyncolor/types.hpp"

// Ground-truth reference implementations. Everything here recomputes from
// first principles and shares no palette/conflict logic with the optimized
// modules it checks.
namespace dyncolor::oracle {

// Adjacent edge pairs sharing a color; empty iff the coloring is proper
// on g. Edges of g missing from the coloring are reported as violations
// against themselves.
std::vector<std::pair<Edge, Edge>> verify_proper(const Coloring& coloring,
                                                 const DynGraph& g);

struct ReferenceNibble {
    std::unordered_map<Edge, Round, EdgeHash> rounds;
    std::unordered_map<Edge, ColorIndex, EdgeHash> color_index;
    std::unordered_map<Edge, Color, EdgeHash> tentative;  // kNoColor = ⊥
    EdgeSet failed;
};

// Literal round-by-round execution of the tentative pass on one subgraph:
// explicit blocked-color sets per edge, no index structures.
ReferenceNibble reference_nibble(const std::vector<Edge>& edges,
                                 const Params& params, const DrawFn& draw);

// Failed set recomputed from the definition: uncolored, or some neighbor
// in the same round holds the same color.
EdgeSet brute_force_failed_set(
    const std::unordered_map<Edge, Color, EdgeHash>& tentative,
    const std::unordered_map<Edge, Round, EdgeHash>& rounds,
    const std::vector<Edge>& edges);

// Number of edges whose color differs between the two maps, absent keys
// counting as uncolored.
std::size_t recourse_diff(const Coloring& before, const Coloring& after);

// Full-state checks against a live engine. Each returns an empty string on
// success, otherwise a diagnostic naming the first divergence.

// Subgraph j: stored (round, color index, tentative color, failed set)
// must equal a from-scratch reference run with the engine's randomness.
std::string audit_subgraph(const Engine& engine, std::uint32_t j);

// Everything: routing against resampled indices, every subgraph, the
// combined coloring, H == union of failed sets, and properness.
std::string audit_engine(const Engine& engine);

}  // namespace dyncolor::oracle
