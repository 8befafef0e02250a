#pragma once

#include <chrono>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dyncolor/graph.hpp"
#include "dyncolor/greedy.hpp"
#include "dyncolor/nibble.hpp"
#include "dyncolor/palette_ds.hpp"
#include "dyncolor/params.hpp"
#include "dyncolor/partition.hpp"
#include "dyncolor/randomness.hpp"
#include "dyncolor/types.hpp"

namespace dyncolor {

// Final coloring: every live edge to its global color.
using Coloring = std::unordered_map<Edge, Color, EdgeHash>;

enum class UpdateKind { kInsert, kDelete };

// Per-update recourse breakdown.
struct UpdateReport {
    std::size_t dirty_tentative = 0;  // edges whose color index changed
    std::size_t h_inserts = 0;        // net additions to the failed graph H
    std::size_t h_deletes = 0;        // net removals from H
    std::size_t greedy_recolors = 0;  // greedy color assignments
    std::size_t total_recourse = 0;   // final colors changed, incl. the update
    std::chrono::nanoseconds elapsed{0};

    void absorb(const UpdateReport& inner) {
        dirty_tentative += inner.dirty_tentative;
        h_inserts += inner.h_inserts;
        h_deletes += inner.h_deletes;
        greedy_recolors += inner.greedy_recolors;
        total_recourse += inner.total_recourse;
    }
};

struct StaticColorResult {
    Coloring coloring;
    std::size_t colors_used = 0;
    std::size_t failed_count = 0;
    std::uint32_t h_max_degree = 0;
};

// One-shot colorer: partitions g's edges, runs the one-shot tentative pass
// per subgraph with offset palettes, then greedy-colors the failed edges
// with extra colors. Proper on all inputs.
StaticColorResult static_color(const DynGraph& g, const Params& params,
                               std::uint64_t seed);

// Dynamic engine: maintains, after every update, exactly the coloring the
// one-shot pass would produce on the current graph with the same per-edge
// randomness, plus a greedy coloring of the failed-edge graph H.
class Engine {
public:
    struct Options {
        // Re-randomize every N updates; 0 disables.
        std::uint64_t resample_every = 0;
        // Re-randomize whenever max_degree(H) > 19 * epsilon * delta_cap.
        bool resample_on_threshold = false;
    };

    Engine(NodeId n, const Params& params, std::uint64_t seed)
        : Engine(n, params, seed, Options{}) {}
    Engine(NodeId n, const Params& params, std::uint64_t seed,
           Options options);

    UpdateReport apply_update(UpdateKind kind, Edge e);
    UpdateReport insert(Edge e) { return apply_update(UpdateKind::kInsert, e); }
    UpdateReport remove(Edge e) { return apply_update(UpdateKind::kDelete, e); }

    // Deletes and reinserts every live edge with fresh randomness.
    UpdateReport resample_all();

    Color color_of(Edge e) const;
    Coloring snapshot() const { return combined_; }

    const DynGraph& graph() const { return graph_; }
    const Params& params() const { return params_; }
    const EdgeRng& rng() const { return rng_; }
    std::uint64_t seed() const { return rng_.seed(); }

    const PartitionState& partition() const { return partition_; }
    const PaletteState& palette(std::uint32_t j) const { return nibbles_[j]; }
    const GreedyState& greedy() const { return greedy_; }
    const DynGraph& h_graph() const { return greedy_.graph(); }

    std::size_t colors_in_use() const { return color_histogram_.size(); }
    std::size_t failed_count() const { return h_graph().edge_count(); }
    std::uint64_t updates_applied() const { return updates_applied_; }
    std::uint64_t resamples() const { return resamples_; }

private:
    UpdateReport apply_update_inner(UpdateKind kind, Edge e);
    void sync_failed_graph(std::uint32_t j, UpdateReport& report,
                           std::vector<Edge>& touched);
    Color combined_color(Edge e) const;
    bool commit_color(Edge e, UpdateReport& report);

    Params params_;
    EdgeRng rng_;
    Options options_;
    DynGraph graph_;
    PartitionState partition_;
    std::vector<PaletteState> nibbles_;
    GreedyState greedy_;
    Coloring combined_;
    std::unordered_map<Color, std::uint32_t> color_histogram_;
    std::uint64_t updates_applied_ = 0;
    std::uint64_t resamples_ = 0;
    bool resampling_ = false;
};

}  // namespace dyncolor
