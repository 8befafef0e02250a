#include "dyncolor/engine.hpp"

#include <algorithm>

#include "dyncolor/errors.hpp"

namespace dyncolor {

namespace {

// Greedy colors live above every subgraph palette.
Color greedy_global(const Params& params, Color local) {
    return params.greedy_color_offset() + local;
}

std::uint64_t greedy_seed(std::uint64_t seed) {
    return mix64(seed ^ 0x48677265656479ull);  // independent greedy stream
}

}  // namespace

StaticColorResult static_color(const DynGraph& g, const Params& params,
                               std::uint64_t seed) {
    EdgeRng rng(seed, params);

    std::vector<Edge> edges = g.edges();
    std::sort(edges.begin(), edges.end());
    std::vector<std::vector<Edge>> routed(params.subgraph_count);
    for (Edge e : edges) routed[rng.sample_partition_index(e)].push_back(e);

    const DrawFn draw = [&rng](Edge e) {
        return EdgeDraw{rng.sample_round(e), rng.sample_color_sequence(e)};
    };

    std::vector<PaletteState> palettes;
    palettes.reserve(params.subgraph_count);
    GreedyState greedy(g.node_count(), params.greedy_slack, greedy_seed(seed),
                       params.delta_cap);

    StaticColorResult result;
    for (std::uint32_t j = 0; j < params.subgraph_count; ++j) {
        palettes.emplace_back(params);
        static_nibble(palettes[j], routed[j], draw);
        std::vector<Edge> failed(palettes[j].failed().begin(),
                                 palettes[j].failed().end());
        std::sort(failed.begin(), failed.end());
        for (Edge e : failed) greedy.insert(e);
    }

    std::unordered_map<Color, std::uint32_t> histogram;
    for (std::uint32_t j = 0; j < params.subgraph_count; ++j) {
        for (const auto& [e, st] : palettes[j].edges()) {
            const Color c =
                palettes[j].failed().count(e)
                    ? greedy_global(params, greedy.color_of(e))
                    : params.palette_offset(j) + palettes[j].color_query(e);
            result.coloring.emplace(e, c);
            ++histogram[c];
        }
    }
    result.colors_used = histogram.size();
    result.failed_count = greedy.graph().edge_count();
    result.h_max_degree = greedy.graph().max_degree();
    return result;
}

Engine::Engine(NodeId n, const Params& params, std::uint64_t seed,
               Options options)
    : params_(params),
      rng_(seed, params),
      options_(options),
      graph_(n, params.delta_cap),
      partition_(n, params),
      greedy_(n, params.greedy_slack, greedy_seed(seed), params.delta_cap) {
    nibbles_.reserve(params.subgraph_count);
    for (std::uint32_t j = 0; j < params.subgraph_count; ++j)
        nibbles_.emplace_back(params);
}

Color Engine::combined_color(Edge e) const {
    const std::uint32_t j = partition_.member_of(e);
    const PaletteState& s = nibbles_[j];
    if (s.failed_edge_query(e))
        return greedy_global(params_, greedy_.color_of(e));
    return params_.palette_offset(j) + s.color_query(e);
}

// Recomputes e's final color (or absence) against the stored snapshot;
// returns true and maintains the histogram when it changed.
bool Engine::commit_color(Edge e, UpdateReport& report) {
    const Color next = graph_.has_edge(e) ? combined_color(e) : kNoColor;
    auto it = combined_.find(e);
    const Color prior = it == combined_.end() ? kNoColor : it->second;
    if (next == prior) return false;

    if (prior != kNoColor) {
        auto h = color_histogram_.find(prior);
        if (--h->second == 0) color_histogram_.erase(h);
    }
    if (next != kNoColor) {
        ++color_histogram_[next];
        if (it == combined_.end())
            combined_.emplace(e, next);
        else
            it->second = next;
    } else {
        combined_.erase(it);
    }
    ++report.total_recourse;
    return true;
}

void Engine::sync_failed_graph(std::uint32_t j, UpdateReport& report,
                               std::vector<Edge>& touched) {
    // Fold the transition log to net membership changes; an edge that
    // entered and left F within one update needs no greedy churn.
    std::vector<Edge> order;
    std::unordered_map<Edge, int, EdgeHash> net;
    for (const FailedTransition& t : nibbles_[j].drain_failed_transitions()) {
        auto [it, fresh] = net.emplace(t.edge, 0);
        if (fresh) order.push_back(t.edge);
        it->second += t.entered ? 1 : -1;
    }
    for (Edge f : order) {
        const int d = net[f];
        if (d == 0) continue;
        touched.push_back(f);
        if (d > 0) {
            ++report.h_inserts;
            std::vector<Edge> recolored = greedy_.insert(f);
            report.greedy_recolors += recolored.size();
            touched.insert(touched.end(), recolored.begin(), recolored.end());
        } else {
            ++report.h_deletes;
            std::vector<Edge> recolored = greedy_.erase(f);
            report.greedy_recolors += recolored.size();
            touched.insert(touched.end(), recolored.begin(), recolored.end());
        }
    }
}

UpdateReport Engine::apply_update_inner(UpdateKind kind, Edge e) {
    UpdateReport report;
    const DrawFn draw = [this](Edge f) {
        return EdgeDraw{rng_.sample_round(f), rng_.sample_color_sequence(f)};
    };

    DirtySet dirty;
    std::uint32_t j;
    if (kind == UpdateKind::kInsert) {
        graph_.insert_edge(e);
        j = partition_.route_insert(e, rng_);
        dirty = insertion_update(nibbles_[j], e, draw);
    } else {
        graph_.delete_edge(e);
        j = partition_.route_delete(e);
        dirty = deletion_update(nibbles_[j], e);
    }
    report.dirty_tentative = dirty.size();

    std::vector<Edge> touched = dirty.edges;
    touched.push_back(e);
    sync_failed_graph(j, report, touched);
    for (Edge f : touched) commit_color(f, report);

    if (kind == UpdateKind::kDelete) rng_.fresh_incarnation(e);
    return report;
}

UpdateReport Engine::apply_update(UpdateKind kind, Edge e) {
    const auto start = std::chrono::steady_clock::now();
    UpdateReport report = apply_update_inner(kind, e);
    ++updates_applied_;

    if (!resampling_) {
        const bool periodic = options_.resample_every != 0 &&
                              updates_applied_ % options_.resample_every == 0;
        const bool threshold =
            options_.resample_on_threshold &&
            h_graph().max_degree() >
                19.0 * params_.epsilon * params_.delta_cap;
        if (periodic || threshold) report.absorb(resample_all());
    }

    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

UpdateReport Engine::resample_all() {
    UpdateReport total;
    if (resampling_) return total;
    resampling_ = true;
    ++resamples_;

    std::vector<Edge> live = graph_.edges();
    std::sort(live.begin(), live.end());
    for (Edge e : live) {
        total.absorb(apply_update_inner(UpdateKind::kDelete, e));
        total.absorb(apply_update_inner(UpdateKind::kInsert, e));
    }
    resampling_ = false;
    return total;
}

Color Engine::color_of(Edge e) const {
    auto it = combined_.find(e);
    if (it == combined_.end())
        throw MissingEdgeError("edge (" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + ") not live");
    return it->second;
}

}  // namespace dyncolor
