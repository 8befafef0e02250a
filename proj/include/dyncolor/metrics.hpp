#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dyncolor/engine.hpp"

namespace dyncolor {

// Aggregated run statistics; everything except the timing block is a pure
// function of (stream, seed, flags).
struct Metrics {
    std::uint64_t updates = 0;
    std::uint64_t total_recourse = 0;
    double mean_recourse = 0.0;
    std::uint64_t max_recourse = 0;
    double mean_dirty_tentative = 0.0;
    std::size_t colors_used_peak = 0;
    std::size_t failed_peak = 0;
    std::uint32_t h_max_degree_peak = 0;
    std::uint64_t h_inserts = 0;
    std::uint64_t h_deletes = 0;
    std::uint64_t greedy_recolors = 0;
    std::uint64_t resamples = 0;
    std::uint64_t greedy_fallbacks = 0;

    // timing block
    double ns_per_update_mean = 0.0;
    std::uint64_t ns_per_update_p50 = 0;
    std::uint64_t ns_per_update_p99 = 0;
};

class MetricsAccumulator {
public:
    // Record one report plus the engine state it left behind.
    void add(const UpdateReport& report, const Engine& engine) {
        ++updates_;
        total_recourse_ += report.total_recourse;
        max_recourse_ = std::max<std::uint64_t>(max_recourse_,
                                                report.total_recourse);
        dirty_total_ += report.dirty_tentative;
        h_inserts_ += report.h_inserts;
        h_deletes_ += report.h_deletes;
        greedy_recolors_ += report.greedy_recolors;
        colors_peak_ = std::max(colors_peak_, engine.colors_in_use());
        failed_peak_ = std::max(failed_peak_, engine.failed_count());
        h_degree_peak_ =
            std::max(h_degree_peak_, engine.h_graph().max_degree());
        latencies_ns_.push_back(
            static_cast<std::uint64_t>(report.elapsed.count()));
    }

    Metrics finalize(const Engine& engine) {
        Metrics m;
        m.updates = updates_;
        m.total_recourse = total_recourse_;
        m.max_recourse = max_recourse_;
        m.h_inserts = h_inserts_;
        m.h_deletes = h_deletes_;
        m.greedy_recolors = greedy_recolors_;
        m.colors_used_peak = colors_peak_;
        m.failed_peak = failed_peak_;
        m.h_max_degree_peak = h_degree_peak_;
        m.resamples = engine.resamples();
        m.greedy_fallbacks = engine.greedy().fallbacks();
        if (updates_ > 0) {
            m.mean_recourse =
                static_cast<double>(total_recourse_) / updates_;
            m.mean_dirty_tentative =
                static_cast<double>(dirty_total_) / updates_;
            std::vector<std::uint64_t> sorted = latencies_ns_;
            std::sort(sorted.begin(), sorted.end());
            std::uint64_t sum = 0;
            for (std::uint64_t v : sorted) sum += v;
            m.ns_per_update_mean = static_cast<double>(sum) / updates_;
            m.ns_per_update_p50 = sorted[(sorted.size() - 1) / 2];
            m.ns_per_update_p99 = sorted[(sorted.size() - 1) * 99 / 100];
        }
        return m;
    }

private:
    std::uint64_t updates_ = 0;
    std::uint64_t total_recourse_ = 0;
    std::uint64_t max_recourse_ = 0;
    std::uint64_t dirty_total_ = 0;
    std::uint64_t h_inserts_ = 0;
    std::uint64_t h_deletes_ = 0;
    std::uint64_t greedy_recolors_ = 0;
    std::size_t colors_peak_ = 0;
    std::size_t failed_peak_ = 0;
    std::uint32_t h_degree_peak_ = 0;
    std::vector<std::uint64_t> latencies_ns_;
};

}  // namespace dyncolor
