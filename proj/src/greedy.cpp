#include "dyncolor/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dyncolor/errors.hpp"

namespace dyncolor {

GreedyState::GreedyState(NodeId n, double slack, std::uint64_t seed,
                         std::uint32_t degree_bound)
    : h_(n, degree_bound), slack_(slack), rng_(mix64(seed ^ 0x67726479ull)) {
    if (!(slack > 0.0) || slack > 1.0)
        throw InvalidArgsError("greedy slack must lie in (0, 1]");
    attempt_cap_ =
        64 * static_cast<std::uint64_t>(std::ceil(3.0 / slack_));
}

std::uint32_t GreedyState::palette_size(Edge e) const {
    const std::uint32_t d = std::max(h_.degree(e.u), h_.degree(e.v));
    return static_cast<std::uint32_t>(std::ceil((2.0 + slack_) * d));
}

bool GreedyState::is_free(Edge e, Color c) const {
    return psi_.count(slot(e.u, c)) == 0 && psi_.count(slot(e.v, c)) == 0;
}

Color GreedyState::sample_free_color(Edge e) {
    const std::uint32_t palette = palette_size(e);
    for (std::uint64_t tries = 0; tries < attempt_cap_; ++tries) {
        ++samples_;
        const Color c = static_cast<Color>(rng_.uniform(1, palette));
        if (is_free(e, c)) {
            ++colorings_;
            return c;
        }
    }
    // The free probability is at least slack/3 per try, so reaching the cap
    // is astronomically unlikely; a linear scan keeps the worst case finite.
    ++fallbacks_;
    for (Color c = 1; c <= palette; ++c) {
        if (is_free(e, c)) {
            ++colorings_;
            return c;
        }
    }
    throw std::logic_error("no free greedy color; invariant broken");
}

void GreedyState::assign(Edge e, Color c) {
    chi_[e] = c;
    psi_[slot(e.u, c)] = e;
    psi_[slot(e.v, c)] = e;
}

void GreedyState::unassign(Edge e) {
    auto it = chi_.find(e);
    const Color c = it->second;
    psi_.erase(slot(e.u, c));
    psi_.erase(slot(e.v, c));
    chi_.erase(it);
}

std::vector<Edge> GreedyState::insert(Edge e) {
    h_.insert_edge(e);  // throws on duplicates and degree-bound breaks
    assign(e, sample_free_color(e));
    return {e};
}

std::vector<Edge> GreedyState::erase(Edge e) {
    h_.delete_edge(e);  // throws MissingEdgeError when absent
    unassign(e);

    // Uncolor every out-of-range edge first, then recolor; recoloring while
    // scanning could land a fresh color back inside the scanned range.
    std::vector<Edge> recolored;
    for (NodeId x : {e.u, e.v}) {
        // Colors legal at degree d+1 but not at degree d; at most
        // ceil(2+slack) <= 3 of them, each held by at most one edge.
        const std::uint32_t d = h_.degree(x);
        const auto lo = static_cast<Color>(std::ceil((2.0 + slack_) * d));
        const auto hi =
            static_cast<Color>(std::ceil((2.0 + slack_) * (d + 1)));
        for (Color c = lo + 1; c <= hi; ++c) {
            auto it = psi_.find(slot(x, c));
            if (it == psi_.end()) continue;
            const Edge f = it->second;
            unassign(f);
            recolored.push_back(f);
        }
    }
    for (Edge f : recolored) assign(f, sample_free_color(f));
    return recolored;
}

Color GreedyState::color_of(Edge e) const {
    auto it = chi_.find(e);
    if (it == chi_.end())
        throw MissingEdgeError("edge (" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + ") has no greedy color");
    return it->second;
}

}  // namespace dyncolor
