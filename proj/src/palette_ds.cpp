#include "dyncolor/palette_ds.hpp"

#include <algorithm>
#include <string>

#include "dyncolor/errors.hpp"

namespace dyncolor {

namespace {
std::string edge_str(Edge e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}
}  // namespace

PaletteState::PaletteState(const Params& params) : params_(params) {
    // key3 packs round and color into 16 bits each
    if (params_.rounds + 1 >= (1u << 16) ||
        params_.sub_palette_size >= (1u << 16))
        throw InvalidArgsError("palette state supports rounds and palette "
                               "sizes below 2^16");
}

PaletteState::EdgeState& PaletteState::state_of(Edge e) {
    auto it = edges_.find(e);
    if (it == edges_.end())
        throw MissingEdgeError("edge " + edge_str(e) + " not stored");
    return it->second;
}

const PaletteState::EdgeState& PaletteState::state_of(Edge e) const {
    auto it = edges_.find(e);
    if (it == edges_.end())
        throw MissingEdgeError("edge " + edge_str(e) + " not stored");
    return it->second;
}

void PaletteState::index_insert(
    std::unordered_map<std::uint64_t, EdgeSet>& index, std::uint64_t key,
    Edge e) {
    index[key].insert(e);
}

void PaletteState::index_erase(
    std::unordered_map<std::uint64_t, EdgeSet>& index, std::uint64_t key,
    Edge e) {
    auto it = index.find(key);
    if (it == index.end()) return;
    it->second.erase(e);
    if (it->second.empty()) index.erase(it);
}

std::size_t PaletteState::index_size(
    const std::unordered_map<std::uint64_t, EdgeSet>& index,
    std::uint64_t key) const {
    auto it = index.find(key);
    return it == index.end() ? 0 : it->second.size();
}

std::size_t PaletteState::phi_size(NodeId u, Round i, Color c) const {
    return index_size(phi_, key3(u, i, c));
}

std::size_t PaletteState::psi_size(NodeId u, Round i, Color c) const {
    return index_size(psi_, key3(u, i, c));
}

std::uint32_t PaletteState::phi_prime_count(NodeId u, Color c) const {
    auto it = phi_prime_.find(key2(u, c));
    return it == phi_prime_.end() ? 0 : it->second;
}

bool PaletteState::computes_failed(Edge f, const EdgeState& st) const {
    const Color c = color_of_state(st);
    if (c == kNoColor) return true;
    return index_size(phi_, key3(f.u, st.round, c)) > 1 ||
           index_size(phi_, key3(f.v, st.round, c)) > 1;
}

void PaletteState::set_failed_membership(Edge f, bool now_failed) {
    const bool was_failed = failed_.count(f) != 0;
    if (now_failed == was_failed) return;
    if (now_failed)
        failed_.insert(f);
    else
        failed_.erase(f);
    transitions_.push_back({f, now_failed});
}

void PaletteState::refresh_failed(Edge f) {
    set_failed_membership(f, computes_failed(f, state_of(f)));
}

void PaletteState::insert(Edge e, Round round, std::vector<Color> colors) {
    if (contains(e))
        throw DuplicateEdgeError("edge " + edge_str(e) + " already stored");
    if (round < 1 || round > params_.rounds + 1)
        throw IndexOutOfRangeError("round " + std::to_string(round) +
                                   " outside [1, T+1]");

    EdgeState st;
    st.round = round;
    st.ell = 0;
    st.colors = std::move(colors);
    const auto& seq = edges_.emplace(e, std::move(st)).first->second.colors;

    for (Color c : seq) {
        index_insert(psi_, key3(e.u, round, c), e);
        index_insert(psi_, key3(e.v, round, c), e);
    }
    set_failed_membership(e, true);
}

void PaletteState::erase(Edge e) {
    const EdgeState& st = state_of(e);
    set_color_index(e, 0);  // repairs neighbors' F membership
    const Round round = st.round;
    for (Color c : st.colors) {
        index_erase(psi_, key3(e.u, round, c), e);
        index_erase(psi_, key3(e.v, round, c), e);
    }
    set_failed_membership(e, false);
    edges_.erase(e);
}

void PaletteState::set_color_index(Edge e, ColorIndex ell) {
    EdgeState& st = state_of(e);
    if (ell > st.colors.size())
        throw IndexOutOfRangeError("color index " + std::to_string(ell) +
                                   " exceeds K=" +
                                   std::to_string(st.colors.size()));
    if (ell == st.ell) return;

    const Round i = st.round;
    const Color c_prev = color_of_state(st);
    st.ell = ell;
    const Color c_new = color_of_state(st);

    if (c_prev != kNoColor) {
        for (NodeId x : {e.u, e.v}) {
            index_erase(phi_, key3(x, i, c_prev), e);
            auto it = phi_prime_.find(key2(x, c_prev));
            if (--it->second == 0) phi_prime_.erase(it);
        }
    }
    if (c_new != kNoColor) {
        for (NodeId x : {e.u, e.v}) {
            index_insert(phi_, key3(x, i, c_new), e);
            ++phi_prime_[key2(x, c_new)];
        }
    }

    // Candidate edges whose F membership may flip: e itself, the lone edge
    // that newly conflicts with e's color, and the lone survivor freed by
    // dropping e's previous color, per endpoint.
    Edge candidates[5];
    std::size_t count = 0;
    candidates[count++] = e;
    auto add_set = [&](Color c, std::size_t expected) {
        if (c == kNoColor) return;
        for (NodeId x : {e.u, e.v}) {
            auto it = phi_.find(key3(x, i, c));
            if (it == phi_.end() || it->second.size() != expected) continue;
            for (Edge f : it->second) {
                bool seen = false;
                for (std::size_t k = 0; k < count; ++k)
                    if (candidates[k] == f) seen = true;
                if (!seen) candidates[count++] = f;
            }
        }
    };
    add_set(c_new, 2);
    add_set(c_prev, 1);
    for (std::size_t k = 0; k < count; ++k) refresh_failed(candidates[k]);
}

bool PaletteState::node_palette_query(NodeId u, Round i, Color c,
                                      QueryMode mode) const {
    if (mode == QueryMode::kFirstBuild)
        return phi_prime_count(u, c) == phi_size(u, i, c);
    for (Round r = 1; r < i; ++r)
        if (index_size(phi_, key3(u, r, c)) > 0) return false;
    return true;
}

bool PaletteState::edge_palette_query(Edge e, Round i, Color c,
                                      QueryMode mode) const {
    return node_palette_query(e.u, i, c, mode) &&
           node_palette_query(e.v, i, c, mode);
}

bool PaletteState::reset_color(Edge e, QueryMode mode) {
    const EdgeState& st = state_of(e);
    const ColorIndex prev = st.ell;
    if (st.round <= params_.rounds) {
        for (ColorIndex ell = 1; ell <= st.colors.size(); ++ell) {
            if (edge_palette_query(e, st.round, st.colors[ell - 1], mode)) {
                set_color_index(e, ell);
                return prev != ell;
            }
        }
    }
    set_color_index(e, 0);
    return prev != 0;
}

bool PaletteState::failed_edge_query(Edge e) const {
    state_of(e);  // MissingEdgeError when absent
    return failed_.count(e) != 0;
}

Color PaletteState::color_query(Edge e) const {
    return color_of_state(state_of(e));
}

Round PaletteState::round_of(Edge e) const { return state_of(e).round; }

ColorIndex PaletteState::color_index_of(Edge e) const {
    return state_of(e).ell;
}

const std::vector<Color>& PaletteState::color_sequence_of(Edge e) const {
    return state_of(e).colors;
}

void PaletteState::collect_psi(Edge e, Round i, Color c, EdgeSet& out) const {
    if (c == kNoColor) return;
    for (NodeId x : {e.u, e.v}) {
        auto it = psi_.find(key3(x, i, c));
        if (it == psi_.end()) continue;
        out.insert(it->second.begin(), it->second.end());
    }
}

std::vector<FailedTransition> PaletteState::drain_failed_transitions() {
    std::vector<FailedTransition> out;
    out.swap(transitions_);
    return out;
}

}  // namespace dyncolor
