#include "dyncolor/stream.hpp"

#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string_view>

#include "dyncolor/errors.hpp"
#include "dyncolor/graph.hpp"
#include "dyncolor/randomness.hpp"

namespace dyncolor {

namespace {

// Applies each update to a scratch graph so range, liveness and bound
// violations surface with their line numbers.
class StreamValidator {
public:
    StreamValidator(NodeId n, std::uint32_t delta_cap)
        : graph_(n, delta_cap) {}

    void apply(const StreamUpdate& u, std::size_t line) {
        try {
            if (u.insert)
                graph_.insert_edge(u.edge);
            else
                graph_.delete_edge(u.edge);
        } catch (const std::exception& ex) {
            throw StreamParseError(line, ex.what());
        }
    }

private:
    DynGraph graph_;
};

}  // namespace

StreamFile parse_stream(std::istream& in) {
    StreamFile stream;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    StreamValidator* validator = nullptr;
    std::optional<StreamValidator> validator_storage;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        while (!view.empty() && (view.back() == '\r' || view.back() == ' '))
            view.remove_suffix(1);
        if (view.empty() || view.front() == '#') continue;

        std::istringstream fields{std::string(view)};
        if (!have_header) {
            std::string kw_n, kw_delta;
            long long n = -1, delta = -1;
            fields >> kw_n >> n >> kw_delta >> delta;
            if (fields.fail() || kw_n != "n" || kw_delta != "delta" ||
                n <= 0 || delta <= 0)
                throw StreamParseError(line_no,
                                       "expected header `n <n> delta <D>`");
            stream.node_count = static_cast<NodeId>(n);
            stream.delta_cap = static_cast<std::uint32_t>(delta);
            validator_storage.emplace(stream.node_count, stream.delta_cap);
            validator = &*validator_storage;
            have_header = true;
            continue;
        }

        char op = 0;
        long long u = -1, v = -1;
        fields >> op >> u >> v;
        if (fields.fail() || (op != '+' && op != '-'))
            throw StreamParseError(line_no, "expected `+ u v` or `- u v`");
        std::string extra;
        if (fields >> extra)
            throw StreamParseError(line_no, "trailing tokens");
        if (u < 0 || v < 0 || u == v)
            throw StreamParseError(line_no, "bad node pair");

        StreamUpdate update{op == '+', Edge(static_cast<NodeId>(u),
                                            static_cast<NodeId>(v))};
        validator->apply(update, line_no);
        stream.updates.push_back(update);
    }
    if (!have_header)
        throw StreamParseError(line_no, "missing header line");
    return stream;
}

StreamFile parse_stream_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StreamParseError(0, "cannot open " + path);
    return parse_stream(in);
}

void write_stream(const StreamFile& stream, std::ostream& out) {
    out << "n " << stream.node_count << " delta " << stream.delta_cap
        << "\n";
    for (const StreamUpdate& u : stream.updates)
        out << (u.insert ? '+' : '-') << ' ' << u.edge.u << ' ' << u.edge.v
            << "\n";
}

void write_stream_file(const StreamFile& stream, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgsError("cannot write " + path);
    write_stream(stream, out);
}

namespace {

// Random-attachment forest: visit nodes in a shuffled order and hang each
// one off a random earlier node with spare degree. Acyclic at every
// prefix and immune to the dead ends rejection sampling hits near a
// spanning tree.
void generate_forest(StreamFile& stream, CounterRng& rng, NodeId n,
                     std::uint32_t delta, std::size_t count) {
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (NodeId i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng.uniform(0, i)]);

    DynGraph graph(n, delta);
    for (std::size_t i = 1; i <= count; ++i) {
        const NodeId u = order[i];
        NodeId v = order[rng.uniform(0, i - 1)];
        if (graph.degree(v) >= delta) {
            bool found = false;
            for (std::size_t probe = 0; probe < i && !found; ++probe) {
                v = order[rng.uniform(0, i - 1)];
                found = graph.degree(v) < delta;
            }
            if (!found)
                for (std::size_t k = 0; k < i && !found; ++k)
                    if (graph.degree(order[k]) < delta) {
                        v = order[k];
                        found = true;
                    }
            if (!found)
                throw InvalidArgsError(
                    "forest generator saturated by the degree bound");
        }
        graph.insert_edge(Edge(u, v));
        stream.updates.push_back({true, Edge(u, v)});
    }
}

}  // namespace

StreamFile generate_stream(const GenOptions& options) {
    const NodeId n = options.node_count;
    const std::uint32_t delta = options.delta_cap;
    if (n < 2 || delta < 1)
        throw InvalidArgsError("need node_count >= 2 and delta_cap >= 1");
    if (options.kind == StreamKind::kForest && options.count > n - 1)
        throw InvalidArgsError("a forest on n nodes has at most n-1 edges");
    const std::size_t capacity =
        std::min<std::size_t>(static_cast<std::size_t>(n) * delta / 2,
                              static_cast<std::size_t>(n) * (n - 1) / 2);
    if (options.kind != StreamKind::kChurn && options.count > capacity)
        throw InvalidArgsError("more insertions than the degree bound admits");
    if (options.delete_fraction < 0.0 || options.delete_fraction >= 1.0)
        throw InvalidArgsError("delete_fraction must lie in [0, 1)");

    StreamFile stream;
    stream.node_count = n;
    stream.delta_cap = delta;

    CounterRng rng(mix64(options.seed ^ 0x73747265616Dull));
    if (options.kind == StreamKind::kForest) {
        generate_forest(stream, rng, n, delta, options.count);
        return stream;
    }

    DynGraph graph(n, delta);
    std::vector<Edge> live;

    auto random_node = [&] { return static_cast<NodeId>(rng.uniform(0, n - 1)); };

    auto try_insert = [&](bool low_degree_bias) -> bool {
        for (int attempt = 0; attempt < 4096; ++attempt) {
            NodeId u = random_node();
            NodeId v = random_node();
            if (low_degree_bias) {
                // steer toward under-filled nodes to approach delta-regular
                NodeId u2 = random_node(), v2 = random_node();
                if (graph.degree(u2) < graph.degree(u)) u = u2;
                if (graph.degree(v2) < graph.degree(v)) v = v2;
            }
            if (u == v) continue;
            Edge e(u, v);
            if (graph.has_edge(e)) continue;
            if (graph.degree(u) >= delta || graph.degree(v) >= delta)
                continue;
            graph.insert_edge(e);
            live.push_back(e);
            stream.updates.push_back({true, e});
            return true;
        }
        return false;
    };

    const bool biased = options.kind == StreamKind::kRegularish;

    while (stream.updates.size() < options.count) {
        const bool want_delete =
            options.kind == StreamKind::kChurn && !live.empty() &&
            (rng.next_double() < options.delete_fraction ||
             graph.edge_count() == capacity);
        if (want_delete) {
            const std::size_t k = rng.uniform(0, live.size() - 1);
            Edge e = live[k];
            live[k] = live.back();
            live.pop_back();
            graph.delete_edge(e);
            stream.updates.push_back({false, e});
        } else if (!try_insert(biased)) {
            throw InvalidArgsError(
                "generator saturated after " +
                std::to_string(stream.updates.size()) + " updates");
        }
    }
    return stream;
}

}  // namespace dyncolor
