#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dyncolor/types.hpp"

namespace dyncolor {

struct StreamUpdate {
    bool insert;  // false = delete
    Edge edge;
};

// Update stream with a fixed node count and promised degree bound.
// Text form: header `n <n> delta <D>`, then one `+ u v` / `- u v` per
// line; `#` starts a comment line.
struct StreamFile {
    NodeId node_count = 0;
    std::uint32_t delta_cap = 0;
    std::vector<StreamUpdate> updates;
};

// Parses and validates: ids in range, deletes hit live edges, inserts
// respect the degree bound. Throws StreamParseError with a line number.
StreamFile parse_stream(std::istream& in);
StreamFile parse_stream_file(const std::string& path);

void write_stream(const StreamFile& stream, std::ostream& out);
void write_stream_file(const StreamFile& stream, const std::string& path);

enum class StreamKind { kRandom, kForest, kRegularish, kChurn };

struct GenOptions {
    StreamKind kind = StreamKind::kRandom;
    NodeId node_count = 0;
    std::uint32_t delta_cap = 0;
    std::size_t count = 0;        // number of updates to emit
    std::uint64_t seed = 0;
    double delete_fraction = 0.3; // churn only
};

// Generates a valid stream. kRandom/kForest/kRegularish are insert-only;
// kChurn mixes deletions of live edges at the given rate. Throws
// InvalidArgsError when the request cannot be met (e.g. a forest with
// more than n-1 edges).
StreamFile generate_stream(const GenOptions& options);

}  // namespace dyncolor
