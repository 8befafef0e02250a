#include <doctest.h>

#include <cmath>
#include <unordered_map>
#include <vector>

#include "dyncolor/randomness.hpp"

using namespace dyncolor;

TEST_CASE("same seed, edge and incarnation reproduce every draw") {
    const Params p = derive_params(0.3, 64);
    EdgeRng a(42, p), b(42, p);
    const Edge e(3, 17);
    CHECK(a.sample_round(e) == b.sample_round(e));
    CHECK(a.sample_partition_index(e) == b.sample_partition_index(e));
    CHECK(a.sample_color_sequence(e) == b.sample_color_sequence(e));
    CHECK(a.sample_color_sequence(e) == a.sample_color_sequence(e));
}

TEST_CASE("incarnation bump refreshes, no bump repeats") {
    const Params p = derive_params(0.3, 64);
    EdgeRng rng(7, p);
    const Edge e(0, 1);
    const auto before = rng.sample_color_sequence(e);
    CHECK(rng.sample_color_sequence(e) == before);
    rng.fresh_incarnation(e);
    CHECK(rng.incarnation_of(e) == 1);
    // K draws over a non-trivial palette collide with negligible odds
    CHECK(rng.sample_color_sequence(e) != before);
}

TEST_CASE("round distribution matches the capped geometric closed form") {
    const Params p = derive_params(0.5, 1u << 30);  // T = 1
    EdgeRng rng(99, p);
    std::size_t ones = 0;
    const std::size_t trials = 200000;
    for (std::size_t k = 0; k < trials; ++k) {
        const Edge e(static_cast<NodeId>(k % 60000),
                     static_cast<NodeId>(60000 + k / 60000));
        const Round r = rng.sample_round(e);
        REQUIRE(r >= 1);
        REQUIRE(r <= 2);
        if (r == 1) ++ones;
    }
    // Pr[1] = eps = 0.5; 3 sigma at 200k trials is ~0.0034
    const double freq = static_cast<double>(ones) / trials;
    CHECK(freq == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("terminal round mass at epsilon=0.1") {
    const Params p = derive_params(0.1, 1000);  // T = 23
    EdgeRng rng(123, p);
    std::size_t terminal = 0;
    const std::size_t trials = 200000;
    for (std::size_t k = 0; k < trials; ++k) {
        const Edge e(static_cast<NodeId>(k % 60000),
                     static_cast<NodeId>(60000 + k / 60000));
        if (rng.sample_round(e) == p.rounds + 1) ++terminal;
    }
    const double expect = std::pow(0.9, 23);  // ~0.0886
    const double freq = static_cast<double>(terminal) / trials;
    CHECK(freq == doctest::Approx(expect).epsilon(0.05));
}

TEST_CASE("single-color palette forces constant sequences") {
    Params p = derive_params(0.5, 8);
    p.sub_palette_size = 1;
    EdgeRng rng(5, p);
    for (Color c : rng.sample_color_sequence(Edge(1, 2))) CHECK(c == 1);
}

TEST_CASE("color sequence entries are uniform in the palette") {
    const Params p = derive_params(0.3, 64);
    REQUIRE(p.sub_palette_size >= 2);
    EdgeRng rng(11, p);
    double sum = 0.0;
    std::size_t count = 0;
    for (std::uint32_t k = 0; k < 20000; ++k) {
        const Edge e(k % 60000, 60000 + k / 60000);
        for (Color c : rng.sample_color_sequence(e)) {
            REQUIRE(c >= 1);
            REQUIRE(c <= p.sub_palette_size);
            sum += c;
            ++count;
        }
    }
    const double mean = sum / static_cast<double>(count);
    const double expect = (p.sub_palette_size + 1) / 2.0;
    // 3 sigma of the sample mean of a discrete uniform
    const double sigma =
        std::sqrt((p.sub_palette_size * p.sub_palette_size - 1) / 12.0 /
                  static_cast<double>(count));
    CHECK(std::abs(mean - expect) < 3.5 * sigma);
}

TEST_CASE("partition index is uniform and collapses at eta=1") {
    Params p1 = derive_params(0.3, 2);
    REQUIRE(p1.subgraph_count == 1);
    EdgeRng r1(3, p1);
    CHECK(r1.sample_partition_index(Edge(0, 1)) == 0);

    Params p4 = derive_params(0.3, 64);
    p4.subgraph_count = 4;
    EdgeRng r4(3, p4);
    std::size_t buckets[4] = {0, 0, 0, 0};
    const std::size_t trials = 100000;
    for (std::size_t k = 0; k < trials; ++k) {
        const Edge e(static_cast<NodeId>(k % 60000),
                     static_cast<NodeId>(60000 + k / 60000));
        ++buckets[r4.sample_partition_index(e)];
    }
    for (std::size_t b = 0; b < 4; ++b) {
        const double freq = static_cast<double>(buckets[b]) / trials;
        CHECK(freq == doctest::Approx(0.25).epsilon(0.02));
    }
}

TEST_CASE("distinct edges never share full sequences in 1e5 trials") {
    const Params p = derive_params(0.3, 64);
    EdgeRng rng(17, p);
    std::unordered_map<std::uint64_t, std::vector<Color>> seen;
    seen.reserve(100000);
    std::size_t collisions = 0;
    for (std::uint32_t k = 0; k < 100000; ++k) {
        const Edge e(k & 0xFFFF, 0x10000 + (k >> 16));
        std::vector<Color> seq = rng.sample_color_sequence(e);
        std::uint64_t digest = 0x243F6A8885A308D3ull;
        for (Color c : seq) digest = mix64(digest ^ c);
        auto it = seen.find(digest);
        if (it == seen.end())
            seen.emplace(digest, std::move(seq));
        else if (it->second == seq)
            ++collisions;
    }
    CHECK(collisions == 0);
}
