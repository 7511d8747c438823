#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mlapd/generators.hpp"
#include "mlapd/hpd.hpp"
#include "mlapd/instance.hpp"
#include "support/corpus.hpp"

using namespace mlapd;

TEST_CASE("generation is deterministic in the seed") {
    for (std::uint64_t seed : {1ull, 7ull, 42ull, 9999ull}) {
        RootedTree t1 = gen_tree(TreeShape::Random, 25, seed);
        RootedTree t2 = gen_tree(TreeShape::Random, 25, seed);
        CHECK(t1 == t2);
        Instance a{t1, gen_requests(t1, 12, Rat(10), Rat(1, 2), seed + 1)};
        Instance b{t2, gen_requests(t2, 12, Rat(10), Rat(1, 2), seed + 1)};
        CHECK(serialize_instance(a) == serialize_instance(b));  // byte-identical
        CHECK(gen_tree(TreeShape::Random, 25, seed + 1) == gen_tree(TreeShape::Random, 25, seed + 1));
    }
}

TEST_CASE("line trees are paths") {
    RootedTree line = gen_tree(TreeShape::Line, 9, 4);
    for (std::uint32_t v = 0; v < line.size(); ++v) CHECK(line.children(v).size() <= 1);
    CHECK(line.depth() == 8);
}

TEST_CASE("caterpillar leaves hang off the spine") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        std::size_t n = 6 + seed % 20;
        RootedTree tree = gen_tree(TreeShape::Caterpillar, n, seed);
        std::size_t spine = (n + 1) / 2;
        for (std::uint32_t v = static_cast<std::uint32_t>(spine); v < n; ++v) {
            CHECK(tree.is_leaf(v));
            CHECK(*tree.parent(v) < spine);
        }
        CHECK(min_caterpillar_decomposition(tree).dimension <= 2);
    }
}

TEST_CASE("lobster pendant paths have length at most two") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        std::size_t n = 8 + seed % 24;
        RootedTree tree = gen_tree(TreeShape::Lobster, n, seed);
        std::size_t spine = (n + 2) / 3;
        for (std::uint32_t v = static_cast<std::uint32_t>(spine); v < n; ++v) {
            // distance from v up to the spine is 1 or 2
            std::uint32_t p = *tree.parent(v);
            bool near = p < spine || *tree.parent(p) < spine;
            CHECK(near);
        }
        CHECK(min_caterpillar_decomposition(tree).dimension <= 3);
    }
}

TEST_CASE("perfect binary shape") {
    RootedTree tree = gen_tree(TreeShape::PerfectBinary, 15, 2);
    CHECK(tree.depth() == 3);
    for (std::uint32_t v = 0; v < 7; ++v) CHECK(tree.children(v).size() == 2);
}

TEST_CASE("requests: counts, windows and distinct times") {
    RootedTree tree = gen_tree(TreeShape::Random, 12, 5);
    CHECK(gen_requests(tree, 0, Rat(10), Rat(1), 1).empty());

    auto requests = gen_requests(tree, 30, Rat(10), Rat(1), 99);
    CHECK(requests.size() == 30);
    std::set<Rat> times;
    for (const auto& req : requests) {
        CHECK(req.arrival >= 0);
        CHECK(req.arrival <= req.deadline);
        CHECK(tree.index_of(req.vertex).has_value());
        times.insert(req.arrival);
        times.insert(req.deadline);
    }
    CHECK(times.size() == 60);  // all arrivals and deadlines pairwise distinct
}

TEST_CASE("tiny windows give near-point requests") {
    RootedTree tree = gen_tree(TreeShape::Random, 8, 3);
    auto requests = gen_requests(tree, 10, Rat(5), Rat(0), 17);
    for (const auto& req : requests)
        CHECK(req.deadline - req.arrival == Rat(1, kJitterDenominator));
}

TEST_CASE("generated instances survive the parse round trip") {
    for (const auto& spec : mlapd::testing::tiny_corpus()) {
        Instance inst = mlapd::testing::make_instance(spec);
        CHECK(parse_instance(serialize_instance(inst)) == inst);
    }
}

TEST_CASE("shape names round-trip") {
    for (TreeShape shape : mlapd::testing::kShapeCycle)
        CHECK(parse_shape(shape_name(shape)) == shape);
    CHECK(!parse_shape("triangle").has_value());
}

TEST_CASE("size validation") {
    CHECK_THROWS_AS(gen_tree(TreeShape::Line, 0, 1), std::invalid_argument);
}
