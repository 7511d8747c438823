#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mlapd/generators.hpp"
#include "mlapd/instance.hpp"
#include "mlapd/solution.hpp"
#include "support/fixtures.hpp"

using namespace mlapd;
using mlapd::testing::demo11;

TEST_CASE("demo fixture parses with the expected shape") {
    Instance inst = demo11();
    CHECK(inst.tree.size() == 11);
    CHECK(inst.tree.depth() == 3);
    CHECK(inst.requests.size() == 9);
    CHECK(inst.tree.cost(*inst.tree.index_of(10)) == Rat(60));
    CHECK(inst.tree.id_at(inst.tree.root()) == 0);
}

TEST_CASE("single root, no requests") {
    Instance inst = parse_instance(std::string("tree 1\nv 0 - 5\n"));
    CHECK(inst.tree.size() == 1);
    CHECK(inst.requests.empty());
    CHECK(inst.tree.cost(0) == Rat(5));
    CHECK(inst.tree.depth() == 0);
}

TEST_CASE("parse errors carry line and column") {
    // unknown parent
    try {
        parse_instance(std::string("tree 2\nv 0 - 1\nv 3 9 1\n"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("unknown parent id 9") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_instance(std::string("tree 2\nv 0 - 1\nv 1 - 1\n")), ParseError);  // two roots
    CHECK_THROWS_AS(parse_instance(std::string("tree 2\nv 0 - 1\nv 0 0 1\n")), ParseError);  // dup vertex
    CHECK_THROWS_AS(parse_instance(std::string("tree 1\nv 0 - -2\n")), ParseError);          // negative cost
    CHECK_THROWS_AS(parse_instance(std::string("tree 1\nv 0 - 1\nr 1 0 5 4\n")), ParseError);  // a > d
    CHECK_THROWS_AS(parse_instance(std::string("tree 1\nv 0 - 1\nr 1 0 0 1\nr 1 0 0 2\n")),
                    ParseError);  // dup request id
    CHECK_THROWS_AS(parse_instance(std::string("tree 1\nv 0 - 1\nr 1 7 0 1\n")), ParseError);  // bad vertex
    CHECK_THROWS_AS(parse_instance(std::string("")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("tree 0\n")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("tree 2\nv 0 - 1\n")), ParseError);  // truncated
    CHECK_THROWS_AS(parse_instance(std::string("tree 1\nv 0 - 1\nx y\n")), ParseError);
}

TEST_CASE("comments and fractional numbers") {
    Instance inst = parse_instance(std::string(
        "# header\ntree 2  # two vertices\nv 0 - 3.25\nv 1 0 13/4\nr 1 1 0.5 7/2\n"));
    CHECK(inst.tree.cost(0) == Rat(13, 4));
    CHECK(inst.tree.cost(1) == Rat(13, 4));
    CHECK(inst.requests[0].arrival == Rat(1, 2));
    CHECK(inst.requests[0].deadline == Rat(7, 2));
}

TEST_CASE("parse is insensitive to vertex declaration order") {
    Instance inst = parse_instance(std::string("tree 3\nv 2 1 1\nv 1 0 1\nv 0 - 1\n"));
    CHECK(inst.tree.size() == 3);
    CHECK(inst.tree.depth() == 2);
}

TEST_CASE("round-trip: parse(serialize(x)) == x") {
    Instance fixture = demo11();
    CHECK(parse_instance(serialize_instance(fixture)) == fixture);

    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        RootedTree tree = gen_tree(TreeShape::Random, 1 + seed % 17, seed);
        auto requests = gen_requests(tree, seed % 9, Rat(10), Rat(1, 2), seed + 7);
        Instance inst{std::move(tree), std::move(requests)};
        CHECK(parse_instance(serialize_instance(inst)) == inst);
    }
}

TEST_CASE("edge-weighted reduction") {
    // path r -(3)- a -(5)- b
    std::vector<EdgeWeightedVertex> path{{0, std::nullopt, Rat(0)}, {1, 0, Rat(3)}, {2, 1, Rat(5)}};
    RootedTree reduced = reduce_edge_weighted(path);
    CHECK(reduced.size() == 2);
    CHECK(reduced.id_at(reduced.root()) == 1);
    CHECK(reduced.cost(*reduced.index_of(1)) == Rat(3));
    CHECK(reduced.cost(*reduced.index_of(2)) == Rat(5));

    // single edge r -(7)- a
    std::vector<EdgeWeightedVertex> single{{0, std::nullopt, Rat(0)}, {1, 0, Rat(7)}};
    RootedTree one = reduce_edge_weighted(single);
    CHECK(one.size() == 1);
    CHECK(one.cost(0) == Rat(7));

    // star root must be split by the caller first
    std::vector<EdgeWeightedVertex> star{
        {0, std::nullopt, Rat(0)}, {1, 0, Rat(1)}, {2, 0, Rat(2)}, {3, 0, Rat(3)}};
    CHECK_THROWS_AS(reduce_edge_weighted(star), ValidationError);
}

TEST_CASE("validate_solution accepts the published four-transmission schedule") {
    Instance inst = demo11();
    Solution sol;
    sol.transmissions.push_back({Rat(1), {0, 2, 3}});
    sol.transmissions.push_back({Rat(3), {0, 1, 2, 5, 7}});
    sol.transmissions.push_back({Rat(5), {0, 1, 5, 9}});
    sol.transmissions.push_back({Rat(7), {0, 1, 4, 5, 8, 10}});
    sol.total_cost = Rat(3 + 21 + 25 + 81);
    FeasibilityReport report = validate_solution(inst, sol);
    CHECK(report.feasible);
    CHECK(report.structure_ok);
    for (const auto& verdict : report.requests) CHECK(verdict.servable);
}

TEST_CASE("validate_solution flags emptiness and broken structure") {
    Instance inst = demo11();

    FeasibilityReport empty = validate_solution(inst, Solution{});
    CHECK(!empty.feasible);
    int unserved = 0;
    for (const auto& verdict : empty.requests)
        if (!verdict.servable) ++unserved;
    CHECK(unserved == 9);

    // a "transmission" omitting the root is a connectivity violation
    Solution rootless;
    rootless.transmissions.push_back({Rat(1), {2}});
    rootless.total_cost = Rat(1);
    FeasibilityReport report = validate_solution(inst, rootless);
    CHECK(!report.structure_ok);
    bool mentions_root = false;
    for (const auto& issue : report.issues)
        if (issue.find("root") != std::string::npos) mentions_root = true;
    CHECK(mentions_root);

    // wrong stored cost
    Solution badcost;
    badcost.transmissions.push_back({Rat(1), {0}});
    badcost.total_cost = Rat(2);
    CHECK(!validate_solution(inst, badcost).structure_ok);

    // non-increasing times
    Solution stuck;
    stuck.transmissions.push_back({Rat(2), {0}});
    stuck.transmissions.push_back({Rat(2), {0}});
    stuck.total_cost = Rat(2);
    CHECK(!validate_solution(inst, stuck).structure_ok);
}

TEST_CASE("solution serialization") {
    Solution sol;
    sol.transmissions.push_back({Rat(1), {0, 2, 3}});
    sol.transmissions.push_back({Rat(7, 2), {0, 1}});
    CHECK(serialize_solution(sol) == "t 1 : 0 2 3\nt 7/2 : 0 1\n");
}
