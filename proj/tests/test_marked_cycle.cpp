#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dpillar/marked_cycle.hpp"
#include "dpillar/oracle.hpp"
#include "dpillar/routing.hpp"

using namespace dpillar;

TEST_CASE("move string parsing accepts both notations") {
    const MoveString plain = parse_moves("ccbaaadc");
    const MoveString powers = parse_moves("c2ba3dc1");
    CHECK(plain == powers);
    CHECK(format_moves(plain) == "c2ba3dc");
    CHECK(format_moves_plain(plain) == "ccbaaadc");
    CHECK(parse_moves(format_moves(plain)) == plain);

    CHECK_THROWS_AS(parse_moves("cxa"), std::invalid_argument);
    CHECK_THROWS_AS(parse_moves("c0"), std::invalid_argument);
}

TEST_CASE("format/parse round trip on random strings") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> len(1, 20), move(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        MoveString moves;
        for (int i = 0; i < len(rng); ++i) moves.push_back(static_cast<Move>(move(rng)));
        CHECK(parse_moves(format_moves(moves)) == moves);
        CHECK(parse_moves(format_moves_plain(moves)) == moves);
    }
}

TEST_CASE("apply_moves follows the position and coverage rules") {
    {
        const auto out = apply_moves(3, parse_moves("dc"));
        CHECK(out.final_node == 1);
        CHECK(out.covered == 0b101);  // d covers k-1 = 2, c covers 0
    }
    {
        const auto out = apply_moves(5, parse_moves("c5"));
        CHECK(out.final_node == 0);
        CHECK(out.covered == 0b11111);
    }
    {
        const auto out = apply_moves(4, parse_moves("ba"));
        CHECK(out.final_node == 3);
        CHECK(out.covered == 0b1001);
    }
}

TEST_CASE("validity needs a nonempty string, the right endpoint and full coverage") {
    const MarkedCycle cycle{3, 1, 0b100};
    CHECK(!is_valid(cycle, MoveString{}));
    CHECK(is_valid(cycle, parse_moves("dc")));
    CHECK(is_valid(cycle, parse_moves("aa")));
    CHECK(!is_valid(cycle, parse_moves("c")));   // ends at 1 but misses node 2
    CHECK(!is_valid(cycle, parse_moves("ad")));  // covers 2 twice, ends at 2
}

TEST_CASE("turn counting") {
    CHECK(count_turns(parse_moves("cba")) == 1);
    CHECK(count_turns(parse_moves("c2ba3dc")) == 2);
    CHECK(count_turns(parse_moves("a2dc3")) == 1);
    CHECK(count_turns(parse_moves("cb")) == 0);
    CHECK(count_turns(parse_moves("cbadc")) == 2);  // overlapping at the a-move
}

TEST_CASE("canonicalize on already-canonical sources") {
    const TopologyParams params = make_params(6, 3);
    {
        const MarkedCycle cycle = canonicalize(parse_server("0:0.0.0", params),
                                               parse_server("1:1.0.0", params), params);
        CHECK(cycle.x == 1);
        CHECK(cycle.marks == 0b100);
    }
    {
        const MarkedCycle cycle = canonicalize(parse_server("0:0.0.0", params),
                                               parse_server("0:0.0.1", params), params);
        CHECK(cycle.x == 0);
        CHECK(cycle.marks == 0b001);
    }
    CHECK_THROWS_WITH_AS(canonicalize(parse_server("1:0.2.1", params),
                                      parse_server("1:0.2.1", params), params),
                         "identical endpoints", std::invalid_argument);
}

TEST_CASE("canonicalize rotates positions as well as columns") {
    const TopologyParams params = make_params(6, 3);
    const ServerId src = parse_server("1:0.0.1", params);
    const ServerId dst = parse_server("2:1.0.1", params);
    const MarkedCycle cycle = canonicalize(src, dst, params);
    CHECK(cycle.x == 1);
    CHECK(cycle.marks == 0b010);  // absolute position 2 lands on cycle node 1

    // The transform must preserve distances: check against BFS ground truth.
    const DistanceMap map = bfs_distances(src, params);
    CHECK(dpillar_min_length(cycle) == map.at(dst, params));
}

TEST_CASE("canonicalized distance equals BFS distance for every pair") {
    const TopologyParams params = make_params(6, 3);
    for (const ServerId& src : enumerate_servers(params)) {
        const DistanceMap map = bfs_distances(src, params);
        for (const ServerId& dst : enumerate_servers(params)) {
            if (src == dst) continue;
            const MarkedCycle cycle = canonicalize(src, dst, params);
            CHECK(dpillar_min_length(cycle) == map.at(dst, params));
        }
    }
}

TEST_CASE("digit differences use modular subtraction") {
    // h = 3: digit 2 -> 1 wraps to a difference of 2, still just "marked".
    const TopologyParams params = make_params(6, 4);
    const ServerId src = parse_server("3:2.1.0.2", params);
    const ServerId dst = parse_server("0:1.1.0.2", params);
    const MarkedCycle cycle = canonicalize(src, dst, params);
    CHECK(cycle.x == 1);
    CHECK(cycle.marks == (std::uint64_t{1} << ((3 - src.column + 4) % 4)));
}
