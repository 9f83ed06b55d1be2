#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "dpillar/topology.hpp"

using namespace dpillar;

namespace {

ServerId server_of(const std::string& text, const TopologyParams& params) {
    return parse_server(text, params);
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(make_params(2, 2));
    CHECK_NOTHROW(make_params(128, 3));
    CHECK_THROWS_AS(make_params(5, 3), std::invalid_argument);   // odd n
    CHECK_THROWS_AS(make_params(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_params(16, 1), std::invalid_argument);  // k too small
    CHECK_THROWS_AS(make_params(16, 65), std::invalid_argument);
}

TEST_CASE("server and switch counts") {
    CHECK(make_params(16, 3).server_count() == 1536);
    CHECK(make_params(128, 3).server_count() == 786432);
    const TopologyParams tiny = make_params(4, 2);
    CHECK(tiny.server_count() == 8);
    CHECK(tiny.switch_count() == 4);
    CHECK(count_links(tiny) == 16);
}

TEST_CASE("textual round trip") {
    const TopologyParams params = make_params(12, 5);
    const ServerId s = server_of("1:1.2.5.3.0", params);
    CHECK(s.column == 1);
    CHECK(s.row[4] == 1);
    CHECK(s.row[0] == 0);
    CHECK(format_server(s) == "1:1.2.5.3.0");

    CHECK_THROWS_AS(parse_server("1:1.2.5.3", params), std::invalid_argument);   // short
    CHECK_THROWS_AS(parse_server("1:1.2.9.3.0", params), std::invalid_argument); // digit >= h
    CHECK_THROWS_AS(parse_server("nope", params), std::invalid_argument);
    CHECK_THROWS_AS(parse_server("7:0.0.0.0.0", params), std::invalid_argument); // column
}

TEST_CASE("adjacent switches") {
    const TopologyParams p63 = make_params(6, 3);
    const auto [right, left] = adjacent_switches(server_of("2:0.0.0", p63), p63);
    CHECK(right.column == 2);
    CHECK(format_switch(right) == "2:0.0");
    CHECK(left.column == 1);
    CHECK(format_switch(left) == "1:0.0");

    // All-zero row: digit deletion leaves zeros either side.
    const auto [r0, l0] = adjacent_switches(server_of("0:0.0.0", p63), p63);
    CHECK(format_switch(r0) == "0:0.0");
    CHECK(format_switch(l0) == "2:0.0");

    const TopologyParams p125 = make_params(12, 5);
    const auto [r1, l1] = adjacent_switches(server_of("1:1.2.5.3.0", p125), p125);
    CHECK(l1.column == 0);
    CHECK(format_switch(l1) == "0:1.2.5.3");
    // That switch also serves every (0, 1.2.5.3.x).
    for (int digit = 0; digit < p125.h(); ++digit) {
        ServerId other = server_of("0:1.2.5.3.0", p125);
        other.row[0] = static_cast<std::uint8_t>(digit);
        const auto [ro, lo] = adjacent_switches(other, p125);
        CHECK(ro == l1);
    }
}

TEST_CASE("neighbor moves") {
    const TopologyParams p63 = make_params(6, 3);
    CHECK(neighbor(server_of("0:0.0.0", p63), EdgeKind::DecrementedStatic, 1, p63) ==
          server_of("0:1.0.0", p63));
    CHECK(neighbor(server_of("0:1.0.0", p63), EdgeKind::Clockwise, 0, p63) ==
          server_of("1:1.0.0", p63));

    const TopologyParams p125 = make_params(12, 5);
    CHECK(neighbor(server_of("1:1.2.5.3.0", p125), EdgeKind::BasicStatic, 1, p125) ==
          server_of("1:1.2.5.1.0", p125));
    CHECK(neighbor(server_of("1:1.2.5.3.0", p125), EdgeKind::AntiClockwise, 4, p125) ==
          server_of("0:1.2.5.3.4", p125));
    CHECK(neighbor(server_of("1:1.2.5.3.0", p125), EdgeKind::Clockwise, 1, p125) ==
          server_of("2:1.2.5.1.0", p125));

    CHECK_THROWS_AS(neighbor(server_of("0:0.0.0", p63), EdgeKind::BasicStatic, 0, p63),
                    std::invalid_argument);  // degenerate
    CHECK_THROWS_AS(neighbor(server_of("0:0.0.0", p63), EdgeKind::Clockwise, 3, p63),
                    std::invalid_argument);  // digit out of range
}

TEST_CASE("edges pair up with their inverses") {
    const TopologyParams params = make_params(6, 4);
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<std::uint64_t> pick(0, params.server_count() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        const ServerId s = server_from_index(pick(rng), params);
        const int k = params.k;
        for (int digit = 0; digit < params.h(); ++digit) {
            // c then a restores the overwritten digit; likewise b/b and d/d.
            const ServerId via_c = neighbor(s, EdgeKind::Clockwise, digit, params);
            CHECK(neighbor(via_c, EdgeKind::AntiClockwise, s.row[s.column], params) == s);
            const ServerId via_a = neighbor(s, EdgeKind::AntiClockwise, digit, params);
            CHECK(neighbor(via_a, EdgeKind::Clockwise, s.row[(s.column + k - 1) % k], params) == s);
            if (digit != s.row[s.column]) {
                const ServerId via_b = neighbor(s, EdgeKind::BasicStatic, digit, params);
                CHECK(neighbor(via_b, EdgeKind::BasicStatic, s.row[s.column], params) == s);
            }
            if (digit != s.row[(s.column + k - 1) % k]) {
                const ServerId via_d = neighbor(s, EdgeKind::DecrementedStatic, digit, params);
                CHECK(neighbor(via_d, EdgeKind::DecrementedStatic,
                               s.row[(s.column + k - 1) % k], params) == s);
            }
        }
    }
}

TEST_CASE("every neighbor shares a switch and the degree is 2n-2") {
    for (const auto [n, k] : {std::pair{4, 2}, std::pair{6, 3}, std::pair{4, 4}}) {
        const TopologyParams params = make_params(n, k);
        for (const ServerId& s : enumerate_servers(params)) {
            const auto [right, left] = adjacent_switches(s, params);
            std::set<std::pair<int, std::uint64_t>> edges;
            std::set<std::uint64_t> targets;
            for (int digit = 0; digit < params.h(); ++digit) {
                for (const EdgeKind kind :
                     {EdgeKind::Clockwise, EdgeKind::AntiClockwise, EdgeKind::BasicStatic,
                      EdgeKind::DecrementedStatic}) {
                    const bool static_kind = kind == EdgeKind::BasicStatic ||
                                             kind == EdgeKind::DecrementedStatic;
                    const int pos = (kind == EdgeKind::Clockwise || kind == EdgeKind::BasicStatic)
                                        ? s.column
                                        : (s.column + k - 1) % k;
                    if (static_kind && s.row[pos] == digit) continue;
                    const ServerId t = neighbor(s, kind, digit, params);
                    edges.emplace(static_cast<int>(kind), server_index(t, params));
                    targets.insert(server_index(t, params));

                    const auto [t_right, t_left] = adjacent_switches(t, params);
                    const bool uses_right = kind == EdgeKind::Clockwise ||
                                            kind == EdgeKind::BasicStatic;
                    const SwitchId& shared = uses_right ? right : left;
                    CHECK((t_right == shared || t_left == shared));
                }
            }
            // Edges are server-switch-server paths, so they stay distinct per
            // kind. For k = 2 exactly one pair of them is parallel: the
            // row-preserving c- and a-edges both land on the same server of
            // the other column (through different switches).
            CHECK(edges.size() == static_cast<std::size_t>(2 * n - 2));
            const std::size_t expected_targets = k == 2 ? 2 * n - 3 : 2 * n - 2;
            CHECK(targets.size() == expected_targets);
        }
    }
}

TEST_CASE("index round trip covers the whole instance") {
    const TopologyParams params = make_params(6, 3);
    std::uint64_t count = 0;
    for (const ServerId& s : enumerate_servers(params)) {
        CHECK(server_from_index(server_index(s, params), params) == s);
        ++count;
    }
    CHECK(count == params.server_count());
}
