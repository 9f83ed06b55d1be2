#include "dpillar/oracle.hpp"

#include <algorithm>
#include <array>

namespace dpillar {

namespace {

struct IndexedTopology {
    int k = 0;
    int h = 0;
    std::uint64_t rows = 0;  // h^k
    std::array<std::uint64_t, 65> weight{};

    explicit IndexedTopology(const TopologyParams& params) : k(params.k), h(params.h()) {
        weight[0] = 1;
        for (int i = 0; i < k; ++i) weight[i + 1] = weight[i] * h;
        rows = weight[k];
    }

    void decode(std::uint64_t index, int& col, std::uint8_t* digits) const {
        col = static_cast<int>(index / rows);
        std::uint64_t value = index % rows;
        for (int i = 0; i < k; ++i) {
            digits[i] = static_cast<std::uint8_t>(value % h);
            value /= h;
        }
    }

    template <class Fn>
    void for_each_neighbor(std::uint64_t index, Fn&& fn) const {
        std::array<std::uint8_t, 64> digits;
        int col = 0;
        decode(index, col, digits.data());
        const std::uint64_t value = index % rows;
        const int prev = (col + k - 1) % k;
        const std::uint64_t cw_base =
            static_cast<std::uint64_t>((col + 1) % k) * rows + value -
            digits[col] * weight[col];
        const std::uint64_t acw_base =
            static_cast<std::uint64_t>(prev) * rows + value - digits[prev] * weight[prev];
        const std::uint64_t b_base = index - digits[col] * weight[col];
        const std::uint64_t d_base = index - digits[prev] * weight[prev];
        for (int q = 0; q < h; ++q) {
            fn(cw_base + q * weight[col]);
            fn(acw_base + q * weight[prev]);
            if (q != digits[col]) fn(b_base + q * weight[col]);
            if (q != digits[prev]) fn(d_base + q * weight[prev]);
        }
    }
};

}  // namespace

std::int32_t DistanceMap::max() const {
    std::int32_t best = -1;
    for (std::int32_t d : dist) best = std::max(best, d);
    return best;
}

DistanceMap bfs_distances(const ServerId& src, const TopologyParams& params,
                          std::uint64_t node_budget) {
    params.validate();
    validate_server(src, params);
    const std::uint64_t n_nodes = params.server_count();
    if (n_nodes > node_budget) {
        throw std::invalid_argument("instance has " + std::to_string(n_nodes) +
                                    " servers, above the node budget of " +
                                    std::to_string(node_budget));
    }

    const IndexedTopology topo(params);
    DistanceMap map;
    map.source = src;
    map.dist.assign(n_nodes, -1);

    std::vector<std::uint32_t> frontier, next;
    frontier.push_back(static_cast<std::uint32_t>(server_index(src, params)));
    map.dist[frontier.front()] = 0;
    std::int32_t depth = 0;
    while (!frontier.empty()) {
        ++depth;
        next.clear();
        for (std::uint32_t node : frontier) {
            topo.for_each_neighbor(node, [&](std::uint64_t to) {
                if (map.dist[to] < 0) {
                    map.dist[to] = depth;
                    next.push_back(static_cast<std::uint32_t>(to));
                }
            });
        }
        frontier.swap(next);
    }
    return map;
}

namespace {

// Local fold of the cycle move rules, kept separate from apply_moves so the
// exhaustive search does not share code with what it is used to check.
// Moves are numbered in letter order: 0=a, 1=b, 2=c, 3=d.
void cycle_step(int k, int move_id, int& pos, std::uint32_t& covered) {
    switch (move_id) {
        case 0:  // a: retreat, covering the node arrived at
            pos = (pos + k - 1) % k;
            covered |= 1u << pos;
            break;
        case 1:  // b: stay, covering the current node
            covered |= 1u << pos;
            break;
        case 2:  // c: cover the current node, then advance
            covered |= 1u << pos;
            pos = (pos + 1) % k;
            break;
        case 3:  // d: stay, covering the anticlockwise neighbour
            covered |= 1u << ((pos + k - 1) % k);
            break;
    }
}

constexpr std::array<Move, 4> kMoveById = {Move::A, Move::B, Move::C, Move::D};

}  // namespace

CycleMinResult exhaustive_cycle_min(const MarkedCycle& cycle, int max_len) {
    if (cycle.k < 2 || cycle.k > 8) {
        throw std::invalid_argument("exhaustive search supports 2 <= k <= 8");
    }
    if (max_len < 1 || max_len > 2 * cycle.k) {
        throw std::invalid_argument("max_len must be in [1, 2k]");
    }
    const int k = cycle.k;
    const std::uint32_t cover_all = (1u << k) - 1;
    const std::uint32_t marks = static_cast<std::uint32_t>(cycle.marks & cover_all);
    const int n_states = k << k;  // state = pos * 2^k + covered

    auto state_of = [&](int pos, std::uint32_t cov) { return (pos << k) | static_cast<int>(cov); };

    // Distance-to-goal over the (position, covered) product graph, from every
    // accepting state (at x with all marks covered) backwards.
    std::vector<std::vector<int>> preds(n_states);
    for (int st = 0; st < n_states; ++st) {
        const int pos = st >> k;
        const std::uint32_t cov = static_cast<std::uint32_t>(st) & cover_all;
        for (int m = 0; m < 4; ++m) {
            int p = pos;
            std::uint32_t c = cov;
            cycle_step(k, m, p, c);
            preds[state_of(p, c)].push_back(st);
        }
    }
    std::vector<int> goal_dist(n_states, -1);
    std::vector<int> frontier, next;
    for (std::uint32_t cov = 0; cov <= cover_all; ++cov) {
        if ((marks & ~cov) == 0) {
            const int st = state_of(cycle.x, cov);
            goal_dist[st] = 0;
            frontier.push_back(st);
        }
    }
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        next.clear();
        for (int st : frontier) {
            for (int pred : preds[st]) {
                if (goal_dist[pred] < 0) {
                    goal_dist[pred] = depth;
                    next.push_back(pred);
                }
            }
        }
        frontier.swap(next);
    }

    CycleMinResult result;
    const int start = state_of(0, 0);
    const int shortest = goal_dist[start];
    // An empty move string is never a legitimate path; with x = 0 the start
    // state is never accepting because the cycle invariant keeps B nonempty.
    if (shortest <= 0 || shortest > max_len) {
        return result;
    }
    result.length = shortest;

    // Depth-first enumeration of every optimal string: a move is on some
    // optimal string iff it decreases the distance-to-goal by exactly one.
    MoveString current;
    current.reserve(shortest);
    auto enumerate = [&](auto&& self, int pos, std::uint32_t cov, int remaining) -> void {
        if (remaining == 0) {
            result.optimal.push_back(current);
            return;
        }
        for (int m = 0; m < 4; ++m) {
            int p = pos;
            std::uint32_t c = cov;
            cycle_step(k, m, p, c);
            if (goal_dist[state_of(p, c)] == remaining - 1) {
                current.push_back(kMoveById[m]);
                self(self, p, c, remaining - 1);
                current.pop_back();
            }
        }
    };
    enumerate(enumerate, 0, 0, shortest);
    return result;
}

VerifyReport verify_instance(const TopologyParams& params, bool all_sources,
                             std::uint64_t node_budget) {
    params.validate();
    VerifyReport report;
    report.params = params;
    report.all_sources = all_sources;
    report.expected_diameter = diameter(params);

    const std::uint64_t n_nodes = params.server_count();
    const int sp_bound = 2 * params.k - 1;

    auto note = [&](const std::string& line) {
        if (report.examples.size() < 10) report.examples.push_back(line);
    };

    std::vector<std::uint64_t> sources;
    if (all_sources) {
        sources.resize(n_nodes);
        for (std::uint64_t i = 0; i < n_nodes; ++i) sources[i] = i;
    } else {
        ServerId zero;
        zero.column = 0;
        zero.row.assign(params.k, 0);
        sources.push_back(server_index(zero, params));
    }

    bool diameter_ok = true;
    int worst_ecc = -1;
    for (const std::uint64_t src_index : sources) {
        const ServerId src = server_from_index(src_index, params);
        const DistanceMap map = bfs_distances(src, params, node_budget);
        ++report.sources_checked;

        const int ecc = map.max();
        worst_ecc = std::max(worst_ecc, ecc);
        if (ecc != report.expected_diameter) {
            diameter_ok = false;
            note("eccentricity of " + format_server(src) + " is " + std::to_string(ecc) +
                 ", expected " + std::to_string(report.expected_diameter));
        }

        for (std::uint64_t dst_index = 0; dst_index < n_nodes; ++dst_index) {
            const ServerId dst = server_from_index(dst_index, params);
            ++report.pairs_checked;
            if (dst_index != src_index) {
                const int algo = dpillar_min_length(canonicalize(src, dst, params));
                if (algo != map.dist[dst_index]) {
                    ++report.min_mismatches;
                    note("min length " + std::to_string(algo) + " != BFS distance " +
                         std::to_string(map.dist[dst_index]) + " for " + format_server(src) +
                         " -> " + format_server(dst));
                }
            }
            for (const SpDirection dir : {SpDirection::Clockwise, SpDirection::AntiClockwise}) {
                const int sp = dpillar_sp_length(src, dst, dir, params);
                if (sp > sp_bound) {
                    ++report.sp_bound_violations;
                    note("sp length " + std::to_string(sp) + " exceeds " +
                         std::to_string(sp_bound) + " for " + format_server(src) + " -> " +
                         format_server(dst));
                }
            }
        }
    }
    report.eccentricity = worst_ecc;
    report.diameter_ok = diameter_ok;
    return report;
}

}  // namespace dpillar
