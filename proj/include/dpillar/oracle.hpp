#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpillar/marked_cycle.hpp"
#include "dpillar/routing.hpp"
#include "dpillar/topology.hpp"

namespace dpillar {

/// Exact hop distances from one source over the whole digraph.
struct DistanceMap {
    ServerId source;
    std::vector<std::int32_t> dist;  // indexed by server_index

    std::int32_t at(const ServerId& server, const TopologyParams& params) const {
        return dist[server_index(server, params)];
    }
    std::int32_t max() const;
};

/// Breadth-first search over the 2n-2-regular digraph abstraction.
/// Throws if k * h^k exceeds node_budget.
DistanceMap bfs_distances(const ServerId& src, const TopologyParams& params,
                          std::uint64_t node_budget = 1'000'000);

/// Ground truth for one marked cycle: minimum legitimate path length within
/// max_len and every optimal move string, in lexicographic a<b<c<d order.
/// length is -1 when no valid string of length <= max_len exists.
struct CycleMinResult {
    int length = -1;
    std::vector<MoveString> optimal;
};

CycleMinResult exhaustive_cycle_min(const MarkedCycle& cycle, int max_len);

struct VerifyReport {
    TopologyParams params;
    bool all_sources = false;
    std::uint64_t sources_checked = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t min_mismatches = 0;
    std::uint64_t sp_bound_violations = 0;
    int eccentricity = -1;  // max over the checked sources
    int expected_diameter = 0;
    bool diameter_ok = false;
    std::vector<std::string> examples;  // first few failures, human readable

    bool pass() const {
        return min_mismatches == 0 && sp_bound_violations == 0 && diameter_ok;
    }
};

/// Checks, per source, that the closed-form shortest-path length equals the
/// BFS distance for every destination, that both DPillarSP directions stay
/// within 2k-1 hops, and that the source eccentricity matches diameter().
VerifyReport verify_instance(const TopologyParams& params, bool all_sources = false,
                             std::uint64_t node_budget = 1'000'000);

}  // namespace dpillar
