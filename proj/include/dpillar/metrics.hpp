#pragma once

#include <cstdint>
#include <vector>

#include "dpillar/routing.hpp"
#include "dpillar/topology.hpp"

namespace dpillar {

/// Path-length survey from the fixed source (0, 0...0) over every
/// destination, self-pair included at length 0.
struct SurveyReport {
    Algorithm algorithm = Algorithm::Min;
    int n = 0;
    int k = 0;
    std::uint64_t destinations = 0;
    double avg_path_length = 0.0;               // unrounded
    std::vector<std::uint64_t> histogram;       // index = hop count
    std::vector<double> cumulative_pct;         // unrounded percentages
    double non_minimal_pct = 0.0;               // share with length > Min length
};

SurveyReport path_length_survey(const TopologyParams& params, Algorithm algorithm,
                                int workers = 0,
                                std::uint64_t destination_budget = 100'000'000);

/// Flow counts over the 4 * k * h^k directed server-switch links. Every hop
/// adds one count on the sending server's uplink and one on the receiving
/// server's downlink.
struct LinkLoadMap {
    enum Port : int { Right = 0, Left = 1 };
    enum Direction : int { Up = 0, Down = 1 };  // Up = server to switch

    TopologyParams params;
    std::vector<std::uint64_t> counts;  // 4 slots per server

    static std::uint64_t slot(std::uint64_t server, int port, int direction) {
        return server * 4 + static_cast<std::uint64_t>(port) * 2 + direction;
    }
    std::uint64_t max_load() const;
    std::uint64_t total_load() const;
};

LinkLoadMap link_loads(const TopologyParams& params, Algorithm algorithm,
                       std::uint64_t flow_budget = 300'000'000, int workers = 0);

struct AbtReport {
    Algorithm algorithm = Algorithm::Min;
    int n = 0;
    int k = 0;
    std::uint64_t servers = 0;
    std::uint64_t flows = 0;      // N(N-1), self-pairs excluded
    std::uint64_t max_load = 0;   // flows on the bottleneck directed link
    std::uint64_t total_load = 0; // sum over links = 2 * sum of path lengths
    double abt = 0.0;             // flows / max_load at 1 unit per link
};

/// Routes the full all-to-all pattern and reports the aggregate bottleneck
/// throughput. Throws if N(N-1) exceeds flow_budget.
AbtReport abt(const TopologyParams& params, Algorithm algorithm,
              std::uint64_t flow_budget = 300'000'000, int workers = 0);

/// Per-hop latency model: L_hop = L_s + L_p + L_d + L_r with
/// L_d = byte_rate * frame_bytes / bandwidth_scale.
struct LatencyParams {
    double stack_us = 10.0;
    double propagation_us = 22.0;
    double byte_rate_ns = 38000.0 / 1472.0;  // ~25.8152 ns per byte
    double frame_bytes = 1472.0;
    double bandwidth_scale = 1.0;
    double routing_us = 0.0;
};

struct LatencyReport {
    double data_us = 0.0;   // L_d
    double hop_us = 0.0;    // L_hop
    double total_us = 0.0;  // L_hop * avg path length
};

LatencyReport latency(const LatencyParams& params, double avg_path_length);

/// Named link configurations: "1g-std", "1g-jumbo", "10g-std", "10g-jumbo".
LatencyParams latency_preset(const std::string& name, double routing_us);

/// Worker count resolution: explicit value > 0, else DPILLAR_WORKERS, else
/// hardware concurrency.
int default_worker_count();

}  // namespace dpillar
