#include "dpillar/metrics.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <thread>

namespace dpillar {

namespace {

struct Weights {
    std::array<std::uint64_t, 65> w{};

    Weights(int k, int h) {
        w[0] = 1;
        for (int i = 0; i < k; ++i) w[i + 1] = w[i] * h;
    }
};

// Digits of every server, decoded once: digit i of server s at [s * k + i].
std::vector<std::uint8_t> decode_all_rows(const TopologyParams& params, const Weights& wt) {
    const int k = params.k;
    const std::uint64_t n_nodes = params.server_count();
    std::vector<std::uint8_t> rows(n_nodes * k);
    for (std::uint64_t s = 0; s < n_nodes; ++s) {
        std::uint64_t value = s % wt.w[k];
        for (int i = 0; i < k; ++i) {
            rows[s * k + i] = static_cast<std::uint8_t>(value % params.h());
            value /= params.h();
        }
    }
    return rows;
}

// Canonical instance of an ordered pair: destination node and marked set as
// seen from src. A digit position is marked iff the digits differ.
inline void relative_cycle(int k, int src_col, const std::uint8_t* src_row, int dst_col,
                           const std::uint8_t* dst_row, MarkedCycle& cycle) {
    cycle.k = k;
    cycle.x = dst_col - src_col + (dst_col < src_col ? k : 0);
    cycle.marks = 0;
    for (int j = 0; j < k; ++j) {
        int pos = j + src_col;
        if (pos >= k) pos -= k;
        if (src_row[pos] != dst_row[pos]) cycle.marks |= std::uint64_t{1} << j;
    }
}

inline int pair_length(Algorithm alg, const MarkedCycle& cycle) {
    switch (alg) {
        case Algorithm::Min:
            return dpillar_min_length(cycle);
        case Algorithm::SpClockwise:
            return detail::sp_lengths(cycle.k, cycle.x, cycle.marks).clockwise;
        case Algorithm::SpAntiClockwise:
            return detail::sp_lengths(cycle.k, cycle.x, cycle.marks).anticlockwise;
        case Algorithm::SpBest: {
            const auto sp = detail::sp_lengths(cycle.k, cycle.x, cycle.marks);
            return std::min(sp.clockwise, sp.anticlockwise);
        }
    }
    return 0;
}

// Splits [0, count) into chunks and runs fn(chunk_id, begin, end) on each,
// using worker threads only when more than one is requested.
template <class Fn>
void parallel_chunks(std::uint64_t count, int workers, Fn&& fn) {
    const int used = std::max(1, std::min<int>(workers, static_cast<int>(std::min<std::uint64_t>(count, 256))));
    if (used == 1) {
        fn(0, std::uint64_t{0}, count);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(used);
    for (int c = 0; c < used; ++c) {
        const std::uint64_t begin = count * c / used;
        const std::uint64_t end = count * (c + 1) / used;
        threads.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
    }
    for (std::thread& t : threads) t.join();
}

}  // namespace

int default_worker_count() {
    if (const char* env = std::getenv("DPILLAR_WORKERS")) {
        const int value = std::atoi(env);
        if (value > 0) return value;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

SurveyReport path_length_survey(const TopologyParams& params, Algorithm algorithm,
                                int workers, std::uint64_t destination_budget) {
    params.validate();
    const int k = params.k;
    const Weights wt(k, params.h());
    const std::uint64_t n_nodes = params.server_count();
    if (n_nodes > destination_budget) {
        throw std::invalid_argument("survey over " + std::to_string(n_nodes) +
                                    " destinations exceeds the budget of " +
                                    std::to_string(destination_budget));
    }
    if (workers <= 0) workers = default_worker_count();

    SurveyReport report;
    report.algorithm = algorithm;
    report.n = params.n;
    report.k = params.k;
    report.destinations = n_nodes;

    const int max_len = 2 * k;  // SP stays below 2k, Min below the diameter
    struct Shard {
        std::vector<std::uint64_t> histogram;
        std::uint64_t non_minimal = 0;
    };
    std::vector<Shard> shards(std::max(1, workers));
    for (Shard& shard : shards) shard.histogram.assign(max_len + 1, 0);

    parallel_chunks(n_nodes, workers, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        Shard& shard = shards[chunk];
        std::array<std::uint8_t, 64> dst_row;
        MarkedCycle cycle;
        for (std::uint64_t dst = begin; dst < end; ++dst) {
            const int dst_col = static_cast<int>(dst / wt.w[k]);
            std::uint64_t value = dst % wt.w[k];
            std::uint64_t marks = 0;
            for (int i = 0; i < k; ++i) {
                dst_row[i] = static_cast<std::uint8_t>(value % params.h());
                if (dst_row[i] != 0) marks |= std::uint64_t{1} << i;
                value /= params.h();
            }
            int length = 0;
            if (dst_col != 0 || marks != 0) {
                cycle.k = k;
                cycle.x = dst_col;  // source is (0, 0...0), already canonical
                cycle.marks = marks;
                length = pair_length(algorithm, cycle);
                if (algorithm != Algorithm::Min && length > dpillar_min_length(cycle)) {
                    ++shard.non_minimal;
                }
            }
            ++shard.histogram[length];
        }
    });

    report.histogram.assign(max_len + 1, 0);
    std::uint64_t non_minimal = 0;
    for (const Shard& shard : shards) {
        for (int l = 0; l <= max_len; ++l) report.histogram[l] += shard.histogram[l];
        non_minimal += shard.non_minimal;
    }
    while (report.histogram.size() > 1 && report.histogram.back() == 0) {
        report.histogram.pop_back();
    }

    std::uint64_t length_sum = 0;
    std::uint64_t running = 0;
    report.cumulative_pct.resize(report.histogram.size());
    for (std::size_t l = 0; l < report.histogram.size(); ++l) {
        length_sum += l * report.histogram[l];
        running += report.histogram[l];
        report.cumulative_pct[l] = 100.0 * static_cast<double>(running) /
                                   static_cast<double>(n_nodes);
    }
    report.avg_path_length = static_cast<double>(length_sum) / static_cast<double>(n_nodes);
    report.non_minimal_pct = 100.0 * static_cast<double>(non_minimal) /
                             static_cast<double>(n_nodes);
    return report;
}

std::uint64_t LinkLoadMap::max_load() const {
    std::uint64_t best = 0;
    for (std::uint64_t c : counts) best = std::max(best, c);
    return best;
}

std::uint64_t LinkLoadMap::total_load() const {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts) sum += c;
    return sum;
}

LinkLoadMap link_loads(const TopologyParams& params, Algorithm algorithm,
                       std::uint64_t flow_budget, int workers) {
    params.validate();
    const int k = params.k;
    const Weights wt(k, params.h());
    const std::uint64_t n_nodes = params.server_count();
    const std::uint64_t flows = n_nodes * (n_nodes - 1);
    if (flows > flow_budget) {
        throw std::invalid_argument(
            "all-to-all needs " + std::to_string(flows) + " flows, above the budget of " +
            std::to_string(flow_budget) + "; pick a smaller instance or raise the budget");
    }
    if (workers <= 0) workers = default_worker_count();

    const std::vector<std::uint8_t> rows = decode_all_rows(params, wt);

    std::vector<std::vector<std::uint64_t>> shard_counts(std::max(1, workers));
    parallel_chunks(n_nodes, workers, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t>& loads = shard_counts[chunk];
        loads.assign(n_nodes * 4, 0);
        // Uplink slot is decided by the move kind on the sending side
        // (b/c use the right port, a/d the left one); the downlink slot by
        // the receiving side (c arrives left, a right, b right, d left).
        auto on_hop = [&](std::uint64_t from, Move move, std::uint64_t to) {
            switch (move) {
                case Move::C:
                    ++loads[from * 4 + 0];  // right, up
                    ++loads[to * 4 + 3];    // left, down
                    break;
                case Move::A:
                    ++loads[from * 4 + 2];  // left, up
                    ++loads[to * 4 + 1];    // right, down
                    break;
                case Move::B:
                    ++loads[from * 4 + 0];
                    ++loads[to * 4 + 1];
                    break;
                case Move::D:
                    ++loads[from * 4 + 2];
                    ++loads[to * 4 + 3];
                    break;
            }
        };

        MarkedCycle cycle;
        MoveString moves;
        for (std::uint64_t src = begin; src < end; ++src) {
            const int src_col = static_cast<int>(src / wt.w[k]);
            const std::uint8_t* src_row = &rows[src * k];
            for (std::uint64_t dst = 0; dst < n_nodes; ++dst) {
                if (dst == src) continue;
                const int dst_col = static_cast<int>(dst / wt.w[k]);
                const std::uint8_t* dst_row = &rows[dst * k];
                relative_cycle(k, src_col, src_row, dst_col, dst_row, cycle);
                switch (algorithm) {
                    case Algorithm::Min:
                        dpillar_min_moves(cycle, moves);
                        break;
                    case Algorithm::SpClockwise:
                        moves.assign(detail::sp_lengths(k, cycle.x, cycle.marks).clockwise,
                                     Move::C);
                        break;
                    case Algorithm::SpAntiClockwise:
                        moves.assign(detail::sp_lengths(k, cycle.x, cycle.marks).anticlockwise,
                                     Move::A);
                        break;
                    case Algorithm::SpBest: {
                        const auto sp = detail::sp_lengths(k, cycle.x, cycle.marks);
                        if (sp.clockwise <= sp.anticlockwise) {
                            moves.assign(sp.clockwise, Move::C);
                        } else {
                            moves.assign(sp.anticlockwise, Move::A);
                        }
                        break;
                    }
                }
                const bool ok = detail::walk_move_plan(params, wt.w.data(), src_col, src_row,
                                                       dst_col, dst_row, moves, on_hop);
                if (!ok) {
                    throw std::logic_error("route plan failed to reach its destination");
                }
            }
        }
    });

    LinkLoadMap map;
    map.params = params;
    map.counts.assign(n_nodes * 4, 0);
    for (const std::vector<std::uint64_t>& shard : shard_counts) {
        if (shard.empty()) continue;
        for (std::size_t i = 0; i < map.counts.size(); ++i) map.counts[i] += shard[i];
    }
    return map;
}

AbtReport abt(const TopologyParams& params, Algorithm algorithm, std::uint64_t flow_budget,
              int workers) {
    const LinkLoadMap map = link_loads(params, algorithm, flow_budget, workers);
    AbtReport report;
    report.algorithm = algorithm;
    report.n = params.n;
    report.k = params.k;
    report.servers = params.server_count();
    report.flows = report.servers * (report.servers - 1);
    report.max_load = map.max_load();
    report.total_load = map.total_load();
    report.abt = static_cast<double>(report.flows) / static_cast<double>(report.max_load);
    return report;
}

LatencyReport latency(const LatencyParams& params, double avg_path_length) {
    if (params.stack_us < 0 || params.propagation_us < 0 || params.byte_rate_ns < 0 ||
        params.frame_bytes < 0 || params.bandwidth_scale <= 0 || params.routing_us < 0) {
        throw std::invalid_argument("latency parameters must be nonnegative "
                                    "(bandwidth scale positive)");
    }
    LatencyReport report;
    report.data_us = params.byte_rate_ns * params.frame_bytes / params.bandwidth_scale / 1000.0;
    report.hop_us = params.stack_us + params.propagation_us + report.data_us + params.routing_us;
    report.total_us = report.hop_us * avg_path_length;
    return report;
}

LatencyParams latency_preset(const std::string& name, double routing_us) {
    LatencyParams params;
    params.routing_us = routing_us;
    if (name == "1g-std") {
        params.frame_bytes = 1472.0;
        params.bandwidth_scale = 1.0;
    } else if (name == "1g-jumbo") {
        params.frame_bytes = 9000.0;
        params.bandwidth_scale = 1.0;
    } else if (name == "10g-std") {
        params.frame_bytes = 1472.0;
        params.bandwidth_scale = 10.0;
    } else if (name == "10g-jumbo") {
        params.frame_bytes = 9000.0;
        params.bandwidth_scale = 10.0;
    } else {
        throw std::invalid_argument("unknown latency preset '" + name +
                                    "' (expected 1g-std, 1g-jumbo, 10g-std or 10g-jumbo)");
    }
    return params;
}

}  // namespace dpillar
