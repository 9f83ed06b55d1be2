#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "dpillar/marked_cycle.hpp"
#include "dpillar/topology.hpp"

namespace dpillar {

/// Distribution of the marked nodes of a canonical cycle relative to the
/// destination x: the i-sequence sits clockwise of x (x < i_1 < ... < i_r < k),
/// the j-sequence anticlockwise (x > j_1 > ... > j_s > 0). For x = 0 every
/// marked node other than 0 lands in the i-sequence.
struct CaseData {
    int r = 0;
    int s = 0;
    std::array<std::uint8_t, 64> i_pos{};  // ascending, i_pos[0..r)
    std::array<std::uint8_t, 64> j_pos{};  // descending, j_pos[0..s)

    // Largest clockwise gap delta = max_l (i_{l+1} - i_l) and the first pair
    // attaining it; likewise epsilon = max_l (j_l - j_{l+1}).
    int delta = 0;
    int delta_lo = 0, delta_hi = 0;
    int eps = 0;
    int eps_lo = 0, eps_hi = 0;  // eps_lo = smaller j of the pair

    bool zero_marked = false;  // Delta_0
    bool x_marked = false;     // Delta_x

    int i_first() const { return i_pos[0]; }
    int i_last() const { return i_pos[r - 1]; }
    int j_largest() const { return j_pos[0]; }
    int j_smallest() const { return j_pos[s - 1]; }
};

CaseData analyze(const MarkedCycle& cycle);

struct CandidatePath {
    MoveString moves;
    int length = 0;
};

/// The candidate set Pi. Candidates appear in the fixed tie-break order used
/// by the path selection; with all_gaps every per-gap path of the r>=2 / s>=2
/// cases is emitted instead of only the maximizing gap.
std::vector<CandidatePath> candidate_set(const MarkedCycle& cycle,
                                         bool all_gaps = false);

/// Shortest-path length on the canonical cycle (closed-form minimization).
int dpillar_min_length(const MarkedCycle& cycle);

/// First candidate attaining the minimum, in the fixed tie-break order.
MoveString dpillar_min_moves(const MarkedCycle& cycle);

/// Appends the same move string into a caller-owned buffer (cleared first).
void dpillar_min_moves(const MarkedCycle& cycle, MoveString& out);

enum class SpDirection : std::uint8_t { Clockwise, AntiClockwise };

enum class Algorithm : std::uint8_t { Min, SpClockwise, SpAntiClockwise, SpBest };

const char* algorithm_name(Algorithm alg);
Algorithm algorithm_from_name(const std::string& name);  // "min", "sp-cw", ...

struct RouteHop {
    Move move;
    SwitchId via;
    ServerId to;
};

struct RouteResult {
    ServerId src;
    std::vector<RouteHop> hops;

    int length() const { return static_cast<int>(hops.size()); }
    MoveString moves() const;
    const ServerId& dst() const { return hops.empty() ? src : hops.back().to; }
};

/// Executes a move plan from src in real coordinates, fixing each covered
/// digit to dst's value and recording the switch traversed per hop. Throws
/// std::invalid_argument ("invalid plan") if the walk does not end at dst or
/// a b/d move degenerates into a self-loop.
RouteResult execute_moves(const ServerId& src, const ServerId& dst,
                          std::span<const Move> moves, const TopologyParams& params);

RouteResult dpillar_min_path(const ServerId& src, const ServerId& dst,
                             const TopologyParams& params);

/// Helix phase (fix digits moving in one direction) followed by the ring
/// phase (keep moving that direction to dst's column). src == dst yields the
/// empty route.
RouteResult dpillar_sp_path(const ServerId& src, const ServerId& dst,
                            SpDirection direction, const TopologyParams& params);

int dpillar_sp_length(const ServerId& src, const ServerId& dst, SpDirection direction,
                      const TopologyParams& params);

/// k for k in {2,3}, else k + floor(k/2) - 2.
int diameter(const TopologyParams& params);

namespace detail {

/// Hop lengths of both DPillarSP directions for a canonical instance
/// (src at node 0, marked set = differing digit positions).
struct SpLengths {
    int clockwise = 0;
    int anticlockwise = 0;
};
SpLengths sp_lengths(int k, int x, std::uint64_t marks);

/// Allocation-free walk of a move plan for flow accounting. `weight[i]` must
/// hold h^i (weight[k] = h^k). Calls on_hop(from_index, move, to_index) per
/// hop. Returns false if the plan degenerates or misses dst.
template <class OnHop>
bool walk_move_plan(const TopologyParams& params, const std::uint64_t* weight,
                    int src_col, const std::uint8_t* src_row, int dst_col,
                    const std::uint8_t* dst_row, std::span<const Move> moves,
                    OnHop&& on_hop) {
    const int k = params.k;
    std::array<std::uint8_t, 64> row;
    std::int64_t row_value = 0;
    for (int i = 0; i < k; ++i) {
        row[i] = src_row[i];
        row_value += static_cast<std::int64_t>(row[i]) * weight[i];
    }
    int col = src_col;

    auto fix_digit = [&](int pos) {
        row_value += (static_cast<std::int64_t>(dst_row[pos]) - row[pos]) *
                     static_cast<std::int64_t>(weight[pos]);
        row[pos] = dst_row[pos];
    };
    auto node_index = [&]() {
        return static_cast<std::uint64_t>(col) * weight[k] +
               static_cast<std::uint64_t>(row_value);
    };

    for (Move move : moves) {
        const std::uint64_t from = node_index();
        const int prev = (col + k - 1) % k;
        switch (move) {
            case Move::C:
                fix_digit(col);
                col = (col + 1) % k;
                break;
            case Move::A:
                fix_digit(prev);
                col = prev;
                break;
            case Move::B:
                if (row[col] == dst_row[col]) return false;  // degenerate
                fix_digit(col);
                break;
            case Move::D:
                if (row[prev] == dst_row[prev]) return false;
                fix_digit(prev);
                break;
        }
        on_hop(from, move, node_index());
    }
    if (col != dst_col) return false;
    for (int i = 0; i < k; ++i) {
        if (row[i] != dst_row[i]) return false;
    }
    return true;
}

}  // namespace detail

}  // namespace dpillar
