#include "dpillar/routing.hpp"

#include <algorithm>
#include <limits>

namespace dpillar {

namespace {

void append_run(MoveString& out, Move move, int count) {
    out.insert(out.end(), count, move);
}

// The path shapes contributed to Pi. Each builder writes one candidate; the
// length formulas quoted next to the enumeration below must match what these
// emit (the tests assert both the lengths and validity).

void build_cw_around(const MarkedCycle& c, MoveString& out) {
    append_run(out, Move::C, c.k + c.x);
}

void build_acw_around(const MarkedCycle& c, MoveString& out) {
    append_run(out, Move::A, 2 * c.k - c.x);
}

// r = 0: straight clockwise run, fixing x on arrival if needed.
void build_r0(const MarkedCycle& c, bool x_marked, MoveString& out) {
    append_run(out, Move::C, c.x);
    if (x_marked) out.push_back(Move::B);
}

// s = 0: fix 0 if needed, then straight anticlockwise run.
void build_s0(const MarkedCycle& c, bool zero_marked, MoveString& out) {
    if (zero_marked) out.push_back(Move::B);
    append_run(out, Move::A, c.k - c.x);
}

// Anticlockwise to just past i, hook back clockwise through 0 to x.
void build_r_hook(const MarkedCycle& c, int i, bool x_marked, MoveString& out) {
    append_run(out, Move::A, c.k - i - 1);
    out.push_back(Move::D);
    append_run(out, Move::C, c.k - i - 1 + c.x);
    if (x_marked) out.push_back(Move::B);
}

// Clockwise out to i and back; also serves x = 0 (returns to the start).
void build_r_spike(const MarkedCycle& c, int i, MoveString& out) {
    append_run(out, Move::C, i);
    out.push_back(Move::B);
    append_run(out, Move::A, i - c.x);
}

void build_s_hook(const MarkedCycle& c, int j, bool zero_marked, MoveString& out) {
    if (zero_marked) out.push_back(Move::B);
    append_run(out, Move::A, c.k - j - 1);
    out.push_back(Move::D);
    append_run(out, Move::C, c.x - j - 1);
}

void build_s_spike(const MarkedCycle& c, int j, MoveString& out) {
    append_run(out, Move::C, j);
    out.push_back(Move::B);
    append_run(out, Move::A, c.k + j - c.x);
}

// Two-turn path skipping the clockwise-side gap (lo, hi); serves x = 0 too.
void build_delta_path(const MarkedCycle& c, int lo, int hi, MoveString& out) {
    append_run(out, Move::A, c.k - hi - 1);
    out.push_back(Move::D);
    append_run(out, Move::C, c.k - hi - 1 + lo);
    out.push_back(Move::B);
    append_run(out, Move::A, lo - c.x);
}

// Two-turn path skipping the anticlockwise-side gap (lo, hi), lo < hi.
void build_eps_path(const MarkedCycle& c, int lo, int hi, MoveString& out) {
    append_run(out, Move::C, lo);
    out.push_back(Move::B);
    append_run(out, Move::A, lo + c.k - hi - 1);
    out.push_back(Move::D);
    append_run(out, Move::C, c.x - hi - 1);
}

void build_x0_around(const MarkedCycle& c, MoveString& out) {
    append_run(out, Move::C, c.k);
}

// x = 0 hook: fix 0 first, run anticlockwise past i, hook back to 0.
void build_x0_hook(const MarkedCycle& c, int i, bool zero_marked, MoveString& out) {
    if (zero_marked) out.push_back(Move::B);
    append_run(out, Move::A, c.k - i - 1);
    out.push_back(Move::D);
    append_run(out, Move::C, c.k - i - 1);
}

// Enumerates the candidate paths of Pi in the fixed tie-break order (the
// minimization order of the DPillarMin case analysis; first writer wins).
// fn(length, builder) is called once per candidate.
template <class Fn>
void for_each_candidate(const MarkedCycle& c, const CaseData& d, bool all_gaps, Fn&& fn) {
    const int k = c.k;
    const int x = c.x;
    const int d0 = d.zero_marked ? 1 : 0;
    const int dx = d.x_marked ? 1 : 0;

    if (x != 0) {
        fn(k + x, [&](MoveString& out) { build_cw_around(c, out); });
        fn(2 * k - x, [&](MoveString& out) { build_acw_around(c, out); });
        if (d.r == 0) {
            fn(x + dx, [&](MoveString& out) { build_r0(c, d.x_marked, out); });
        }
        if (d.s == 0) {
            fn(k - x + d0, [&](MoveString& out) { build_s0(c, d.zero_marked, out); });
        }
        if (d.r == 1) {
            const int i1 = d.i_first();
            fn(2 * k - 2 * i1 + x - 1 + dx,
               [&](MoveString& out) { build_r_hook(c, i1, d.x_marked, out); });
            fn(2 * i1 - x + 1, [&](MoveString& out) { build_r_spike(c, i1, out); });
        }
        if (d.s == 1) {
            const int j1 = d.j_largest();
            fn(k - 2 * j1 + x - 1 + d0,
               [&](MoveString& out) { build_s_hook(c, j1, d.zero_marked, out); });
            fn(k + 2 * j1 - x + 1, [&](MoveString& out) { build_s_spike(c, j1, out); });
        }
        if (d.r >= 2) {
            if (all_gaps) {
                for (int l = 0; l + 1 < d.r; ++l) {
                    const int lo = d.i_pos[l], hi = d.i_pos[l + 1];
                    fn(2 * k - 2 * (hi - lo) - x,
                       [&](MoveString& out) { build_delta_path(c, lo, hi, out); });
                }
            } else {
                fn(2 * k - 2 * d.delta - x,
                   [&](MoveString& out) { build_delta_path(c, d.delta_lo, d.delta_hi, out); });
            }
            const int i1 = d.i_first();
            fn(2 * k - 2 * i1 + x - 1 + dx,
               [&](MoveString& out) { build_r_hook(c, i1, d.x_marked, out); });
            const int ir = d.i_last();
            fn(2 * ir - x + 1, [&](MoveString& out) { build_r_spike(c, ir, out); });
        }
        if (d.s >= 2) {
            if (all_gaps) {
                for (int l = 0; l + 1 < d.s; ++l) {
                    const int hi = d.j_pos[l], lo = d.j_pos[l + 1];
                    fn(k - 2 * (hi - lo) + x,
                       [&](MoveString& out) { build_eps_path(c, lo, hi, out); });
                }
            } else {
                fn(k - 2 * d.eps + x,
                   [&](MoveString& out) { build_eps_path(c, d.eps_lo, d.eps_hi, out); });
            }
            const int js = d.j_smallest();
            fn(k - 2 * js + x - 1 + d0,
               [&](MoveString& out) { build_s_hook(c, js, d.zero_marked, out); });
            const int j1 = d.j_largest();
            fn(k + 2 * j1 - x + 1, [&](MoveString& out) { build_s_spike(c, j1, out); });
        }
        return;
    }

    // x = 0 (same source and destination column; B is nonempty).
    fn(k, [&](MoveString& out) { build_x0_around(c, out); });
    if (d.r == 0) {
        fn(1, [&](MoveString& out) { out.push_back(Move::B); });
    }
    if (d.r == 1) {
        const int i1 = d.i_first();
        if (i1 == k - 1) {
            fn(1 + d0, [&](MoveString& out) { build_x0_hook(c, i1, d.zero_marked, out); });
        } else if (i1 == 1) {
            fn(3, [&](MoveString& out) { build_r_spike(c, i1, out); });
        } else {
            fn(2 * k - 2 * i1 - 1 + d0,
               [&](MoveString& out) { build_x0_hook(c, i1, d.zero_marked, out); });
            fn(2 * i1 + 1, [&](MoveString& out) { build_r_spike(c, i1, out); });
        }
    }
    if (d.r >= 2) {
        if (all_gaps) {
            for (int l = 0; l + 1 < d.r; ++l) {
                const int lo = d.i_pos[l], hi = d.i_pos[l + 1];
                fn(2 * k - 2 * (hi - lo),
                   [&](MoveString& out) { build_delta_path(c, lo, hi, out); });
            }
        } else {
            fn(2 * k - 2 * d.delta,
               [&](MoveString& out) { build_delta_path(c, d.delta_lo, d.delta_hi, out); });
        }
        const int i1 = d.i_first();
        fn(2 * k - 2 * i1 - 1 + d0,
           [&](MoveString& out) { build_x0_hook(c, i1, d.zero_marked, out); });
        const int ir = d.i_last();
        fn(2 * ir + 1, [&](MoveString& out) { build_r_spike(c, ir, out); });
    }
}

void check_cycle(const MarkedCycle& cycle) {
    if (cycle.k < 2 || cycle.k > 64) {
        throw std::invalid_argument("cycle length k out of range [2, 64]");
    }
    if (cycle.x < 0 || cycle.x >= cycle.k) {
        throw std::invalid_argument("destination node out of range");
    }
    if (cycle.x == 0 && cycle.marks == 0) {
        throw std::invalid_argument("identical endpoints");
    }
    if (cycle.k < 64 && (cycle.marks >> cycle.k) != 0) {
        throw std::invalid_argument("marked set has bits beyond k");
    }
}

EdgeKind edge_kind_for(Move move) {
    switch (move) {
        case Move::A: return EdgeKind::AntiClockwise;
        case Move::B: return EdgeKind::BasicStatic;
        case Move::C: return EdgeKind::Clockwise;
        case Move::D: return EdgeKind::DecrementedStatic;
    }
    return EdgeKind::Clockwise;
}

}  // namespace

CaseData analyze(const MarkedCycle& cycle) {
    check_cycle(cycle);
    CaseData d;
    d.zero_marked = cycle.marked(0);
    d.x_marked = cycle.marked(cycle.x);

    for (int pos = cycle.x + 1; pos < cycle.k; ++pos) {
        if (cycle.marked(pos)) d.i_pos[d.r++] = static_cast<std::uint8_t>(pos);
    }
    for (int pos = cycle.x - 1; pos >= 1; --pos) {
        if (cycle.marked(pos)) d.j_pos[d.s++] = static_cast<std::uint8_t>(pos);
    }

    for (int l = 0; l + 1 < d.r; ++l) {
        const int gap = d.i_pos[l + 1] - d.i_pos[l];
        if (gap > d.delta) {
            d.delta = gap;
            d.delta_lo = d.i_pos[l];
            d.delta_hi = d.i_pos[l + 1];
        }
    }
    for (int l = 0; l + 1 < d.s; ++l) {
        const int gap = d.j_pos[l] - d.j_pos[l + 1];
        if (gap > d.eps) {
            d.eps = gap;
            d.eps_hi = d.j_pos[l];
            d.eps_lo = d.j_pos[l + 1];
        }
    }
    return d;
}

std::vector<CandidatePath> candidate_set(const MarkedCycle& cycle, bool all_gaps) {
    const CaseData data = analyze(cycle);
    std::vector<CandidatePath> paths;
    for_each_candidate(cycle, data, all_gaps, [&](int length, auto&& build) {
        CandidatePath path;
        path.length = length;
        path.moves.reserve(length);
        build(path.moves);
        paths.push_back(std::move(path));
    });
    return paths;
}

int dpillar_min_length(const MarkedCycle& cycle) {
    const CaseData data = analyze(cycle);
    int best = std::numeric_limits<int>::max();
    for_each_candidate(cycle, data, false, [&](int length, auto&&) {
        best = std::min(best, length);
    });
    return best;
}

void dpillar_min_moves(const MarkedCycle& cycle, MoveString& out) {
    const CaseData data = analyze(cycle);
    int best = std::numeric_limits<int>::max();
    int best_ordinal = -1;
    int ordinal = 0;
    for_each_candidate(cycle, data, false, [&](int length, auto&&) {
        if (length < best) {
            best = length;
            best_ordinal = ordinal;
        }
        ++ordinal;
    });
    out.clear();
    out.reserve(best);
    ordinal = 0;
    for_each_candidate(cycle, data, false, [&](int, auto&& build) {
        if (ordinal == best_ordinal) build(out);
        ++ordinal;
    });
}

MoveString dpillar_min_moves(const MarkedCycle& cycle) {
    MoveString out;
    dpillar_min_moves(cycle, out);
    return out;
}

const char* algorithm_name(Algorithm alg) {
    switch (alg) {
        case Algorithm::Min: return "min";
        case Algorithm::SpClockwise: return "sp-cw";
        case Algorithm::SpAntiClockwise: return "sp-acw";
        case Algorithm::SpBest: return "sp-best";
    }
    return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "min") return Algorithm::Min;
    if (name == "sp-cw") return Algorithm::SpClockwise;
    if (name == "sp-acw") return Algorithm::SpAntiClockwise;
    if (name == "sp-best") return Algorithm::SpBest;
    throw std::invalid_argument("unknown algorithm '" + name +
                                "' (expected min, sp-cw, sp-acw or sp-best)");
}

MoveString RouteResult::moves() const {
    MoveString out;
    out.reserve(hops.size());
    for (const RouteHop& hop : hops) out.push_back(hop.move);
    return out;
}

RouteResult execute_moves(const ServerId& src, const ServerId& dst,
                          std::span<const Move> moves, const TopologyParams& params) {
    validate_server(src, params);
    validate_server(dst, params);
    const int k = params.k;

    RouteResult route;
    route.src = src;
    route.hops.reserve(moves.size());

    ServerId cur = src;
    for (Move move : moves) {
        const int col = cur.column;
        const int covered_pos = (move == Move::C || move == Move::B) ? col : (col + k - 1) % k;
        const int digit = dst.row[covered_pos];
        if ((move == Move::B || move == Move::D) && cur.row[covered_pos] == digit) {
            throw std::invalid_argument("invalid plan: degenerate " +
                                        std::string(1, move_letter(move)) + "-move at " +
                                        format_server(cur));
        }
        const auto [right, left] = adjacent_switches(cur, params);
        const SwitchId via = (move == Move::C || move == Move::B) ? right : left;
        cur = neighbor(cur, edge_kind_for(move), digit, params);
        route.hops.push_back(RouteHop{move, via, cur});
    }
    if (!(cur == dst)) {
        throw std::invalid_argument("invalid plan: move string ends at " +
                                    format_server(cur) + " instead of " + format_server(dst));
    }
    return route;
}

RouteResult dpillar_min_path(const ServerId& src, const ServerId& dst,
                             const TopologyParams& params) {
    const MarkedCycle cycle = canonicalize(src, dst, params);
    const MoveString moves = dpillar_min_moves(cycle);
    return execute_moves(src, dst, moves, params);
}

namespace detail {

SpLengths sp_lengths(int k, int x, std::uint64_t marks) {
    SpLengths lengths;
    if (marks == 0) {
        lengths.clockwise = x;
        lengths.anticlockwise = (k - x) % k;
        return lengths;
    }
    int max_pos = -1, min_pos = k;
    for (int i = 0; i < k; ++i) {
        if ((marks >> i) & 1u) {
            max_pos = std::max(max_pos, i);
            min_pos = std::min(min_pos, i);
        }
    }
    const int t_cw = max_pos + 1;
    lengths.clockwise = t_cw + ((x - t_cw) % k + k) % k;
    const int t_acw = k - min_pos;
    lengths.anticlockwise = t_acw + ((-t_acw - x) % k + k) % k;
    return lengths;
}

}  // namespace detail

int dpillar_sp_length(const ServerId& src, const ServerId& dst, SpDirection direction,
                      const TopologyParams& params) {
    validate_server(src, params);
    validate_server(dst, params);
    const int k = params.k;

    // The helix stops after the hop covering the furthest differing digit.
    int t = 0;
    for (int i = 0; i < k; ++i) {
        if (src.row[i] == dst.row[i]) continue;
        const int hops = direction == SpDirection::Clockwise
                             ? ((i - src.column) % k + k) % k + 1
                             : ((src.column - 1 - i) % k + k) % k + 1;
        t = std::max(t, hops);
    }
    const int after = direction == SpDirection::Clockwise ? (src.column + t) % k
                                                          : ((src.column - t) % k + k) % k;
    const int ring = direction == SpDirection::Clockwise
                         ? ((dst.column - after) % k + k) % k
                         : ((after - dst.column) % k + k) % k;
    return t + ring;
}

RouteResult dpillar_sp_path(const ServerId& src, const ServerId& dst,
                            SpDirection direction, const TopologyParams& params) {
    const int length = dpillar_sp_length(src, dst, direction, params);
    const Move move = direction == SpDirection::Clockwise ? Move::C : Move::A;
    const MoveString moves(length, move);
    return execute_moves(src, dst, moves, params);
}

int diameter(const TopologyParams& params) {
    params.validate();
    return params.k <= 3 ? params.k : params.k + params.k / 2 - 2;
}

}  // namespace dpillar
