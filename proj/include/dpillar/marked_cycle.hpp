#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dpillar/topology.hpp"

namespace dpillar {

/// One move on the marked cycle. Moves mirror the four edge kinds:
/// c advances a node, a retreats one, b and d stand still; each move covers
/// one node (c/b the current node, a/d the anticlockwise neighbour).
enum class Move : std::uint8_t { A, B, C, D };

using MoveString = std::vector<Move>;

char move_letter(Move move);
Move move_from_letter(char letter);

// Accepts both the plain letter string ("ccbaaadc") and the compressed
// power notation ("c2ba3dc1").
MoveString parse_moves(const std::string& text);
std::string format_moves(std::span<const Move> moves);        // compressed
std::string format_moves_plain(std::span<const Move> moves);  // letters only

/// The canonical routing instance: a k-node cycle starting at node 0 with
/// destination x and marked node set B (bit j of marks = node j in B).
struct MarkedCycle {
    int k = 0;
    int x = 0;
    std::uint64_t marks = 0;

    bool marked(int node) const { return (marks >> node) & 1u; }
    int marked_count() const;

    bool operator==(const MarkedCycle&) const = default;
};

/// Canonicalize a routing instance: rotate columns and digit positions by
/// -src.column and difference the digits mod h, so src maps to node 0.
/// Throws std::invalid_argument for identical endpoints.
MarkedCycle canonicalize(const ServerId& src, const ServerId& dst,
                         const TopologyParams& params);

struct MoveOutcome {
    int final_node = 0;
    std::uint64_t covered = 0;
};

MoveOutcome apply_moves(const MarkedCycle& cycle, std::span<const Move> moves);
MoveOutcome apply_moves(int k, std::span<const Move> moves);

/// A move string is a legitimate path iff it is nonempty, ends at x, and
/// covers every marked node.
bool is_valid(const MarkedCycle& cycle, std::span<const Move> moves);

/// Number of turns: occurrences of "cba" (a-turns) plus "adc" (c-turns).
int count_turns(std::span<const Move> moves);

}  // namespace dpillar
