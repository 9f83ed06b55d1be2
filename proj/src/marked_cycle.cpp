#include "dpillar/marked_cycle.hpp"

#include <bit>
#include <cctype>

namespace dpillar {

char move_letter(Move move) {
    switch (move) {
        case Move::A: return 'a';
        case Move::B: return 'b';
        case Move::C: return 'c';
        case Move::D: return 'd';
    }
    return '?';
}

Move move_from_letter(char letter) {
    switch (letter) {
        case 'a': return Move::A;
        case 'b': return Move::B;
        case 'c': return Move::C;
        case 'd': return Move::D;
        default:
            throw std::invalid_argument(std::string("bad move letter '") + letter + "'");
    }
}

MoveString parse_moves(const std::string& text) {
    MoveString moves;
    std::size_t i = 0;
    while (i < text.size()) {
        const Move move = move_from_letter(text[i]);
        ++i;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t count = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                count = count * 10 + (text[i] - '0');
                if (count > 100000) throw std::invalid_argument("move power too large");
                ++i;
            }
            if (count == 0) throw std::invalid_argument("move power must be positive");
            moves.insert(moves.end(), count, move);
        } else {
            moves.push_back(move);
        }
    }
    return moves;
}

std::string format_moves(std::span<const Move> moves) {
    std::string out;
    std::size_t i = 0;
    while (i < moves.size()) {
        std::size_t j = i;
        while (j < moves.size() && moves[j] == moves[i]) ++j;
        out += move_letter(moves[i]);
        if (j - i > 1) out += std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string format_moves_plain(std::span<const Move> moves) {
    std::string out;
    out.reserve(moves.size());
    for (Move move : moves) out += move_letter(move);
    return out;
}

int MarkedCycle::marked_count() const {
    return std::popcount(marks);
}

MarkedCycle canonicalize(const ServerId& src, const ServerId& dst,
                         const TopologyParams& params) {
    validate_server(src, params);
    validate_server(dst, params);
    if (src == dst) {
        throw std::invalid_argument("identical endpoints");
    }
    const int k = params.k;
    const int h = params.h();

    MarkedCycle cycle;
    cycle.k = k;
    cycle.x = ((dst.column - src.column) % k + k) % k;
    for (int j = 0; j < k; ++j) {
        const int pos = (j + src.column) % k;
        const int diff = ((dst.row[pos] - src.row[pos]) % h + h) % h;
        if (diff != 0) cycle.marks |= std::uint64_t{1} << j;
    }
    return cycle;
}

MoveOutcome apply_moves(int k, std::span<const Move> moves) {
    MoveOutcome out;
    int node = 0;
    for (Move move : moves) {
        switch (move) {
            case Move::C:
                out.covered |= std::uint64_t{1} << node;
                node = (node + 1) % k;
                break;
            case Move::A:
                node = (node + k - 1) % k;
                out.covered |= std::uint64_t{1} << node;
                break;
            case Move::B:
                out.covered |= std::uint64_t{1} << node;
                break;
            case Move::D:
                out.covered |= std::uint64_t{1} << ((node + k - 1) % k);
                break;
        }
    }
    out.final_node = node;
    return out;
}

MoveOutcome apply_moves(const MarkedCycle& cycle, std::span<const Move> moves) {
    return apply_moves(cycle.k, moves);
}

bool is_valid(const MarkedCycle& cycle, std::span<const Move> moves) {
    if (moves.empty()) return false;
    const MoveOutcome out = apply_moves(cycle.k, moves);
    return out.final_node == cycle.x && (cycle.marks & ~out.covered) == 0;
}

int count_turns(std::span<const Move> moves) {
    int turns = 0;
    for (std::size_t i = 0; i + 2 < moves.size(); ++i) {
        if (moves[i] == Move::C && moves[i + 1] == Move::B && moves[i + 2] == Move::A) ++turns;
        if (moves[i] == Move::A && moves[i + 1] == Move::D && moves[i + 2] == Move::C) ++turns;
    }
    return turns;
}

}  // namespace dpillar
