#include "dpillar/topology.hpp"

#include <charconv>
#include <sstream>

namespace dpillar {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t result = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) {
            throw std::invalid_argument("topology size overflows 64 bits");
        }
        result *= base;
    }
    return result;
}

int wrap(int value, int k) {
    int m = value % k;
    return m < 0 ? m + k : m;
}

}  // namespace

std::uint64_t TopologyParams::server_count() const {
    return static_cast<std::uint64_t>(k) * checked_pow(h(), k);
}

std::uint64_t TopologyParams::switch_count() const {
    return static_cast<std::uint64_t>(k) * checked_pow(h(), k - 1);
}

std::uint64_t TopologyParams::link_count() const {
    return 2 * server_count();
}

void TopologyParams::validate() const {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("n must be an even integer >= 2, got " +
                                    std::to_string(n));
    }
    if (k < 2 || k > 64) {
        throw std::invalid_argument("k must be in [2, 64], got " + std::to_string(k));
    }
    if (h() > 255) {
        throw std::invalid_argument("digit radix n/2 must fit a byte, got " +
                                    std::to_string(h()));
    }
    checked_pow(h(), k);  // reject sizes that overflow node indexing
}

TopologyParams make_params(int n, int k) {
    TopologyParams params{n, k};
    params.validate();
    return params;
}

char edge_kind_letter(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Clockwise: return 'c';
        case EdgeKind::AntiClockwise: return 'a';
        case EdgeKind::BasicStatic: return 'b';
        case EdgeKind::DecrementedStatic: return 'd';
    }
    return '?';
}

void validate_server(const ServerId& server, const TopologyParams& params) {
    if (server.column < 0 || server.column >= params.k) {
        throw std::invalid_argument("server column " + std::to_string(server.column) +
                                    " out of range [0, " + std::to_string(params.k) + ")");
    }
    if (static_cast<int>(server.row.size()) != params.k) {
        throw std::invalid_argument("server row must have exactly k digits");
    }
    for (std::uint8_t digit : server.row) {
        if (digit >= params.h()) {
            throw std::invalid_argument("server row digit " + std::to_string(digit) +
                                        " out of range [0, " + std::to_string(params.h()) + ")");
        }
    }
}

std::pair<SwitchId, SwitchId> adjacent_switches(const ServerId& server,
                                                const TopologyParams& params) {
    validate_server(server, params);
    const int k = params.k;
    const int c = server.column;

    auto drop_position = [&](int pos) {
        std::vector<std::uint8_t> name;
        name.reserve(k - 1);
        for (int i = 0; i < k; ++i) {
            if (i != pos) name.push_back(server.row[i]);
        }
        return name;
    };

    SwitchId right{c, drop_position(c)};
    SwitchId left{wrap(c - 1, k), drop_position(wrap(c - 1, k))};
    return {right, left};
}

ServerId neighbor(const ServerId& server, EdgeKind kind, int digit,
                  const TopologyParams& params) {
    validate_server(server, params);
    if (digit < 0 || digit >= params.h()) {
        throw std::invalid_argument("edge digit " + std::to_string(digit) +
                                    " out of range [0, " + std::to_string(params.h()) + ")");
    }
    const int k = params.k;
    const int c = server.column;

    ServerId next = server;
    switch (kind) {
        case EdgeKind::Clockwise:
            next.column = wrap(c + 1, k);
            next.row[c] = static_cast<std::uint8_t>(digit);
            break;
        case EdgeKind::AntiClockwise:
            next.column = wrap(c - 1, k);
            next.row[wrap(c - 1, k)] = static_cast<std::uint8_t>(digit);
            break;
        case EdgeKind::BasicStatic:
            if (server.row[c] == digit) {
                throw std::invalid_argument("degenerate move: b-edge digit equals current value");
            }
            next.row[c] = static_cast<std::uint8_t>(digit);
            break;
        case EdgeKind::DecrementedStatic:
            if (server.row[wrap(c - 1, k)] == digit) {
                throw std::invalid_argument("degenerate move: d-edge digit equals current value");
            }
            next.row[wrap(c - 1, k)] = static_cast<std::uint8_t>(digit);
            break;
    }
    return next;
}

std::uint64_t server_index(const ServerId& server, const TopologyParams& params) {
    validate_server(server, params);
    std::uint64_t value = 0;
    for (int i = params.k - 1; i >= 0; --i) {
        value = value * params.h() + server.row[i];
    }
    return static_cast<std::uint64_t>(server.column) * checked_pow(params.h(), params.k) + value;
}

ServerId server_from_index(std::uint64_t index, const TopologyParams& params) {
    const std::uint64_t rows = checked_pow(params.h(), params.k);
    if (index >= params.server_count()) {
        throw std::invalid_argument("server index out of range");
    }
    ServerId server;
    server.column = static_cast<int>(index / rows);
    std::uint64_t value = index % rows;
    server.row.resize(params.k);
    for (int i = 0; i < params.k; ++i) {
        server.row[i] = static_cast<std::uint8_t>(value % params.h());
        value /= params.h();
    }
    return server;
}

std::string format_server(const ServerId& server) {
    std::string out = std::to_string(server.column) + ":";
    for (std::size_t i = server.row.size(); i-- > 0;) {
        out += std::to_string(static_cast<int>(server.row[i]));
        if (i != 0) out += '.';
    }
    return out;
}

std::string format_switch(const SwitchId& sw) {
    std::string out = std::to_string(sw.column) + ":";
    for (std::size_t i = sw.name.size(); i-- > 0;) {
        out += std::to_string(static_cast<int>(sw.name[i]));
        if (i != 0) out += '.';
    }
    return out;
}

ServerId parse_server(const std::string& text, const TopologyParams& params) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("server '" + text + "' lacks the 'column:digits' separator");
    }
    ServerId server;
    try {
        server.column = std::stoi(text.substr(0, colon));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad server column in '" + text + "'");
    }

    std::vector<int> digits;  // leftmost first = position k-1 first
    std::stringstream rest(text.substr(colon + 1));
    std::string piece;
    while (std::getline(rest, piece, '.')) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc{} || ptr != piece.data() + piece.size()) {
            throw std::invalid_argument("bad server digit '" + piece + "' in '" + text + "'");
        }
        digits.push_back(value);
    }
    if (static_cast<int>(digits.size()) != params.k) {
        throw std::invalid_argument("server '" + text + "' must have exactly " +
                                    std::to_string(params.k) + " digits");
    }
    server.row.resize(params.k);
    for (int i = 0; i < params.k; ++i) {
        const int value = digits[params.k - 1 - i];
        if (value < 0 || value >= params.h()) {
            throw std::invalid_argument("server digit " + std::to_string(value) +
                                        " out of range in '" + text + "'");
        }
        server.row[i] = static_cast<std::uint8_t>(value);
    }
    validate_server(server, params);
    return server;
}

ServerRange enumerate_servers(const TopologyParams& params) {
    return ServerRange(params);
}

std::uint64_t count_links(const TopologyParams& params) {
    return params.link_count();
}

}  // namespace dpillar
