#pragma once

#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpillar {

/// Parameters of a DPillar network: n-port switches (n even), k server
/// columns, rows indexed by k digits of radix h = n/2.
struct TopologyParams {
    int n = 0;
    int k = 0;

    int h() const { return n / 2; }

    std::uint64_t server_count() const;  // k * h^k
    std::uint64_t switch_count() const;  // k * h^(k-1)
    std::uint64_t link_count() const;    // 2 * k * h^k server-switch links

    // Throws std::invalid_argument if the parameters are outside the
    // supported range (n even, n >= 2, 2 <= k <= 64, counts fit in 64 bits).
    void validate() const;
};

TopologyParams make_params(int n, int k);

/// A server (c, v_{k-1}...v_0). row[i] holds the digit at position i, so the
/// textual form prints row back-to-front. Column arithmetic is modulo k.
struct ServerId {
    int column = 0;
    std::vector<std::uint8_t> row;

    bool operator==(const ServerId&) const = default;
};

/// A switch between server columns c and c+1; its name has k-1 digits
/// (name[i] = digit at position i of the retained digits).
struct SwitchId {
    int column = 0;
    std::vector<std::uint8_t> name;

    bool operator==(const SwitchId&) const = default;
};

enum class EdgeKind : std::uint8_t {
    Clockwise,         // c-edge: column c -> c+1, rewrites digit c
    AntiClockwise,     // a-edge: column c -> c-1, rewrites digit c-1
    BasicStatic,       // b-edge: stays in column c, rewrites digit c
    DecrementedStatic  // d-edge: stays in column c, rewrites digit c-1
};

char edge_kind_letter(EdgeKind kind);

void validate_server(const ServerId& server, const TopologyParams& params);

/// Switches adjacent to a server: .first is the right switch (column c,
/// carries b/c-edges), .second the left switch (column c-1, a/d-edges).
std::pair<SwitchId, SwitchId> adjacent_switches(const ServerId& server,
                                                const TopologyParams& params);

/// The neighbour reached over one edge of the given kind, with the rewritten
/// digit set to `digit`. For b/d edges the digit must differ from the current
/// value (otherwise the edge would be a self-loop and is rejected).
ServerId neighbor(const ServerId& server, EdgeKind kind, int digit,
                  const TopologyParams& params);

/// Dense node index: column * h^k + sum_i row[i] * h^i.
std::uint64_t server_index(const ServerId& server, const TopologyParams& params);
ServerId server_from_index(std::uint64_t index, const TopologyParams& params);

// Textual forms: server "c:d_{k-1}.d_{k-2}. ... .d_0", switch the same with
// k-1 digits. Digits are decimal, so radices above 10 stay unambiguous.
std::string format_server(const ServerId& server);
std::string format_switch(const SwitchId& sw);
ServerId parse_server(const std::string& text, const TopologyParams& params);

/// Lazy range over all servers of the instance in index order.
class ServerRange {
public:
    explicit ServerRange(const TopologyParams& params) : params_(params) {}

    class iterator {
    public:
        using value_type = ServerId;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator(const TopologyParams& params, std::uint64_t index)
            : params_(&params), index_(index) {}

        ServerId operator*() const { return server_from_index(index_, *params_); }
        iterator& operator++() { ++index_; return *this; }
        iterator operator++(int) { auto copy = *this; ++index_; return copy; }
        bool operator==(const iterator& other) const { return index_ == other.index_; }

    private:
        const TopologyParams* params_;
        std::uint64_t index_;
    };

    iterator begin() const { return iterator(params_, 0); }
    iterator end() const { return iterator(params_, params_.server_count()); }

private:
    TopologyParams params_;
};

ServerRange enumerate_servers(const TopologyParams& params);

/// Directed server->switch link count (2 per server, one per NIC port).
std::uint64_t count_links(const TopologyParams& params);

}  // namespace dpillar
