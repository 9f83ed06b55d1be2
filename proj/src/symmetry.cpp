#include "dpillar/symmetry.hpp"

#include <algorithm>

namespace dpillar {

namespace {

void check_element(const GroupElement& g, const TopologyParams& params) {
    if (g.rotation < 0 || g.rotation >= params.k ||
        static_cast<int>(g.exponents.size()) != params.k) {
        throw std::invalid_argument("group element does not match the parameters");
    }
}

}  // namespace

GroupElement identity_element(const TopologyParams& params) {
    params.validate();
    GroupElement e;
    e.rotation = 0;
    e.exponents.assign(params.k, 0);
    return e;
}

GroupElement multiply(const GroupElement& g, const Generator& s, const TopologyParams& params) {
    check_element(g, params);
    if (s.q < 0 || s.q >= params.h()) {
        throw std::invalid_argument("generator exponent out of range");
    }
    const int k = params.k;
    const int h = params.h();
    const int i = g.rotation;
    const int prev = (i + k - 1) % k;

    GroupElement out = g;
    switch (s.family) {
        case GeneratorFamily::A:
            out.exponents[prev] = static_cast<std::uint8_t>((out.exponents[prev] + s.q) % h);
            out.rotation = prev;
            break;
        case GeneratorFamily::B:
            out.exponents[i] = static_cast<std::uint8_t>((out.exponents[i] + s.q) % h);
            break;
        case GeneratorFamily::C:
            out.exponents[i] = static_cast<std::uint8_t>((out.exponents[i] + s.q) % h);
            out.rotation = (i + 1) % k;
            break;
        case GeneratorFamily::D:
            out.exponents[prev] = static_cast<std::uint8_t>((out.exponents[prev] + s.q) % h);
            break;
    }
    return out;
}

GroupElement group_mul(const GroupElement& lhs, const GroupElement& rhs,
                       const TopologyParams& params) {
    check_element(lhs, params);
    check_element(rhs, params);
    // rhs = S_c(w_0) * S_c(w_1) * ... * S_c(w_{k-1}) * S_c(0)^rotation: the
    // first k factors deposit the exponents while circling once, the trailing
    // ones rotate into place.
    GroupElement out = lhs;
    for (int m = 0; m < params.k; ++m) {
        out = multiply(out, Generator{GeneratorFamily::C, rhs.exponents[m]}, params);
    }
    for (int t = 0; t < rhs.rotation; ++t) {
        out = multiply(out, Generator{GeneratorFamily::C, 0}, params);
    }
    return out;
}

GroupElement inverse(const GroupElement& g, const TopologyParams& params) {
    check_element(g, params);
    const int k = params.k;
    const int h = params.h();
    GroupElement inv;
    inv.rotation = (k - g.rotation) % k;
    inv.exponents.resize(k);
    for (int m = 0; m < k; ++m) {
        const int p = g.exponents[(m + g.rotation) % k];
        inv.exponents[m] = static_cast<std::uint8_t>((h - p) % h);
    }
    return inv;
}

ServerId phi(const GroupElement& g) {
    ServerId server;
    server.column = g.rotation;
    server.row = g.exponents;
    return server;
}

GroupElement phi_inverse(const ServerId& server, const TopologyParams& params) {
    validate_server(server, params);
    GroupElement g;
    g.rotation = server.column;
    g.exponents = server.row;
    return g;
}

std::vector<Generator> generating_set(const TopologyParams& params) {
    params.validate();
    std::vector<Generator> set;
    set.reserve(2 * params.n - 2);
    for (int q = 0; q < params.h(); ++q) {
        set.push_back(Generator{GeneratorFamily::A, q});
        set.push_back(Generator{GeneratorFamily::C, q});
    }
    for (int q = 1; q < params.h(); ++q) {
        set.push_back(Generator{GeneratorFamily::B, q});
        set.push_back(Generator{GeneratorFamily::D, q});
    }
    return set;
}

EdgeKind edge_kind_of(GeneratorFamily family) {
    switch (family) {
        case GeneratorFamily::A: return EdgeKind::AntiClockwise;
        case GeneratorFamily::B: return EdgeKind::BasicStatic;
        case GeneratorFamily::C: return EdgeKind::Clockwise;
        case GeneratorFamily::D: return EdgeKind::DecrementedStatic;
    }
    return EdgeKind::Clockwise;
}

CayleyReport check_cayley(const TopologyParams& params) {
    params.validate();
    CayleyReport report;
    report.params = params;
    const std::vector<Generator> gens = generating_set(params);

    auto note = [&](const std::string& line) {
        if (report.counterexamples.size() < 10) report.counterexamples.push_back(line);
    };

    bool ok = true;
    for (const ServerId& server : enumerate_servers(params)) {
        ++report.nodes_checked;
        const GroupElement g = phi_inverse(server, params);

        // Typed out-edges from the digraph definition.
        std::vector<std::pair<int, std::uint64_t>> digraph_edges;
        for (const EdgeKind kind :
             {EdgeKind::AntiClockwise, EdgeKind::BasicStatic, EdgeKind::Clockwise,
              EdgeKind::DecrementedStatic}) {
            for (int q = 0; q < params.h(); ++q) {
                if ((kind == EdgeKind::BasicStatic || kind == EdgeKind::DecrementedStatic)) {
                    const int pos = kind == EdgeKind::BasicStatic
                                        ? server.column
                                        : (server.column + params.k - 1) % params.k;
                    if (server.row[pos] == q) continue;  // would be a self-loop
                }
                digraph_edges.emplace_back(static_cast<int>(kind),
                                           server_index(neighbor(server, kind, q, params), params));
            }
        }

        // Typed out-edges from the generating set.
        std::vector<std::pair<int, std::uint64_t>> cayley_edges;
        for (const Generator& s : gens) {
            const ServerId target = phi(multiply(g, s, params));
            cayley_edges.emplace_back(static_cast<int>(edge_kind_of(s.family)),
                                      server_index(target, params));
        }
        report.edges_checked += cayley_edges.size();

        std::sort(digraph_edges.begin(), digraph_edges.end());
        std::sort(cayley_edges.begin(), cayley_edges.end());
        if (digraph_edges != cayley_edges) {
            ok = false;
            note("edge sets differ at " + format_server(server));
        }
    }
    report.pass = ok;
    return report;
}

Automorphism::Automorphism(const ServerId& src, const TopologyParams& params)
    : src_inverse_(inverse(phi_inverse(src, params), params)), params_(params) {}

ServerId Automorphism::operator()(const ServerId& server) const {
    return phi(group_mul(src_inverse_, phi_inverse(server, params_), params_));
}

}  // namespace dpillar
