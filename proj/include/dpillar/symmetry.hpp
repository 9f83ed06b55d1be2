#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpillar/topology.hpp"

namespace dpillar {

/// An element of the group underlying the digraph: a rotation index i plus k
/// exponents, standing for the word t_i^{p_i} t_{i+1}^{p_{i+1}} ... t_{i-1}^{p_{i-1}}.
/// The group has k * h^k elements, one per server.
struct GroupElement {
    int rotation = 0;
    std::vector<std::uint8_t> exponents;  // exponents[j] = p_j

    bool operator==(const GroupElement&) const = default;
};

enum class GeneratorFamily : std::uint8_t { A, B, C, D };

/// One generator: a family and an exponent q in [0, h). The q = 0 members of
/// the b and d families coincide with the identity and are excluded from the
/// generating set.
struct Generator {
    GeneratorFamily family;
    int q = 0;
};

GroupElement identity_element(const TopologyParams& params);

/// Right-multiplication by a single generator.
GroupElement multiply(const GroupElement& g, const Generator& s, const TopologyParams& params);

/// Right-multiplication by an arbitrary element, realized by decomposing the
/// right factor into generators and folding them on the right.
GroupElement group_mul(const GroupElement& lhs, const GroupElement& rhs,
                       const TopologyParams& params);

GroupElement inverse(const GroupElement& g, const TopologyParams& params);

/// The isomorphism onto servers: rotation becomes the column, exponent p_j
/// becomes row digit j.
ServerId phi(const GroupElement& g);
GroupElement phi_inverse(const ServerId& server, const TopologyParams& params);

/// The generating set S_0 (2n-2 elements, closed under inverses).
std::vector<Generator> generating_set(const TopologyParams& params);

EdgeKind edge_kind_of(GeneratorFamily family);

struct CayleyReport {
    TopologyParams params;
    std::uint64_t nodes_checked = 0;
    std::uint64_t edges_checked = 0;
    bool pass = false;
    std::vector<std::string> counterexamples;
};

/// Checks that right-multiplication by the generating set reproduces exactly
/// the typed out-edge set of every node (both directions of Lemma-style
/// correspondence: every generator edge is a digraph edge of the right kind,
/// and the counts match so every digraph edge arises this way).
CayleyReport check_cayley(const TopologyParams& params);

/// The node-symmetry witness: the translation u -> src^{-1} * u, an
/// automorphism sending src to the all-zero server in column 0.
class Automorphism {
public:
    Automorphism(const ServerId& src, const TopologyParams& params);

    ServerId operator()(const ServerId& server) const;

private:
    GroupElement src_inverse_;
    TopologyParams params_;
};

}  // namespace dpillar
