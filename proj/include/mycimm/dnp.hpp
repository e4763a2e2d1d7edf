#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mycimm/certificate.hpp"
#include "mycimm/graph.hpp"

namespace mycimm {

// Distinct-neighbor witness: terminal index i -> a neighbor of terminals[i],
// the chosen neighbors pairwise distinct. Neighbors may themselves be
// terminals.
struct NeighborAssignment {
    std::vector<int> neighbor_of; // size t, host vertex ids

    friend bool operator==(const NeighborAssignment&, const NeighborAssignment&) = default;
};

// Auxiliary bipartite graph: left side the terminals, right side every host
// vertex adjacent to at least one terminal.
struct DnpBipartite {
    std::vector<int> left;                // terminal host ids, in terminal order
    std::vector<int> right;               // candidate neighbor host ids, ascending
    std::vector<std::vector<int>> adj;    // left index -> right indices, ascending
};

DnpBipartite build_dnp_bipartite(const Graph& g, const ImmersionCertificate& cert);

// Maximum matching as (left index, right index) pairs. Augmenting paths are
// tried from left vertices in ascending order, neighbors in ascending order,
// so the result is deterministic.
std::vector<std::pair<int, int>> max_matching(const DnpBipartite& bip);

// Neighbor assignment read off a maximum matching, or nullopt when no
// matching saturates the terminals.
std::optional<NeighborAssignment> check_dnp(const Graph& g, const ImmersionCertificate& cert);

// Proper edge coloring of K_n with at most n colors: (i+j) mod n for odd n,
// circle-method 1-factorization (n-1 rounds, one hub) for even n.
struct EdgeColoring {
    int order = 0;
    std::map<std::pair<int, int>, int> color; // unordered pair {i,j}, i < j
};

EdgeColoring proper_edge_coloring_complete(int n);

// When the saturating matching exists, returns the certificate unchanged with
// its assignment. Otherwise the Hall failure forces |B| = t-1 with every
// terminal adjacent to all of B, and the certificate is rebuilt on terminals
// b_1..b_{t-1}, a_t: direct edges a_t-b_i, and path b_i - a_k - b_j per pair
// {i,j}, with a_k the color of {i,j} in a proper edge coloring of K_{t-1}.
// The rebuilt certificate is verified and saturable before being returned.
std::pair<ImmersionCertificate, NeighborAssignment>
ensure_dnp(const Graph& g, const ImmersionCertificate& cert);

Json assignment_to_json(const NeighborAssignment& assign);

} // namespace mycimm
