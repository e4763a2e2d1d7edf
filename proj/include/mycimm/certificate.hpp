#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mycimm/graph.hpp"

namespace mycimm {

using TerminalPair = std::pair<int, int>; // terminal indices a < b

// Witness of a K_t-immersion: t distinct terminals plus one simple path per
// clique edge, all paths pairwise edge-disjoint in the host.
struct ImmersionCertificate {
    int t = 0;
    std::vector<int> terminals;                      // host vertex ids, size t
    std::map<TerminalPair, std::vector<int>> paths;  // one per unordered pair

    friend bool operator==(const ImmersionCertificate&, const ImmersionCertificate&) = default;
};

enum class ViolationKind {
    duplicate_terminal,
    missing_path,
    malformed_path, // fewer than two vertices
    endpoint_mismatch,
    non_edge_step,
    repeated_vertex,
    edge_reuse,
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    TerminalPair pair{-1, -1};  // offending path, when applicable
    TerminalPair other{-1, -1}; // second path for edge_reuse
    std::array<int, 2> where{-1, -1}; // offending vertices or edge endpoints
    std::string detail;
};

struct VerificationReport {
    bool valid = false;
    std::vector<Violation> violations; // valid <=> empty
};

// Checks the full invariant set against the host and reports every violation.
// Structurally malformed certificates (vertex ids out of range, terminal
// count != t, path keys outside the terminal range) raise InputError instead
// of producing an "invalid" verdict.
VerificationReport verify_certificate(const Graph& g, const ImmersionCertificate& cert);

// Certificate whose paths are all single edges; the terminals must be
// pairwise adjacent.
ImmersionCertificate trivial_clique_certificate(const Graph& g,
                                                const std::vector<int>& terminals);

// Splits off adjacent edge pairs at adjacent edges uv, vw of a common vertex v:
// both are deleted and uw is added. InputError on a missing edge or u == w.
void split_off(Multigraph& mg, int u, int via, int w);

// Contracts every certificate path to a single edge by repeated split-offs
// (paths in key order, each contracted from its lower-keyed endpoint inward).
// The result contains a K_t on the terminal set; unused edges and isolated
// vertices are left in place.
Multigraph realize_by_splitting(const Graph& g, const ImmersionCertificate& cert);

Json certificate_to_json(const ImmersionCertificate& cert);
ImmersionCertificate certificate_from_json(const Json& j);
Json report_to_json(const VerificationReport& report);

} // namespace mycimm
