#pragma once

#include <string>

#include <json.hpp>

#include "mycimm/graph.hpp"

namespace mycimm {

// A vertex of the m-Mycielskian: (base vertex v, level i) or the apex w.
struct MycVertex {
    bool apex = false;
    int base = -1;
    int level = -1;

    static MycVertex at(int base, int level) { return {false, base, level}; }
    static MycVertex w() { return {true, -1, -1}; }

    friend bool operator==(const MycVertex&, const MycVertex&) = default;
};

// Human-readable name: "(v3,2)" for base vertex index 2 at level 2, "w" for the apex.
std::string myc_vertex_name(const MycVertex& v);

// The m-Mycielskian of a base graph: m stacked shadow levels plus an apex
// adjacent to the top level. Canonical index map: (v,i) -> i*n + v, apex -> m*n.
struct MycGraph {
    Graph base;
    int m = 0;
    Graph graph; // over canonical indices, with display labels filled in

    int base_n() const { return base.n(); }
    int apex_index() const { return m * base.n(); }
    int index_of(const MycVertex& v) const;
    MycVertex vertex_of(int index) const;
};

// Construction by direct enumeration: level-0 copy of G, cross edges
// (u,i)-(v,i+1) and (v,i)-(u,i+1) per base edge, apex edges (u,m-1)-w.
MycGraph mycielskian(const Graph& g, int m);

// Independent route to the same graph: direct product of G with the
// (m+1)-vertex path carrying a loop at coordinate 0, then all vertices with
// second coordinate m identified into the apex (duplicate edges merged).
// Matches mycielskian(g, m) whenever g has no isolated vertices; an isolated
// base vertex has no product edges, so its tower misses the apex edge.
Graph cone_crosscheck(const Graph& g, int m);

// JSON graph plus {"m": int, "base_n": int}.
Json myc_graph_to_json(const MycGraph& mg);

} // namespace mycimm
